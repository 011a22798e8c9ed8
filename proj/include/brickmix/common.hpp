#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace brickmix {

inline constexpr const char* kVersion = "0.1.0";

enum class ErrorKind {
  Dimension,     // mismatched lengths / wire counts
  Range,         // index out of range
  Placement,     // gate window invalid for the circuit
  Architecture,  // bad architecture descriptor
  Parameter,     // bad operation parameter
  Capacity,      // state space exceeds the configured caps
  Structure,     // a generator is not a permutation, etc.
  Model,         // an operator violated a model assumption at runtime
  Config,        // bad CLI / run configuration
  Io,            // file errors
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind);

// Deterministic 64-bit generator. All randomized operations in this library
// take an explicit Rng; there is no global randomness. Bounded draws use
// rejection sampling so sequences do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {
    // warm up so nearby seeds decorrelate quickly
    for (int i = 0; i < 4; i++) next();
  }

  std::uint64_t next() {
    // xorshift* variant; fixed here to keep streams stable across platforms
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1Dull;
  }

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound);

  double unit();  // uniform in [0,1)

 private:
  std::uint64_t state_;
};

// Stream derivation rule for concurrent sampling: independent consumers use
// derive_stream(master, 0), derive_stream(master, 1), ...
std::uint64_t derive_stream(std::uint64_t master_seed, std::uint64_t stream_index);

// Parses a seed given either as a decimal integer or as 0x-prefixed hex.
std::uint64_t parse_seed(const std::string& text);

// Applies the BRICKMIX_THREADS cap to OpenMP, if the variable is set.
void apply_thread_cap_from_env();

}  // namespace brickmix
