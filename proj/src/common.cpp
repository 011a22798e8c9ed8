#include "brickmix/common.hpp"

#include <omp.h>

#include <cstdlib>

namespace brickmix {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Range: return "range";
    case ErrorKind::Placement: return "placement";
    case ErrorKind::Architecture: return "architecture";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::Structure: return "structure";
    case ErrorKind::Model: return "model";
    case ErrorKind::Config: return "config";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::Parameter, "Rng::below: bound must be positive");
  // rejection sampling over the largest multiple of bound
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

double Rng::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

static std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_stream(std::uint64_t master_seed, std::uint64_t stream_index) {
  return splitmix64(master_seed ^ splitmix64(stream_index + 1));
}

std::uint64_t parse_seed(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::Config, "empty seed");
  try {
    std::size_t pos = 0;
    std::uint64_t v;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
      v = std::stoull(text.substr(2), &pos, 16);
      pos += 2;
    } else {
      v = std::stoull(text, &pos, 10);
    }
    if (pos != text.size()) throw Error(ErrorKind::Config, "trailing junk in seed: " + text);
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Config, "cannot parse seed: " + text);
  }
}

void apply_thread_cap_from_env() {
  const char* cap = std::getenv("BRICKMIX_THREADS");
  if (!cap) return;
  int v = std::atoi(cap);
  if (v > 0) omp_set_num_threads(v);
}

}  // namespace brickmix
