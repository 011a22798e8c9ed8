#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "brickmix/bitcore.hpp"
#include "brickmix/common.hpp"

namespace brickmix {

enum class GateSetKind { S8, DES2 };

const char* gate_set_name(GateSetKind kind);
GateSetKind gate_set_from_name(const std::string& name);

// A 3-bit gate as a permutation of the 8 window patterns. A pattern packs the
// window bits with window[0] as the high bit: p = 4*b0 + 2*b1 + b2.
struct Gate3 {
  std::array<std::uint8_t, 8> table{0, 1, 2, 3, 4, 5, 6, 7};

  static Gate3 identity() { return Gate3{}; }
  bool valid() const;
  Gate3 inverse() const;
  int apply(int pattern) const { return table[pattern]; }
  // this gate first, then g
  Gate3 then(const Gate3& g) const;

  bool operator==(const Gate3&) const = default;
};

// (x, b) -> (x, b xor f(x)): the bit at `target` (1..3, position within the
// window) is flipped by f of the two remaining window bits, read in window
// order. Always an involution.
struct DES2Gate {
  std::array<std::uint8_t, 4> f{0, 0, 0, 0};  // f[2*x1 + x2]
  int target = 3;

  bool valid() const;
  Gate3 to_gate3() const;
  DES2Gate inverse() const { return *this; }

  bool operator==(const DES2Gate&) const = default;
};

using GateValue = std::variant<Gate3, DES2Gate>;

Gate3 gate_table(const GateValue& g);
GateValue gate_inverse(const GateValue& g);

struct PlacedGate {
  GateValue gate;
  std::array<int, 3> window{1, 2, 3};  // distinct wires, 1-based
};

struct Circuit {
  int n = 0;
  GateSetKind gate_set = GateSetKind::DES2;
  std::vector<PlacedGate> gates;   // applied first to last
  std::vector<int> layers;         // gate count per layer; empty = unlayered
  std::string seed;                // provenance; not part of circuit identity
  std::string arch_tag;            // in-memory note; never serialized

  void validate() const;
};

// Semantic equality: same wire count and same gate list (window + induced
// permutation); metadata is ignored.
bool circuit_equal(const Circuit& a, const Circuit& b);

void check_window(const std::array<int, 3>& window, int n);

BitString apply_gate(const PlacedGate& pg, const BitString& x);
StateIndex apply_gate_word(const PlacedGate& pg, StateIndex x);  // packed string

BitString circuit_apply(const Circuit& c, const BitString& x);
StateIndex circuit_apply_word(const Circuit& c, StateIndex x);

Circuit circuit_invert(const Circuit& c);

// The two gate sets of the paper's constructions: all of S_8 (40320 gates) and
// the 48 (f, target) pairs of DES2 form. Both carry uniform weights; DES2
// pairs inducing the same permutation (f identically 0) are kept with their
// multiplicity.
std::vector<Gate3> enumerate_gate_set_s8();
std::vector<DES2Gate> enumerate_gate_set_des2();

std::size_t gate_set_size(GateSetKind kind);  // 40320 or 48

GateValue sample_gate(GateSetKind kind, Rng& rng);

std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

}  // namespace brickmix
