#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "brickmix/common.hpp"
#include "brickmix/gates.hpp"

namespace brickmix {

enum class ArchKind { FullyRandom, NN1D, Brickwork1D, Lattice2D, LatticeD };

const char* arch_kind_name(ArchKind kind);
ArchKind arch_kind_from_name(const std::string& name);

// Circuit distribution descriptor.
//   FullyRandom:  t gates, each on a uniformly random ascending 3-subset of [n]
//   NN1D:         t gates at uniformly random nearest-neighbor windows
//   Brickwork1D:  t brickwork layers (both staggered passes per layer)
//   Lattice2D:    n = side^2; t+1 row passes interleaved with t column passes,
//                 each pass running `side` independent base circuits in parallel
//   LatticeD:     n = side^dims; recursive row/column construction, one level
//                 per dimension, with per-level round counts
struct ArchDescriptor {
  ArchKind kind = ArchKind::Brickwork1D;
  int n = 0;
  int side = 0;  // lattice kinds
  int dims = 0;  // LatticeD only
  int t = 0;     // gates / layers / rounds, depending on kind
  GateSetKind gate_set = GateSetKind::DES2;
  std::shared_ptr<ArchDescriptor> base;  // lattice kinds: 1D circuit on `side` wires
  // LatticeD: rounds for levels 2..dims (level_rounds[0] is level 2). When
  // empty, every level uses kLatticeDefaultRounds.
  std::vector<int> level_rounds;

  void validate() const;
};

// Round-count floor used by the recursive lattice construction when no
// per-level override is given.
inline constexpr int kLatticeDefaultRounds = 2500;

// Windows of one brickwork layer: first all nearest-neighbor windows starting
// at a = 1 mod 3 (a <= n-2, ascending), then those starting at a = 2 mod 3.
// Windows within one pass are pairwise disjoint.
std::vector<std::array<int, 3>> brickwork_layer_windows(int n);

Circuit sample_circuit(const ArchDescriptor& desc, Rng& rng);

struct CircuitStats {
  std::size_t size = 0;          // gate count
  int depth = 0;                 // greedy disjoint-window layering
  std::vector<int> wire_coverage;  // wires touched, ascending
};

CircuitStats circuit_stats(const Circuit& c);

std::string descriptor_to_json(const ArchDescriptor& desc);
ArchDescriptor descriptor_from_json(const std::string& text);

}  // namespace brickmix
