#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brickmix/common.hpp"

namespace brickmix {

using StateIndex = std::uint64_t;

// An n-bit string. Wires are addressed 1..n to match the rest of the library;
// bit(1) is the lowest-order bit of the packed word.
class BitString {
 public:
  BitString() = default;
  explicit BitString(int n) : bits_(n, 0) {}
  BitString(int n, StateIndex word);

  static BitString parse(const std::string& text);  // e.g. "0110"

  int n() const { return static_cast<int>(bits_.size()); }
  int bit(int a) const { check(a); return bits_[a - 1]; }
  void set_bit(int a, int value);

  StateIndex word() const;           // sum of bit(a) * 2^(a-1), needs n <= 63
  std::string to_string() const;     // written bit(1) first

  bool operator==(const BitString&) const = default;

 private:
  void check(int a) const {
    if (a < 1 || a > n()) throw Error(ErrorKind::Range, "bit coordinate out of range");
  }
  std::vector<std::uint8_t> bits_;
};

// A k-tuple of n-bit strings, identified with its packed index in [0, 2^{nk}):
// index = sum over strings i and coordinates a of bit(i,a) * 2^{(i-1)n+(a-1)}.
struct TupleState {
  int n = 0;
  int k = 0;
  std::vector<BitString> strings;

  StateIndex index() const { return pack_tuple(strings); }

  static StateIndex pack_tuple(const std::vector<BitString>& strings);
  static TupleState unpack_tuple(StateIndex index, int n, int k);
};

// Set of coordinates where the two strings disagree (1-based, ascending).
std::vector<int> hamming_delta(const BitString& x, const BitString& y);

inline int hamming_distance(const BitString& x, const BitString& y) {
  return static_cast<int>(hamming_delta(x, y).size());
}

// Square-grid view of n = side^2 wires, row-major: coordinate of cell (i,j)
// is a = (i-1)*side + j with i the row and j the column, both in 1..side.
class GridView {
 public:
  explicit GridView(int n);

  int side() const { return side_; }
  int coord(int i, int j) const;                 // grid cell -> wire
  std::vector<int> row_coords(int i) const;      // ascending
  std::vector<int> col_coords(int j) const;      // ascending

  BitString row(const TupleState& t, int ell, int i) const;
  BitString col(const TupleState& t, int ell, int j) const;

 private:
  int side_ = 0;
};

// Index of one Fourier character: a subset S_i of [n] per string. The all-empty
// index is the constant character.
struct CharacterIndex {
  std::vector<std::vector<int>> sets;  // sets[i] sorted ascending, 1-based

  static CharacterIndex empty(int k) { return CharacterIndex{std::vector<std::vector<int>>(k)}; }

  // Characters also pack into a state index: coordinate a of string i is in
  // the mask iff a is in S_i. Round-trips with the TupleState bit layout.
  StateIndex to_mask(int n, int k) const;
  static CharacterIndex from_mask(StateIndex mask, int n, int k);

  std::string to_string() const;
};

// chi(X) = prod over i, a in S_i of the +-1 value of bit(i,a), encoding 0 <-> +1
// and 1 <-> -1. Equals (-1)^popcount(mask & index).
int character_eval(const CharacterIndex& chi, const TupleState& x);

inline int character_eval_packed(StateIndex mask, StateIndex state) {
  return (__builtin_popcountll(mask & state) & 1) ? -1 : +1;
}

}  // namespace brickmix
