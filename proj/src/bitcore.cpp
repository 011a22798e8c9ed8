#include "brickmix/bitcore.hpp"

#include <cmath>

namespace brickmix {

BitString::BitString(int n, StateIndex word) : bits_(n, 0) {
  for (int a = 1; a <= n; a++) bits_[a - 1] = (word >> (a - 1)) & 1;
}

BitString BitString::parse(const std::string& text) {
  BitString out(static_cast<int>(text.size()));
  for (std::size_t i = 0; i < text.size(); i++) {
    if (text[i] == '0') continue;
    if (text[i] == '1') out.bits_[i] = 1;
    else throw Error(ErrorKind::Parameter, "bit string must contain only 0 and 1");
  }
  return out;
}

void BitString::set_bit(int a, int value) {
  check(a);
  if (value != 0 && value != 1) throw Error(ErrorKind::Parameter, "bit value must be 0 or 1");
  bits_[a - 1] = static_cast<std::uint8_t>(value);
}

StateIndex BitString::word() const {
  if (n() > 63) throw Error(ErrorKind::Capacity, "bit string too wide to pack into a word");
  StateIndex w = 0;
  for (int a = n(); a >= 1; a--) w = (w << 1) | bits_[a - 1];
  return w;
}

std::string BitString::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); i++) s[i] = bits_[i] ? '1' : '0';
  return s;
}

StateIndex TupleState::pack_tuple(const std::vector<BitString>& strings) {
  if (strings.empty()) throw Error(ErrorKind::Dimension, "pack_tuple: need k >= 1 strings");
  int n = strings[0].n();
  int k = static_cast<int>(strings.size());
  for (const auto& s : strings)
    if (s.n() != n) throw Error(ErrorKind::Dimension, "pack_tuple: unequal string lengths");
  if (static_cast<long long>(n) * k > 63)
    throw Error(ErrorKind::Capacity, "pack_tuple: nk exceeds 63 bits");
  StateIndex index = 0;
  for (int i = k; i >= 1; i--) {
    for (int a = n; a >= 1; a--) index = (index << 1) | static_cast<StateIndex>(strings[i - 1].bit(a));
  }
  return index;
}

TupleState TupleState::unpack_tuple(StateIndex index, int n, int k) {
  if (n < 1 || k < 1) throw Error(ErrorKind::Dimension, "unpack_tuple: need n,k >= 1");
  if (static_cast<long long>(n) * k > 63)
    throw Error(ErrorKind::Capacity, "unpack_tuple: nk exceeds 63 bits");
  if (index >= (StateIndex(1) << (static_cast<unsigned>(n) * k)))
    throw Error(ErrorKind::Range, "unpack_tuple: index out of range");
  TupleState t;
  t.n = n;
  t.k = k;
  t.strings.reserve(k);
  for (int i = 0; i < k; i++) {
    StateIndex w = (index >> (static_cast<unsigned>(i) * n)) & ((StateIndex(1) << n) - 1);
    t.strings.emplace_back(n, w);
  }
  return t;
}

std::vector<int> hamming_delta(const BitString& x, const BitString& y) {
  if (x.n() != y.n()) throw Error(ErrorKind::Dimension, "hamming_delta: unequal lengths");
  std::vector<int> delta;
  for (int a = 1; a <= x.n(); a++)
    if (x.bit(a) != y.bit(a)) delta.push_back(a);
  return delta;
}

GridView::GridView(int n) {
  int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (side < 1 || side * side != n)
    throw Error(ErrorKind::Parameter, "GridView: n must be a perfect square");
  side_ = side;
}

int GridView::coord(int i, int j) const {
  if (i < 1 || i > side_ || j < 1 || j > side_)
    throw Error(ErrorKind::Range, "GridView: cell out of range");
  return (i - 1) * side_ + j;
}

std::vector<int> GridView::row_coords(int i) const {
  std::vector<int> out(side_);
  for (int j = 1; j <= side_; j++) out[j - 1] = coord(i, j);
  return out;
}

std::vector<int> GridView::col_coords(int j) const {
  std::vector<int> out(side_);
  for (int i = 1; i <= side_; i++) out[i - 1] = coord(i, j);
  return out;
}

BitString GridView::row(const TupleState& t, int ell, int i) const {
  if (ell < 1 || ell > t.k) throw Error(ErrorKind::Range, "GridView: string index out of range");
  BitString out(side_);
  for (int j = 1; j <= side_; j++) out.set_bit(j, t.strings[ell - 1].bit(coord(i, j)));
  return out;
}

BitString GridView::col(const TupleState& t, int ell, int j) const {
  if (ell < 1 || ell > t.k) throw Error(ErrorKind::Range, "GridView: string index out of range");
  BitString out(side_);
  for (int i = 1; i <= side_; i++) out.set_bit(i, t.strings[ell - 1].bit(coord(i, j)));
  return out;
}

StateIndex CharacterIndex::to_mask(int n, int k) const {
  if (static_cast<int>(sets.size()) != k)
    throw Error(ErrorKind::Dimension, "CharacterIndex: wrong number of sets");
  if (static_cast<long long>(n) * k > 63)
    throw Error(ErrorKind::Capacity, "CharacterIndex: nk exceeds 63 bits");
  StateIndex mask = 0;
  for (int i = 0; i < k; i++) {
    for (int a : sets[i]) {
      if (a < 1 || a > n) throw Error(ErrorKind::Range, "CharacterIndex: coordinate out of range");
      mask |= StateIndex(1) << (static_cast<unsigned>(i) * n + (a - 1));
    }
  }
  return mask;
}

CharacterIndex CharacterIndex::from_mask(StateIndex mask, int n, int k) {
  CharacterIndex chi = CharacterIndex::empty(k);
  for (int i = 0; i < k; i++)
    for (int a = 1; a <= n; a++)
      if ((mask >> (static_cast<unsigned>(i) * n + (a - 1))) & 1) chi.sets[i].push_back(a);
  return chi;
}

std::string CharacterIndex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); i++) {
    if (i) out += ";";
    out += "{";
    for (std::size_t j = 0; j < sets[i].size(); j++) {
      if (j) out += ",";
      out += std::to_string(sets[i][j]);
    }
    out += "}";
  }
  return out;
}

int character_eval(const CharacterIndex& chi, const TupleState& x) {
  if (static_cast<int>(chi.sets.size()) != x.k)
    throw Error(ErrorKind::Dimension, "character_eval: k mismatch");
  int parity = 0;
  for (int i = 0; i < x.k; i++)
    for (int a : chi.sets[i]) parity ^= x.strings[i].bit(a);
  return parity ? -1 : +1;
}

}  // namespace brickmix
