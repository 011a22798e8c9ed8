#include "brickmix/gates.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace brickmix {

const char* gate_set_name(GateSetKind kind) {
  return kind == GateSetKind::S8 ? "s8" : "des2";
}

GateSetKind gate_set_from_name(const std::string& name) {
  if (name == "s8") return GateSetKind::S8;
  if (name == "des2") return GateSetKind::DES2;
  throw Error(ErrorKind::Config, "unknown gate set: " + name);
}

bool Gate3::valid() const {
  std::array<bool, 8> seen{};
  for (auto v : table) {
    if (v > 7 || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Gate3 Gate3::inverse() const {
  Gate3 inv;
  for (int p = 0; p < 8; p++) inv.table[table[p]] = static_cast<std::uint8_t>(p);
  return inv;
}

Gate3 Gate3::then(const Gate3& g) const {
  Gate3 out;
  for (int p = 0; p < 8; p++) out.table[p] = g.table[table[p]];
  return out;
}

bool DES2Gate::valid() const {
  if (target < 1 || target > 3) return false;
  for (auto v : f)
    if (v > 1) return false;
  return true;
}

Gate3 DES2Gate::to_gate3() const {
  if (!valid()) throw Error(ErrorKind::Parameter, "invalid DES2 gate");
  Gate3 g;
  for (int p = 0; p < 8; p++) {
    int b[3] = {(p >> 2) & 1, (p >> 1) & 1, p & 1};
    int x1, x2;
    switch (target) {
      case 1: x1 = b[1]; x2 = b[2]; break;
      case 2: x1 = b[0]; x2 = b[2]; break;
      default: x1 = b[0]; x2 = b[1]; break;
    }
    b[target - 1] ^= f[2 * x1 + x2];
    g.table[p] = static_cast<std::uint8_t>((b[0] << 2) | (b[1] << 1) | b[2]);
  }
  return g;
}

Gate3 gate_table(const GateValue& g) {
  if (std::holds_alternative<Gate3>(g)) return std::get<Gate3>(g);
  return std::get<DES2Gate>(g).to_gate3();
}

GateValue gate_inverse(const GateValue& g) {
  if (std::holds_alternative<Gate3>(g)) return std::get<Gate3>(g).inverse();
  return std::get<DES2Gate>(g);  // involution
}

void check_window(const std::array<int, 3>& window, int n) {
  for (int w : window)
    if (w < 1 || w > n) throw Error(ErrorKind::Placement, "gate window out of range");
  if (window[0] == window[1] || window[0] == window[2] || window[1] == window[2])
    throw Error(ErrorKind::Placement, "gate window wires must be distinct");
}

void Circuit::validate() const {
  if (n < 1) throw Error(ErrorKind::Dimension, "circuit needs n >= 1");
  for (const auto& pg : gates) {
    check_window(pg.window, n);
    if (!gate_table(pg.gate).valid())
      throw Error(ErrorKind::Structure, "circuit contains a non-permutation gate");
  }
  if (!layers.empty()) {
    long long total = std::accumulate(layers.begin(), layers.end(), 0LL);
    if (total != static_cast<long long>(gates.size()))
      throw Error(ErrorKind::Structure, "layer counts do not sum to the gate count");
  }
}

bool circuit_equal(const Circuit& a, const Circuit& b) {
  if (a.n != b.n || a.gates.size() != b.gates.size()) return false;
  for (std::size_t i = 0; i < a.gates.size(); i++) {
    if (a.gates[i].window != b.gates[i].window) return false;
    if (!(gate_table(a.gates[i].gate) == gate_table(b.gates[i].gate))) return false;
  }
  return true;
}

BitString apply_gate(const PlacedGate& pg, const BitString& x) {
  check_window(pg.window, x.n());
  Gate3 g = gate_table(pg.gate);
  int p = (x.bit(pg.window[0]) << 2) | (x.bit(pg.window[1]) << 1) | x.bit(pg.window[2]);
  int q = g.apply(p);
  BitString y = x;
  y.set_bit(pg.window[0], (q >> 2) & 1);
  y.set_bit(pg.window[1], (q >> 1) & 1);
  y.set_bit(pg.window[2], q & 1);
  return y;
}

StateIndex apply_gate_word(const PlacedGate& pg, StateIndex x) {
  Gate3 g = gate_table(pg.gate);
  int a0 = pg.window[0] - 1, a1 = pg.window[1] - 1, a2 = pg.window[2] - 1;
  int p = static_cast<int>(((x >> a0) & 1) << 2 | ((x >> a1) & 1) << 1 | ((x >> a2) & 1));
  int q = g.apply(p);
  x &= ~((StateIndex(1) << a0) | (StateIndex(1) << a1) | (StateIndex(1) << a2));
  x |= (StateIndex((q >> 2) & 1) << a0) | (StateIndex((q >> 1) & 1) << a1) |
       (StateIndex(q & 1) << a2);
  return x;
}

BitString circuit_apply(const Circuit& c, const BitString& x) {
  if (x.n() != c.n) throw Error(ErrorKind::Dimension, "circuit_apply: wire count mismatch");
  BitString y = x;
  for (const auto& pg : c.gates) y = apply_gate(pg, y);
  return y;
}

StateIndex circuit_apply_word(const Circuit& c, StateIndex x) {
  for (const auto& pg : c.gates) x = apply_gate_word(pg, x);
  return x;
}

Circuit circuit_invert(const Circuit& c) {
  Circuit inv = c;
  inv.gates.clear();
  inv.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it)
    inv.gates.push_back(PlacedGate{gate_inverse(it->gate), it->window});
  std::reverse(inv.layers.begin(), inv.layers.end());
  return inv;
}

std::vector<Gate3> enumerate_gate_set_s8() {
  std::vector<Gate3> out;
  out.reserve(40320);
  Gate3 g;  // identity
  std::array<std::uint8_t, 8>& t = g.table;
  std::sort(t.begin(), t.end());
  do {
    out.push_back(g);
  } while (std::next_permutation(t.begin(), t.end()));
  return out;
}

std::vector<DES2Gate> enumerate_gate_set_des2() {
  std::vector<DES2Gate> out;
  out.reserve(48);
  for (int target = 1; target <= 3; target++) {
    for (int bits = 0; bits < 16; bits++) {
      DES2Gate g;
      g.target = target;
      for (int j = 0; j < 4; j++) g.f[j] = (bits >> j) & 1;
      out.push_back(g);
    }
  }
  return out;
}

std::size_t gate_set_size(GateSetKind kind) {
  return kind == GateSetKind::S8 ? 40320u : 48u;
}

GateValue sample_gate(GateSetKind kind, Rng& rng) {
  if (kind == GateSetKind::S8) {
    Gate3 g;
    for (int i = 7; i > 0; i--) {
      int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
      std::swap(g.table[i], g.table[j]);
    }
    return g;
  }
  auto idx = rng.below(48);
  DES2Gate g;
  g.target = static_cast<int>(idx / 16) + 1;
  for (int j = 0; j < 4; j++) g.f[j] = (idx >> j) & 1;
  return g;
}

std::string circuit_to_json(const Circuit& c) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["n"] = c.n;
  j["gate_set"] = gate_set_name(c.gate_set);
  j["gates"] = nlohmann::ordered_json::array();
  for (const auto& pg : c.gates) {
    nlohmann::ordered_json gj;
    gj["window"] = pg.window;
    if (std::holds_alternative<Gate3>(pg.gate)) {
      gj["perm"] = std::get<Gate3>(pg.gate).table;
    } else {
      const auto& d = std::get<DES2Gate>(pg.gate);
      gj["f"] = d.f;
      gj["target"] = d.target;
    }
    j["gates"].push_back(std::move(gj));
  }
  j["layers"] = c.layers;
  j["seed"] = c.seed;
  return j.dump();
}

Circuit circuit_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Io, std::string("circuit JSON parse error: ") + e.what());
  }
  try {
    if (j.at("version").get<int>() != 1)
      throw Error(ErrorKind::Io, "unsupported circuit JSON version");
    Circuit c;
    c.n = j.at("n").get<int>();
    c.gate_set = gate_set_from_name(j.at("gate_set").get<std::string>());
    for (const auto& gj : j.at("gates")) {
      PlacedGate pg;
      auto w = gj.at("window").get<std::vector<int>>();
      if (w.size() != 3) throw Error(ErrorKind::Io, "gate window must have 3 wires");
      pg.window = {w[0], w[1], w[2]};
      if (gj.contains("perm")) {
        auto t = gj.at("perm").get<std::vector<int>>();
        if (t.size() != 8) throw Error(ErrorKind::Io, "gate perm must have 8 entries");
        Gate3 g;
        for (int i = 0; i < 8; i++) g.table[i] = static_cast<std::uint8_t>(t[i]);
        if (!g.valid()) throw Error(ErrorKind::Io, "gate perm is not a permutation");
        pg.gate = g;
      } else {
        auto f = gj.at("f").get<std::vector<int>>();
        if (f.size() != 4) throw Error(ErrorKind::Io, "DES2 f must have 4 bits");
        DES2Gate g;
        for (int i = 0; i < 4; i++) g.f[i] = static_cast<std::uint8_t>(f[i]);
        g.target = gj.at("target").get<int>();
        if (!g.valid()) throw Error(ErrorKind::Io, "invalid DES2 gate in JSON");
        pg.gate = g;
      }
      c.gates.push_back(std::move(pg));
    }
    c.layers = j.at("layers").get<std::vector<int>>();
    c.seed = j.at("seed").get<std::string>();
    c.validate();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Io, std::string("circuit JSON field error: ") + e.what());
  }
}

}  // namespace brickmix
