#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "turaev/hochschild.hpp"

namespace turaev {

/// 2-character of the homology bundle: for commuting g and h,
/// chi(g, h) is the trace of the transport of g on the grade-h piece
/// (well typed exactly because gh = hg makes that map an endomorphism).
/// The table's domain is exactly the set of commuting ordered pairs.
template <Field K>
struct CharacterTable {
  std::map<std::pair<int, int>, K> entries;

  const K& at(int g, int h) const {
    const auto it = entries.find({g, h});
    if (it == entries.end())
      throw DomainError("2-character is only defined on commuting pairs; (" +
                        std::to_string(g) + ", " + std::to_string(h) + ") do not commute");
    return it->second;
  }

  friend bool operator==(const CharacterTable&, const CharacterTable&) = default;
};

template <Field K>
CharacterTable<K> two_character(const HochschildBundle<K>& HB) {
  CharacterTable<K> table;
  const FiniteGroup& G = HB.group();
  for (const auto& [g, h] : G.commuting_pairs()) {
    const Matrix<K>& t = HB.transport(g, h);
    if (t.rows() != t.cols() || G.conj(g, h) != h)
      throw DomainError("transport on a commuting pair is not an endomorphism");
    table.entries[{g, h}] = t.trace();
  }
  return table;
}

/// chi(k g k^{-1}, k h k^{-1}) = chi(g, h), exhaustively over all k.
template <Field K>
Report verify_two_class(const CharacterTable<K>& table, const FiniteGroup& G) {
  Report rep;
  bool ok = true;
  std::string w;
  for (const auto& [pair, value] : table.entries) {
    const auto [g, h] = pair;
    for (int k = 0; k < static_cast<int>(G.order()) && ok; ++k) {
      if (!(table.at(G.conj(k, g), G.conj(k, h)) == value)) {
        ok = false;
        std::ostringstream os;
        os << "chi not constant under conjugation by k = " << k << " at (" << g << ", " << h << ")";
        w = os.str();
      }
    }
    if (!ok) break;
  }
  rep.add("2-class function", ok, w);
  return rep;
}

namespace detail {

struct WordMatrix {
  long long a = 1, b = 0, c = 0, d = 1;  // det = 1 throughout
};

inline WordMatrix compose(const WordMatrix& m, const WordMatrix& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

}  // namespace detail

/// Invariance of the table under the modular group, acting on commuting
/// pairs by chi(g^a h^b, g^c h^d). Both generator identities,
/// chi(gh, h) = chi(g, h) and chi(h^{-1}, g) = chi(g, h), are checked on
/// every commuting pair; on top of that, ten random words in the two
/// generators (seeded, reproducible) are applied directly.
template <Field K>
Report verify_modular(const CharacterTable<K>& table, const FiniteGroup& G,
                      std::uint64_t seed) {
  Report rep;

  bool t_ok = true, s_ok = true;
  std::string tw, sw;
  for (const auto& [pair, value] : table.entries) {
    const auto [g, h] = pair;
    if (t_ok && !(table.at(G.mul(g, h), h) == value)) {
      t_ok = false;
      tw = "chi(gh, h) != chi(g, h) at (" + std::to_string(g) + ", " + std::to_string(h) + ")";
    }
    if (s_ok && !(table.at(G.inv(h), g) == value)) {
      s_ok = false;
      sw = "chi(h^-1, g) != chi(g, h) at (" + std::to_string(g) + ", " + std::to_string(h) + ")";
    }
  }
  rep.add("modular T generator", t_ok, tw);
  rep.add("modular S generator", s_ok, sw);

  // Random words in T = [[1,1],[0,1]] and S = [[0,-1],[1,0]], length <= 6.
  std::mt19937_64 rng(seed);
  bool words_ok = true;
  std::string ww;
  for (int trial = 0; trial < 10 && words_ok; ++trial) {
    detail::WordMatrix m;
    const int len = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) {
      const detail::WordMatrix gen =
          (rng() % 2 == 0) ? detail::WordMatrix{1, 1, 0, 1} : detail::WordMatrix{0, -1, 1, 0};
      m = detail::compose(m, gen);
    }
    for (const auto& [pair, value] : table.entries) {
      const auto [g, h] = pair;
      const int gp = G.mul(G.power(g, m.a), G.power(h, m.b));
      const int hp = G.mul(G.power(g, m.c), G.power(h, m.d));
      if (!(table.at(gp, hp) == value)) {
        words_ok = false;
        std::ostringstream os;
        os << "word [[" << m.a << "," << m.b << "],[" << m.c << "," << m.d
           << "]] moves chi at (" << g << ", " << h << ")";
        ww = os.str();
        break;
      }
    }
  }
  rep.add("modular random words", words_ok, ww);
  return rep;
}

}  // namespace turaev
