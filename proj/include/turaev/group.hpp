#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "turaev/error.hpp"

namespace turaev {

/// Finite group given by its full multiplication table.
///
/// Construction validates the table: a two-sided identity must exist, every
/// element must have a two-sided inverse, and associativity is checked
/// exhaustively up to order 64 (random triples with a fixed seed above
/// that, where an exhaustive scan would be slow).
class FiniteGroup {
 public:
  static constexpr std::size_t kExhaustiveAssocLimit = 64;
  static constexpr std::uint64_t kAssocSampleSeed = 0x5eed;
  static constexpr std::size_t kAssocSamples = 200000;

  /// The trivial group.
  FiniteGroup() : table_{{0}}, identity_(0), inverse_{0} {}

  static FiniteGroup from_cayley_table(std::vector<std::vector<int>> table) {
    const std::size_t n = table.size();
    if (n == 0) throw Error("empty multiplication table");
    for (const auto& row : table) {
      if (row.size() != n) throw Error("multiplication table is not square");
      for (int x : row)
        if (x < 0 || static_cast<std::size_t>(x) >= n)
          throw Error("multiplication table entry out of range");
    }

    auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
      if (table[table[a][b]][c] != table[a][table[b][c]])
        throw NotAssociativeError("table is not associative at triple (" + std::to_string(a) +
                                  ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
    };
    if (n <= kExhaustiveAssocLimit) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
      std::mt19937_64 rng(kAssocSampleSeed);
      for (std::size_t k = 0; k < kAssocSamples; ++k)
        check_triple(rng() % n, rng() % n, rng() % n);
    }

    int identity = -1;
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t g = 0; g < n; ++g)
        if (table[e][g] != static_cast<int>(g) || table[g][e] != static_cast<int>(g)) {
          ok = false;
          break;
        }
      if (ok) {
        identity = static_cast<int>(e);
        break;
      }
    }
    if (identity < 0) throw NoIdentityError("table has no two-sided identity");

    std::vector<int> inverse(n, -1);
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h)
        if (table[g][h] == identity && table[h][g] == identity) {
          inverse[g] = static_cast<int>(h);
          break;
        }
      if (inverse[g] < 0)
        throw NoInverseError("element " + std::to_string(g) + " has no two-sided inverse");
    }

    return FiniteGroup(std::move(table), identity, std::move(inverse));
  }

  std::size_t order() const { return table_.size(); }
  int identity() const { return identity_; }

  int mul(int g, int h) const {
    check_index(g);
    check_index(h);
    return table_[g][h];
  }
  int inv(int g) const {
    check_index(g);
    return inverse_[g];
  }
  /// g h g^-1
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }

  int power(int g, long long e) const {
    check_index(g);
    int base = e >= 0 ? g : inv(g);
    unsigned long long k = e >= 0 ? static_cast<unsigned long long>(e)
                                  : static_cast<unsigned long long>(-(e + 1)) + 1;
    int acc = identity_;
    while (k) {
      if (k & 1) acc = mul(acc, base);
      base = mul(base, base);
      k >>= 1;
    }
    return acc;
  }

  std::vector<std::pair<int, int>> commuting_pairs() const {
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(order());
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        if (table_[g][h] == table_[h][g]) out.emplace_back(g, h);
    return out;
  }

  const std::vector<std::vector<int>>& cayley() const { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

  // ---- builders with fixed, documented element orderings ----

  /// Z/n: element k is the residue k, multiplication is addition mod n.
  static FiniteGroup cyclic(int n) {
    if (n < 1) throw Error("cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_cayley_table(std::move(t));
  }

  /// S_n: elements are the one-line permutations of {0..n-1} in
  /// lexicographic order; (p*q)(i) = p(q(i)).
  static FiniteGroup symmetric(int n) {
    if (n < 1 || n > 5) throw Error("symmetric group supported for 1 <= n <= 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t m = perms.size();
    auto index_of = [&](const std::vector<int>& q) {
      return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        std::vector<int> prod(n);
        for (int i = 0; i < n; ++i) prod[i] = perms[a][perms[b][i]];
        t[a][b] = index_of(prod);
      }
    return from_cayley_table(std::move(t));
  }

  /// A x B with pair (a, b) at index a*|B| + b.
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t na = a.order(), nb = b.order(), n = na * nb;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const int ax = static_cast<int>(x / nb), bx = static_cast<int>(x % nb);
        const int ay = static_cast<int>(y / nb), by = static_cast<int>(y % nb);
        t[x][y] = a.mul(ax, ay) * static_cast<int>(nb) + b.mul(bx, by);
      }
    return from_cayley_table(std::move(t));
  }

 private:
  FiniteGroup(std::vector<std::vector<int>> table, int identity, std::vector<int> inverse)
      : table_(std::move(table)), identity_(identity), inverse_(std::move(inverse)) {}

  void check_index(int g) const {
    if (g < 0 || static_cast<std::size_t>(g) >= order())
      throw Error("group element index out of range: " + std::to_string(g));
  }

  std::vector<std::vector<int>> table_;
  int identity_;
  std::vector<int> inverse_;
};

}  // namespace turaev
