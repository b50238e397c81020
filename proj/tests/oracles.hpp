#pragma once

// Slow, independent reference computations used to cross-check the library.

#include <functional>
#include <random>
#include <vector>

#include "torolog/lattice.hpp"
#include "torolog/monoid.hpp"

namespace oracle {

using torolog::Integer;
using torolog::IntVector;
using torolog::Rational;

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Integer euclid(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer r = a % b;
    a = b;
    b = r;
  }
  return a;
}

/// Calls f on every vector in [0, bound]^k.
inline void for_each_box(std::size_t k, long bound, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> c(k, 0);
  while (true) {
    f(c);
    std::size_t i = 0;
    while (i < k && c[i] == bound) c[i++] = 0;
    if (i == k) return;
    ++c[i];
  }
}

/// m as a combination of gens with coefficients in [0, bound].
inline bool brute_member(const std::vector<IntVector>& gens, const IntVector& m, long bound) {
  const std::size_t n = m.size();
  bool found = false;
  std::vector<IntVector> partial;
  // depth-first with early exit
  std::function<void(std::size_t, IntVector)> go = [&](std::size_t i, IntVector acc) {
    if (found) return;
    if (i == gens.size()) {
      found = acc == m;
      return;
    }
    for (long c = 0; c <= bound && !found; ++c) {
      go(i + 1, acc);
      for (std::size_t j = 0; j < n; ++j) acc[j] += gens[i][j];
    }
  };
  go(0, IntVector(n, 0));
  return found;
}

/// Exact solve of a square rational system; empty when singular.
inline std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

/// Caratheodory: v is a nonnegative combination of some independent subset
/// of gens. Tries every subset of size <= n, solving on a choice of rows.
inline bool cone_contains(const std::vector<IntVector>& gens, const std::vector<Rational>& v) {
  const std::size_t n = v.size();
  bool all_zero = true;
  for (const auto& x : v) all_zero = all_zero && x == 0;
  if (all_zero) return true;
  const std::size_t k = gens.size();
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) s.push_back(i);
    if (s.size() > n) continue;
    // choose rows: try all row subsets of size |s|
    for (unsigned rmask = 1; rmask < (1u << n); ++rmask) {
      if (static_cast<std::size_t>(__builtin_popcount(rmask)) != s.size()) continue;
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < n; ++i)
        if (rmask & (1u << i)) rows.push_back(i);
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (auto r : rows) {
        std::vector<Rational> row;
        for (auto j : s) row.push_back(Rational(gens[j][r]));
        a.push_back(row);
        b.push_back(v[r]);
      }
      auto lam = solve(a, b);
      if (!lam) continue;
      bool ok = true;
      for (const auto& l : *lam) ok = ok && l >= 0;
      for (std::size_t r = 0; r < n && ok; ++r) {
        Rational sum = 0;
        for (std::size_t t = 0; t < s.size(); ++t) sum += (*lam)[t] * gens[s[t]][r];
        ok = sum == v[r];
      }
      if (ok) return true;
      break;  // any invertible row choice gives the unique solution
    }
  }
  return false;
}

inline std::vector<IntVector> random_vectors(std::mt19937& rng, std::size_t n, std::size_t k, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<IntVector> out(k, IntVector(n));
  for (auto& v : out)
    for (auto& x : v) x = d(rng);
  return out;
}

/// A monoid whose group is all of Z^n.
inline torolog::ToricMonoid random_full_monoid(std::mt19937& rng, std::size_t n, std::size_t extra, long lo,
                                               long hi) {
  while (true) {
    auto gens = random_vectors(rng, n, n + extra, lo, hi);
    torolog::ToricMonoid g(n, gens);
    if (g.gp_rank() != n) continue;
    const Integer d = torolog::determinant(g.gp());
    if (d == 1 || d == -1) return g;
  }
}

}  // namespace oracle
