#pragma once

// Small independent reference computations shared by the unit suites. None
// of these call into the library's normal-form code.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Integer = mpz_class;
using Rational = mpq_class;
using IntRows = std::vector<std::vector<Integer>>;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

// n/d in lowest terms; mpq_class(n, d) alone does not reduce.
inline Rational q(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Reduced row echelon form over Q; returns the rank.
inline std::size_t rref(std::vector<std::vector<Rational>>& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const IntRows& rows) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return rref(m);
}

// Solves x * basis = v over Q (basis rows independent); empty when v is not
// in the rational row span.
inline std::vector<Rational> solve_row(const IntRows& basis, const std::vector<Integer>& v) {
  const std::size_t k = basis.size(), n = v.size();
  // Transposed augmented system: basis^T x = v.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(k + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) m[j][i] = basis[i][j];
    m[j][k] = v[j];
  }
  rref(m);
  std::vector<Rational> x(k, 0);
  for (const auto& row : m) {
    std::size_t lead = 0;
    while (lead <= k && row[lead] == 0) ++lead;
    if (lead == k) return {};  // inconsistent
    if (lead < k) x[lead] = row[k];
  }
  return x;
}

// Mutual integer expressibility of row bases.
inline bool same_lattice(const IntRows& a, const IntRows& b) {
  auto inside = [](const IntRows& x, const IntRows& basis) {
    for (const auto& row : x) {
      const auto c = solve_row(basis, row);
      if (c.empty() && !basis.empty()) return false;
      if (basis.empty()) {
        for (const auto& e : row)
          if (e != 0) return false;
        continue;
      }
      for (const auto& q : c)
        if (q.get_den() != 1) return false;
    }
    return true;
  };
  return a.size() == b.size() && inside(a, b) && inside(b, a);
}

inline Integer det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return d.get_num();
}

// gcd of all k x k minors.
inline Integer minor_gcd(const IntRows& m, std::size_t k) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  Integer g = 0;
  std::vector<std::size_t> ri(k), ci(k);
  auto next = [](std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
      if (idx[i] + (k - i) < n) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) ri[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) ci[i] = i;
    do {
      std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
      g = gcd(g, det(sub));
    } while (next(ci, cols));
  } while (next(ri, rows));
  return g;
}

}  // namespace oracle
