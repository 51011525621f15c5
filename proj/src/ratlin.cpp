#include "gitfan/ratlin.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "gitfan/error.hpp"

namespace gitfan::ratlin {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer integer_from(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

using Rows = std::vector<std::vector<Rational>>;

// Gauss-Jordan in place; returns pivot columns.
std::vector<std::size_t> reduce_rows(Rows& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows.size(); ++c) {
    std::size_t sel = pr;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pr], rows[sel]);
    const Rational inv = 1 / rows[pr][c];
    for (auto& x : rows[pr]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pr || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[pr][k];
    }
    pivots.push_back(c);
    ++pr;
  }
  rows.resize(pr);
  return pivots;
}

Rows to_rows(const std::vector<IntVector>& vectors, std::size_t dim) {
  Rows rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    std::vector<Rational> r(dim);
    for (std::size_t k = 0; k < dim; ++k) r[k] = Rational(v[k]);
    rows.push_back(std::move(r));
  }
  return rows;
}

// Row operations applied simultaneously to a working matrix and its
// transform.
struct RowOps {
  IntMatrix& a;
  IntMatrix& u;

  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < u.cols(); ++k) std::swap(u(i, k), u(j, k));
  }
  // row_i -= q * row_j
  void sub(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) -= q * a(j, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) -= q * u(j, k);
  }
  void negate(std::size_t i) {
    for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) = -a(i, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) = -u(i, k);
  }
};

struct ColOps {
  IntMatrix& a;
  IntMatrix& v;

  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
    for (std::size_t k = 0; k < v.rows(); ++k) std::swap(v(k, i), v(k, j));
  }
  // col_i -= q * col_j
  void sub(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < a.rows(); ++k) a(k, i) -= q * a(k, j);
    for (std::size_t k = 0; k < v.rows(); ++k) v(k, i) -= q * v(k, j);
  }
};

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("invalid_rational", "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer parse_integer(std::string_view text) {
  if (!is_decimal_integer(text)) {
    throw InputError("invalid_rational",
                     "not an integer: '" + std::string(text) + "'");
  }
  return integer_from(text);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_decimal_integer(text)) {
      throw InputError("invalid_rational",
                       "not a rational: '" + std::string(text) + "'");
    }
    return Rational(integer_from(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) ||
      den[0] == '-' || den[0] == '+') {
    throw InputError("invalid_rational",
                     "not a rational: '" + std::string(text) + "'");
  }
  return make_rational(integer_from(num), integer_from(den));
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

// --- RatVector ------------------------------------------------------------

RatVector::RatVector(std::vector<Rational> entries)
    : entries_(std::move(entries)) {
  for (auto& e : entries_) {
    if (e.get_den() == 0) throw InputError("invalid_rational", "zero denominator");
    e.canonicalize();
  }
}

RatVector::RatVector(std::initializer_list<Rational> entries)
    : RatVector(std::vector<Rational>(entries)) {}

// --- IntMatrix ------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InputError("invalid_matrix", "entry count does not match shape");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows,
                               std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw InputError("invalid_matrix", "ragged rows");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols,
                                  std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   entries_.begin() +
                       static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<IntVector> IntMatrix::column_list() const {
  std::vector<IntVector> out;
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& which) const {
  IntMatrix out(rows_, which.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < which.size(); ++k) out(r, k) = (*this)(r, which[k]);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InputError("invalid_matrix", "shape mismatch in product");
  }
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

// --- vector helpers -------------------------------------------------------

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntVector primitive(const IntVector& v) {
  const Integer g = content(v);
  if (g <= 1) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVector primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
  }
  return primitive(out);
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector negate(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// --- normal forms ---------------------------------------------------------

HermiteResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  RowOps ops{h, u};
  std::size_t pr = 0;
  for (std::size_t c = 0; c < h.cols() && pr < h.rows(); ++c) {
    bool have_pivot = false;
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = pr; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      have_pivot = true;
      ops.swap(pr, best);
      bool cleared = true;
      for (std::size_t i = pr + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        ops.sub(i, pr, floor_div(h(i, c), h(pr, c)));
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (h(pr, c) < 0) ops.negate(pr);
    for (std::size_t i = 0; i < pr; ++i) {
      ops.sub(i, pr, floor_div(h(i, c), h(pr, c)));
    }
    ++pr;
  }
  return {std::move(h), std::move(u)};
}

SmithResult smith_normal_form(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  RowOps rows{s, u};
  ColOps cols{s, v};
  const std::size_t n = std::min(s.rows(), s.cols());
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t bi = s.rows(), bj = s.cols();
      for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
          if (s(i, j) == 0) continue;
          if (bi == s.rows() || abs(s(i, j)) < abs(s(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == s.rows()) return {std::move(s), std::move(u), std::move(v)};
      rows.swap(t, bi);
      cols.swap(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        rows.sub(i, t, trunc_div(s(i, t), s(t, t)));
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        cols.sub(j, t, trunc_div(s(t, j), s(t, t)));
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = s.rows();
      for (std::size_t i = t + 1; i < s.rows() && bad == s.rows(); ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j) {
          if (s(i, j) % s(t, t) != 0) {
            bad = i;
            break;
          }
        }
      if (bad == s.rows()) break;
      rows.sub(t, bad, -1);
    }
    if (s(t, t) < 0) rows.negate(t);
  }
  return {std::move(s), std::move(u), std::move(v)};
}

std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols) {
  auto r = to_rows(rows, cols);
  return reduce_rows(r, cols).size();
}

std::size_t rank(const IntMatrix& m) { return rank(m.row_list(), m.cols()); }

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw InputError("invalid_matrix", "determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t sel = k + 1;
      while (sel < n && a(sel, k) == 0) ++sel;
      if (sel == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(sel, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix kernel_lattice_basis(const IntMatrix& m) {
  const auto [h, u] = hermite_normal_form(m.transpose());
  std::size_t r = 0;
  while (r < h.rows() && !is_zero(h.row(r))) ++r;
  std::vector<IntVector> basis;
  for (std::size_t i = r; i < u.rows(); ++i) basis.push_back(u.row(i));
  if (basis.empty()) return IntMatrix(0, m.cols());
  return hermite_normal_form(IntMatrix::from_rows(basis)).H;
}

bool lattices_equal(const IntMatrix& b1, const IntMatrix& b2) {
  if (b1.cols() != b2.cols()) {
    throw InputError("invalid_matrix", "lattices in different ambient ranks");
  }
  auto nonzero_rows = [](const IntMatrix& m) {
    std::vector<IntVector> out;
    if (m.rows() == 0) return out;
    for (auto& r : hermite_normal_form(m).H.row_list())
      if (!is_zero(r)) out.push_back(std::move(r));
    return out;
  };
  return nonzero_rows(b1) == nonzero_rows(b2);
}

// --- subspaces ------------------------------------------------------------

std::vector<IntVector> span_basis(const std::vector<IntVector>& vectors,
                                  std::size_t dim) {
  auto rows = to_rows(vectors, dim);
  reduce_rows(rows, dim);
  std::vector<IntVector> out;
  for (const auto& r : rows) out.push_back(primitive(r));
  return out;
}

std::vector<IntVector> orthogonal_complement(
    const std::vector<IntVector>& vectors, std::size_t dim) {
  auto rows = to_rows(vectors, dim);
  const auto pivots = reduce_rows(rows, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(dim);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
    basis.push_back(primitive(v));
  }
  return span_basis(basis, dim);
}

IntVector project_out(const IntVector& v, const std::vector<IntVector>& basis) {
  if (basis.empty()) return primitive(v);
  const std::size_t k = basis.size();
  // Solve (L L^T) c = L v, then v - L^T c.
  Rows system(k, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) system[i][j] = Rational(dot(basis[i], basis[j]));
    system[i][k] = Rational(dot(basis[i], v));
  }
  reduce_rows(system, k);
  std::vector<Rational> out(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) out[t] = Rational(v[t]);
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Rational& c = system[i][k];
    for (std::size_t t = 0; t < v.size(); ++t) out[t] -= c * Rational(basis[i][t]);
  }
  return primitive(out);
}

// --- simplex --------------------------------------------------------------

namespace {

struct Tableau {
  Rows t;                         // m rows, n + 1 columns (last = rhs)
  std::vector<std::size_t> basis;  // basic variable of each row

  std::size_t vars() const { return t.empty() ? 0 : t.front().size() - 1; }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / t[row][col];
    for (auto& x : t[row]) x *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == row || t[i][col] == 0) continue;
      const Rational f = t[i][col];
      for (std::size_t k = 0; k < t[i].size(); ++k) t[i][k] -= f * t[row][k];
    }
    basis[row] = col;
  }

  // Maximizes c.x over the columns allowed by `usable`. Returns false when
  // unbounded.
  bool run(const std::vector<Rational>& c, const std::vector<bool>& usable) {
    const std::size_t n = vars();
    while (true) {
      std::size_t enter = n;
      for (std::size_t j = 0; j < n && enter == n; ++j) {
        if (!usable[j]) continue;
        Rational reduced = c[j];
        for (std::size_t i = 0; i < t.size(); ++i) reduced -= c[basis[i]] * t[i][j];
        if (reduced > 0) enter = j;
      }
      if (enter == n) return true;
      std::size_t leave = t.size();
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= 0) continue;
        const Rational ratio = t[i][n] / t[i][enter];
        if (leave == t.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult maximize(const std::vector<std::vector<Rational>>& A,
                  const std::vector<Rational>& b,
                  const std::vector<Rational>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  // Columns: n originals, m artificials, rhs.
  Tableau tab;
  tab.t.assign(m, std::vector<Rational>(n + m + 1));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
    tab.t[i][n + i] = 1;
    tab.t[i][n + m] = flip ? Rational(-b[i]) : b[i];
    tab.basis[i] = n + i;
  }
  std::vector<Rational> phase1(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  tab.run(phase1, std::vector<bool>(n + m, true));
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] >= n) infeasibility += tab.t[i][n + m];
  if (infeasibility != 0) return {LpStatus::infeasible, {}, 0};

  // Drive remaining (zero-valued) artificials out of the basis; drop rows
  // that are linear combinations of others.
  for (std::size_t i = 0; i < tab.t.size();) {
    if (tab.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j)
      if (tab.t[i][j] != 0) {
        col = j;
        break;
      }
    if (col == n) {
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    tab.pivot(i, col);
    ++i;
  }

  std::vector<Rational> phase2(n + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  std::vector<bool> usable(n + m, false);
  for (std::size_t j = 0; j < n; ++j) usable[j] = true;
  if (!tab.run(phase2, usable)) return {LpStatus::unbounded, {}, 0};

  LpResult res;
  res.status = LpStatus::optimal;
  res.x.assign(n, 0);
  for (std::size_t i = 0; i < tab.t.size(); ++i)
    if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][n + m];
  res.value = 0;
  for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

}  // namespace gitfan::ratlin
