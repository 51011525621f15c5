#include <doctest.h>

#include "gitfan/error.hpp"
#include "gitfan/ratlin.hpp"
#include "gitfan/res2.hpp"
#include "oracles.hpp"

using namespace gitfan::ratlin;

namespace {

IntMatrix random_matrix(std::size_t r, std::size_t c, long lo = -5, long hi = 5) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = oracle::uniform(lo, hi);
  return m;
}

oracle::IntRows rows_of(const IntMatrix& m) { return m.row_list(); }

bool is_row_hnf(const IntMatrix& h) {
  std::size_t last_pivot = 0;
  bool seen_zero = false, first = true;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t p = 0;
    while (p < h.cols() && h(r, p) == 0) ++p;
    if (p == h.cols()) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    if (!first && p <= last_pivot) return false;
    if (h(r, p) <= 0) return false;
    for (std::size_t above = 0; above < r; ++above)
      if (h(above, p) < 0 || h(above, p) >= h(r, p)) return false;
    last_pivot = p;
    first = false;
  }
  return true;
}

IntMatrix random_unimodular(std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  for (int step = 0; step < 12; ++step) {
    const auto i = static_cast<std::size_t>(oracle::uniform(0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(oracle::uniform(0, static_cast<long>(n) - 1));
    if (i == j) continue;
    const long f = oracle::uniform(-2, 2);
    for (std::size_t c = 0; c < n; ++c) u(i, c) += f * u(j, c);
  }
  return u;
}

}  // namespace

TEST_CASE("rationals parse into lowest terms and reject garbage") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  for (const char* bad : {"", "1/0", "a", "1.5", "1/", "/2", "1//2", "+", "1/-2"}) {
    CHECK_THROWS_AS(parse_rational(bad), gitfan::InputError);
  }
  const RatVector v{Rational(2, 4), Rational(-3, 9)};
  CHECK(v[0].get_num() == 1);
  CHECK(v[0].get_den() == 2);
  CHECK(v[1].get_den() == 3);
}

TEST_CASE("hermite normal form of small matrices") {
  const auto id = hermite_normal_form(IntMatrix::identity(3));
  CHECK(id.H == IntMatrix::identity(3));
  CHECK(id.U == IntMatrix::identity(3));

  const IntMatrix m = IntMatrix::from_rows({{2, 4}, {1, 3}});
  const auto r = hermite_normal_form(m);
  CHECK(r.H == IntMatrix::from_rows({{1, 1}, {0, 2}}));
  CHECK(r.U * m == r.H);
  CHECK(abs(determinant(r.U)) == 1);
}

TEST_CASE("hermite normal form of A has three nonzero rows") {
  const auto& A = gitfan::res2::weight_matrix();
  const auto r = hermite_normal_form(A);
  CHECK(is_row_hnf(r.H));
  CHECK(r.U * A == r.H);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < r.H.rows(); ++i)
    if (!is_zero(r.H.row(i))) ++nonzero;
  CHECK(nonzero == oracle::rank(rows_of(A)));
  CHECK(nonzero == 3);
}

TEST_CASE("hermite normal form on random matrices") {
  for (int trial = 0; trial < 150; ++trial) {
    const auto rows = static_cast<std::size_t>(oracle::uniform(1, 5));
    const auto cols = static_cast<std::size_t>(oracle::uniform(1, 6));
    const IntMatrix m = random_matrix(rows, cols);
    const auto r = hermite_normal_form(m);
    REQUIRE(r.U * m == r.H);
    REQUIRE(abs(determinant(r.U)) == 1);
    REQUIRE(is_row_hnf(r.H));
    // The HNF is determined by the row lattice.
    const IntMatrix moved = random_unimodular(rows) * m;
    REQUIRE(hermite_normal_form(moved).H == r.H);
  }
}

TEST_CASE("smith normal form matches the gcd of minors") {
  const auto id = smith_normal_form(IntMatrix::identity(3));
  CHECK(id.S == IntMatrix::identity(3));

  const IntMatrix d = IntMatrix::from_rows({{2, 0}, {0, 3}});
  CHECK(smith_normal_form(d).S == IntMatrix::from_rows({{1, 0}, {0, 6}}));

  const auto& A = gitfan::res2::weight_matrix();
  const auto s = smith_normal_form(A);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) CHECK(s.S(i, j) == (i == j ? 1 : 0));
  for (std::size_t k = 1; k <= 3; ++k) CHECK(oracle::minor_gcd(rows_of(A), k) == 1);

  for (int trial = 0; trial < 100; ++trial) {
    const auto rows = static_cast<std::size_t>(oracle::uniform(1, 4));
    const auto cols = static_cast<std::size_t>(oracle::uniform(1, 4));
    const IntMatrix m = random_matrix(rows, cols, -6, 6);
    const auto r = smith_normal_form(m);
    REQUIRE(r.U * m * r.V == r.S);
    REQUIRE(abs(determinant(r.U)) == 1);
    REQUIRE(abs(determinant(r.V)) == 1);
    Integer prefix = 1, prev = 1;
    const std::size_t n = std::min(rows, cols);
    for (std::size_t k = 0; k < n; ++k) {
      const Integer dk = r.S(k, k);
      REQUIRE(dk >= 0);
      if (k > 0 && dk != 0) REQUIRE(dk % prev == 0);
      if (dk != 0) prev = dk;
      prefix *= dk;
      REQUIRE(prefix == oracle::minor_gcd(rows_of(m), k + 1));
    }
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) REQUIRE(r.S(i, j) == 0);
  }
}

TEST_CASE("kernel lattice bases") {
  const auto k1 = kernel_lattice_basis(IntMatrix::from_rows({{1, 1}}));
  REQUIRE(k1.rows() == 1);
  CHECK(oracle::same_lattice(rows_of(k1), {{1, -1}}));

  CHECK(kernel_lattice_basis(IntMatrix(1, 3)) == IntMatrix::identity(3));
  CHECK(kernel_lattice_basis(IntMatrix::identity(2)).rows() == 0);

  const auto& A = gitfan::res2::weight_matrix();
  const auto& B = gitfan::res2::kernel_matrix();
  const auto K = kernel_lattice_basis(A);
  CHECK(K.rows() == 9);
  CHECK(K.cols() == 12);
  CHECK(oracle::same_lattice(rows_of(K), rows_of(B)));
  CHECK((A * B.transpose()).is_zero());
  CHECK(kernel_lattice_basis(A) == K);
}

TEST_CASE("kernel lattice properties on random matrices") {
  for (int trial = 0; trial < 150; ++trial) {
    const auto rows = static_cast<std::size_t>(oracle::uniform(1, 4));
    const auto cols = static_cast<std::size_t>(oracle::uniform(1, 6));
    const IntMatrix m = random_matrix(rows, cols, -4, 4);
    const IntMatrix k = kernel_lattice_basis(m);
    REQUIRE(k.cols() == cols);
    REQUIRE(k.rows() == cols - oracle::rank(rows_of(m)));
    if (k.rows() > 0) {
      REQUIRE((m * k.transpose()).is_zero());
      REQUIRE(oracle::rank(rows_of(k)) == k.rows());
    }
    // Saturation: any integer kernel vector is an integer combination.
    for (int probe = 0; probe < 3 && k.rows() > 0; ++probe) {
      IntVector v(cols, 0);
      for (std::size_t i = 0; i < k.rows(); ++i) {
        const long f = oracle::uniform(-3, 3);
        for (std::size_t j = 0; j < cols; ++j) v[j] += f * k(i, j);
      }
      const Integer g = content(v);
      if (g == 0) continue;
      for (auto& x : v) x /= g;
      const auto coeffs = oracle::solve_row(rows_of(k), v);
      REQUIRE(!coeffs.empty());
      for (const auto& c : coeffs) REQUIRE(c.get_den() == 1);
    }
  }
}

TEST_CASE("lattice equality") {
  const auto& B = gitfan::res2::kernel_matrix();
  CHECK(lattices_equal(B, B));
  IntMatrix doubled = B;
  for (std::size_t c = 0; c < B.cols(); ++c) doubled(3, c) *= 2;
  CHECK_FALSE(lattices_equal(B, doubled));
  CHECK(lattices_equal(kernel_lattice_basis(gitfan::res2::weight_matrix()), B));

  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix m = random_matrix(3, 5, -4, 4);
    const IntMatrix a = random_unimodular(3) * m;
    const IntMatrix b = random_unimodular(3) * m;
    REQUIRE(lattices_equal(m, a));
    REQUIRE(lattices_equal(a, m));
    REQUIRE(lattices_equal(a, b));
    if (oracle::rank(rows_of(m)) == 3) {
      REQUIRE(oracle::same_lattice(rows_of(m), rows_of(a)));
      IntMatrix c = a;
      const long f = oracle::uniform(2, 4);
      for (std::size_t j = 0; j < 5; ++j) c(0, j) *= f;
      REQUIRE(lattices_equal(m, c) == oracle::same_lattice(rows_of(m), rows_of(c)));
      REQUIRE_FALSE(lattices_equal(m, c));
    }
  }
}

TEST_CASE("rank and determinant agree with the rational oracle") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::uniform(1, 5));
    const IntMatrix m = random_matrix(n, n, -3, 3);
    REQUIRE(rank(m) == oracle::rank(rows_of(m)));
    std::vector<std::vector<Rational>> q;
    for (const auto& r : rows_of(m)) q.emplace_back(r.begin(), r.end());
    REQUIRE(determinant(m) == oracle::det(q));
  }
}

TEST_CASE("exact simplex") {
  // maximize x + y subject to x + y + s = 4, x - y + t = 1, all >= 0.
  const std::vector<std::vector<Rational>> A{{1, 1, 1, 0}, {1, -1, 0, 1}};
  const auto r = maximize(A, {4, 1}, {1, 1, 0, 0});
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 4);

  const auto inf = maximize({{1, 1}}, {-1}, {1, 0});
  CHECK(inf.status == LpStatus::infeasible);

  const auto unb = maximize({{1, -1}}, {0}, {1, 0});
  CHECK(unb.status == LpStatus::unbounded);

  // A degenerate problem that cycles under the largest-coefficient rule.
  const std::vector<std::vector<Rational>> beale{
      {Rational(1, 4), -8, -1, 9, 1, 0, 0},
      {Rational(1, 2), -12, Rational(-1, 2), 3, 0, 1, 0},
      {0, 0, 1, 0, 0, 0, 1}};
  const auto b = maximize(beale, {0, 0, 1}, {Rational(3, 4), -20, Rational(1, 2), -6, 0, 0, 0});
  REQUIRE(b.status == LpStatus::optimal);
  CHECK(b.value == Rational(5, 4));
}

TEST_CASE("span basis, complements and projections") {
  const auto s = span_basis({{2, 4, 0}, {1, 2, 0}, {0, 0, 3}}, 3);
  CHECK(s.size() == 2);
  const auto perp = orthogonal_complement({{1, 1, 0}}, 3);
  REQUIRE(perp.size() == 2);
  for (const auto& v : perp) CHECK(dot(v, IntVector{1, 1, 0}) == 0);
  CHECK(project_out({3, 3, 1}, {{1, 1, 0}}) == IntVector{0, 0, 1});
  CHECK(primitive(IntVector{4, -6, 2}) == IntVector{2, -3, 1});
  CHECK(primitive(std::vector<Rational>{Rational(1, 2), Rational(-1, 3)}) == IntVector{3, -2});
}
