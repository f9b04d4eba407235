#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liaison/exact/linalg.hpp"
#include "liaison/exact/oracle.hpp"
#include "liaison/exact/points.hpp"
#include "liaison/exact/poly.hpp"

using namespace liaison::exact;

namespace {

// Independent rank oracle: plain Gauss over mpq, no shared code with the
// fraction-free path.
int rank_rational(const ZMat& m, size_t cols) {
  std::vector<std::vector<mpq_class>> a;
  for (const auto& row : m) {
    std::vector<mpq_class> r(cols);
    for (size_t j = 0; j < cols; ++j) r[j] = mpq_class(row[j]);
    a.push_back(std::move(r));
  }
  int rk = 0;
  for (size_t col = 0; col < cols && rk < static_cast<int>(a.size()); ++col) {
    size_t piv = a.size();
    for (size_t i = static_cast<size_t>(rk); i < a.size(); ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == a.size()) continue;
    std::swap(a[static_cast<size_t>(rk)], a[piv]);
    for (size_t i = static_cast<size_t>(rk) + 1; i < a.size(); ++i) {
      if (a[i][col] == 0) continue;
      mpq_class factor = a[i][col] / a[static_cast<size_t>(rk)][col];
      for (size_t j = col; j < cols; ++j) {
        a[i][j] -= factor * a[static_cast<size_t>(rk)][j];
        a[i][j].canonicalize();
      }
    }
    ++rk;
  }
  return rk;
}

ZMat random_matrix(std::mt19937_64& rng, size_t rows, size_t cols, bool force_deficient) {
  std::uniform_int_distribution<int> entry(-9, 9);
  ZMat m(rows, ZRow(cols));
  for (auto& row : m)
    for (auto& x : row) x = entry(rng);
  if (force_deficient && rows >= 2) {
    // overwrite the last row with a combination of the first two
    for (size_t j = 0; j < cols; ++j)
      m[rows - 1][j] = 2 * m[0][j] - 3 * m[1 % rows][j];
  }
  return m;
}

Polynomial mono(int nv, Exponents e, int c = 1) { return Polynomial::monomial(nv, std::move(e), c); }

}  // namespace

TEST_CASE("fraction-free rank agrees with rational elimination") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    size_t rows = 1 + trial % 8, cols = 1 + (trial * 7) % 10;
    ZMat m = random_matrix(rng, rows, cols, trial % 3 == 0);
    CHECK(rank(m, cols) == rank_rational(m, cols));
  }
}

TEST_CASE("kernel basis: annihilation, dimension, primitivity") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    size_t rows = 1 + trial % 6, cols = 2 + trial % 8;
    ZMat m = random_matrix(rng, rows, cols, trial % 2 == 0);
    ZMat kernel = kernel_basis(m, cols);
    CHECK(static_cast<int>(kernel.size()) == static_cast<int>(cols) - rank(m, cols));
    for (const auto& x : kernel) {
      for (const auto& row : m) {
        mpz_class dot = 0;
        for (size_t j = 0; j < cols; ++j) dot += row[j] * x[j];
        CHECK(dot == 0);
      }
      mpz_class content = 0;
      for (const auto& e : x) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.get_mpz_t());
      CHECK(content == 1);
    }
    // kernel vectors are independent
    CHECK(rank(kernel, cols) == static_cast<int>(kernel.size()));
  }
}

TEST_CASE("echelon residual detects membership") {
  ZMat m = {{1, 2, 3}, {0, 1, 1}};
  Echelon e(m, 3);
  CHECK(e.rank() == 2);
  CHECK(e.contains({1, 3, 4}));   // sum of the rows
  CHECK(e.contains({2, 4, 6}));   // scaled row
  CHECK_FALSE(e.contains({0, 0, 1}));
}

TEST_CASE("monomial enumeration matches the count") {
  for (int nv = 1; nv <= 5; ++nv)
    for (int k = 0; k <= 7; ++k)
      CHECK(static_cast<long long>(monomial_basis(nv, k).size()) == monomial_count(nv, k));
}

TEST_CASE("polynomial arithmetic basics") {
  // (x0*x3 - x1*x2) * x0
  Polynomial q = mono(4, {1, 0, 0, 1}) - mono(4, {0, 1, 1, 0});
  CHECK(q.homogeneous());
  CHECK(q.degree() == 2);
  Polynomial qx = q.times_monomial({1, 0, 0, 0});
  CHECK(qx.degree() == 3);
  std::vector<mpq_class> pt = {mpq_class(2), mpq_class(3), mpq_class(4), mpq_class(6)};
  CHECK(q.evaluate(pt) == 0);  // 2*6 - 3*4
  std::vector<mpq_class> off = {mpq_class(1), mpq_class(0), mpq_class(0), mpq_class(0)};
  CHECK(qx.evaluate(off) == 0);
  Polynomial half = q * mpq_class(1, 2);
  CHECK(half.primitive_integer_form().terms == q.terms);
}

TEST_CASE("projective points normalize and deduplicate") {
  ProjectivePoint p({mpq_class(0), mpq_class(2), mpq_class(4), mpq_class(-2)});
  CHECK(p.coords[1] == 1);
  CHECK(p.coords[2] == 2);
  CHECK(p.coords[3] == -1);
  CHECK_THROWS_AS(ProjectivePoint({mpq_class(0), mpq_class(0)}), std::domain_error);

  PointSet z(3);
  z.add(ProjectivePoint({mpq_class(1), mpq_class(2), mpq_class(3), mpq_class(4)}));
  CHECK_THROWS_AS(z.add(ProjectivePoint({mpq_class(2), mpq_class(4), mpq_class(6), mpq_class(8)})),
                  std::domain_error);
}

TEST_CASE("hilbert function of point sets") {
  PointSet empty(3);
  CHECK(hilbert_function(empty, 2) == 0);

  PointSet single(3);
  single.add(ProjectivePoint({mpq_class(1), mpq_class(2), mpq_class(3), mpq_class(4)}));
  for (int k = 0; k <= 4; ++k) CHECK(hilbert_function(single, k) == 1);

  // the 8 crossings of the (2,2) ruled construction on the quadric
  auto inst = build_quadric_ruled_ci(2, 2, default_quadric_params(2, 2), {});
  const PointSet& z = *inst.z;
  REQUIRE(z.size() == 8);
  CHECK(hilbert_function(z, 0) == 1);
  CHECK(hilbert_function(z, 1) == 4);
  CHECK(hilbert_function(z, 2) == 7);
  CHECK(hilbert_function(z, 3) == 8);
  CHECK(hilbert_function(z, 4) == 8);  // stabilized at |Z|
}

TEST_CASE("hilbert function is nondecreasing and stabilizes at |Z|") {
  auto inst = build_quadric_ruled_ci(2, 3, default_quadric_params(2, 3), {});
  const PointSet& z = *inst.z;
  int prev = 0;
  for (int k = 0; k <= static_cast<int>(z.size()); ++k) {
    int h = hilbert_function(z, k);
    CHECK(h >= prev);
    prev = h;
  }
  CHECK(prev == static_cast<int>(z.size()));
}

TEST_CASE("graded piece dimensions of ideals") {
  Polynomial q = mono(4, {1, 0, 0, 1}) - mono(4, {0, 1, 1, 0});  // quadric
  GradedIdeal iq = make_graded_ideal(4, {q});
  CHECK(ideal_graded_dimension(iq, 3) == 4);
  CHECK(ideal_graded_dimension(iq, 1) == 0);  // below the generator degree
  CHECK(ideal_graded_dimension(iq, 2) == 1);

  GradedIdeal ixy = make_graded_ideal(4, {mono(4, {1, 0, 0, 0}), mono(4, {0, 1, 0, 0})});
  CHECK(ideal_graded_dimension(ixy, 1) == 2);

  CHECK_THROWS_AS(make_graded_ideal(4, {Polynomial::zero(4)}), std::invalid_argument);
  CHECK_THROWS_AS(make_graded_ideal(4, {mono(4, {1, 0, 0, 0}) + mono(4, {2, 0, 0, 0})}),
                  std::invalid_argument);
}

TEST_CASE("minimal point ideal generates every graded piece") {
  auto inst = build_quadric_ruled_ci(2, 2, default_quadric_params(2, 2), {});
  const PointSet& z = *inst.z;
  GradedIdeal ideal = minimal_point_ideal(z);
  const int top = stabilization_index(z) + 1;
  for (int k = 0; k <= top + 2; ++k)
    CHECK(ideal_graded_dimension(ideal, k) == vanishing_dimension(z, k));
}

TEST_CASE("degreewise colon: anchors on the 8-point link") {
  auto inst = build_quadric_ruled_ci(2, 2, default_quadric_params(2, 2), {});
  const PointSet& z = *inst.z;
  GradedIdeal iz = minimal_point_ideal(z);

  // 3 points, not collinear: residual 5 points span P^3
  auto z1 = z.subset({0, 1, 2});
  REQUIRE(hilbert_function(z1, 1) == 3);
  CHECK(colon_graded_dimension(iz, minimal_point_ideal(z1), 1) == 0);

  // 7 points: the colon in degree 1 is the planes through the leftover point
  auto z7 = z.subset({0, 1, 2, 3, 4, 5, 6});
  CHECK(colon_graded_dimension(iz, minimal_point_ideal(z7), 1) == 3);

  // full set: colon is the unit ideal
  auto zfull = z.subset({0, 1, 2, 3, 4, 5, 6, 7});
  for (int k = 0; k <= 3; ++k)
    CHECK(colon_graded_dimension(iz, minimal_point_ideal(zfull), k) == monomial_count(4, k));
}

TEST_CASE("colon matches point evaluation on reduced splits") {
  auto inst = build_quadric_ruled_ci(2, 2, default_quadric_params(2, 2), {});
  const PointSet& z = *inst.z;
  GradedIdeal iz = minimal_point_ideal(z);
  const std::vector<std::vector<int>> splits = {
      {0}, {1, 5}, {0, 2, 4}, {1, 3, 5, 7}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4, 5, 6}};
  for (const auto& split : splits) {
    auto z1 = z.subset(split);
    auto z2 = z.complement(split);
    GradedIdeal iz1 = minimal_point_ideal(z1);
    for (int k = 0; k <= 4; ++k) {
      ZMat basis;
      int dim = colon_graded_dimension(iz, iz1, k, &basis);
      CHECK(dim == vanishing_dimension(z2, k));
      // returned basis really consists of forms vanishing on Z2
      for (const auto& row : basis) {
        Polynomial f = polynomial_from_row(4, k, row);
        for (const auto& pt : z2.points) CHECK(f.evaluate(pt.coords) == 0);
      }
    }
  }
}
