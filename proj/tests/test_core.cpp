#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vstoch/construct.hpp"
#include "vstoch/core_ops.hpp"
#include "vstoch/rng.hpp"
#include "vstoch/sample.hpp"

using namespace vstoch;

namespace {

VectorMatrixR rotation2(double theta) {
  VectorMatrixR v(2, 1);
  v.entry(0, 0)[0] = std::cos(theta);
  v.entry(0, 1)[0] = -std::sin(theta);
  v.entry(1, 0)[0] = std::sin(theta);
  v.entry(1, 1)[0] = std::cos(theta);
  return v;
}

// (1/sqrt 2) [[1, i], [i, 1]], a 2x2 unitary.
VectorMatrixC hadamard_like() {
  VectorMatrixC v(2, 1);
  const double s = 1.0 / std::sqrt(2.0);
  v.entry(0, 0)[0] = Complex(s, 0);
  v.entry(0, 1)[0] = Complex(0, s);
  v.entry(1, 0)[0] = Complex(0, s);
  v.entry(1, 1)[0] = Complex(s, 0);
  return v;
}

}  // namespace

TEST_CASE("nu of a permutation matrix is the permutation matrix") {
  VectorMatrixR v(3, 1);
  v.entry(1, 0)[0] = 1.0;
  v.entry(2, 1)[0] = 1.0;
  v.entry(0, 2)[0] = 1.0;
  const Bistochastic p = nu(v);
  CHECK(p(1, 0) == 1.0);
  CHECK(p(2, 1) == 1.0);
  CHECK(p(0, 2) == 1.0);
  CHECK(p(0, 0) == 0.0);
}

TEST_CASE("nu of a rotation gives cos^2/sin^2") {
  const double th = 0.7;
  const Bistochastic p = nu(rotation2(th));
  const double c2 = std::cos(th) * std::cos(th);
  CHECK(p(0, 0) == doctest::Approx(c2).epsilon(1e-15));
  CHECK(p(0, 1) == doctest::Approx(1 - c2).epsilon(1e-15));
  CHECK(p(1, 0) == doctest::Approx(1 - c2).epsilon(1e-15));
  CHECK(p(1, 1) == doctest::Approx(c2).epsilon(1e-15));
}

TEST_CASE("nu of the realified complex unitary is flat") {
  const VectorMatrixR r = realify(hadamard_like());
  CHECK(r.d() == 2);
  const Bistochastic p = nu(r);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(p(i, j) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("nu rejects non-isometries") {
  VectorMatrixR v(2, 1);
  v.entry(0, 0)[0] = 1.1;  // scaled entry breaks normalization
  v.entry(1, 1)[0] = 1.0;
  CHECK_THROWS_AS(nu(v), IsometryViolationError);
}

TEST_CASE("check_isometry on the identity") {
  VectorMatrixR v(4, 1);
  for (int i = 0; i < 4; ++i) v.entry(i, i)[0] = 1.0;
  const IsometryReport rep = check_isometry(v);
  CHECK(rep.ok);
  CHECK(rep.max_residual_cols == 0.0);
  CHECK(rep.max_residual_rows == 0.0);
}

TEST_CASE("check_isometry flags a scaled entry") {
  VectorMatrixR v = rotation2(0.3);
  v.entry(0, 0)[0] *= 1.1;
  const IsometryReport rep = check_isometry(v);
  CHECK_FALSE(rep.ok);
  CHECK(rep.max_residual_cols > 0.01);
}

TEST_CASE("construct_full output passes check_isometry") {
  const Bistochastic p = sample_sinkhorn(5, 99);
  for (Field f : {Field::R, Field::C, Field::H}) {
    const AnyVectorMatrix v = construct_full(p, f, 5);
    CHECK(check_isometry(v, 1e-10).ok);
    CHECK((squared_norms(v) - p.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("row and column gram residuals vanish together for square real and complex isometries") {
  Rng seeds(3);
  for (Field f : {Field::R, Field::C}) {
    for (int t = 0; t < 50; ++t) {
      const AnyVectorMatrix v = sample_isometry(f, 4, 1, seeds.next_u64());
      const IsometryReport rep = check_isometry(v);
      CHECK(rep.max_residual_cols <= 1e-12);
      CHECK(rep.max_residual_rows <= 10 * 1e-12);
    }
  }
}

TEST_CASE("quaternionic square isometries can fail the off-diagonal row condition") {
  // (1/sqrt 2) [[1, i], [j, k]] has orthonormal columns, but the row pair sum
  // conj(1) j + conj(i) k = 2j does not vanish: conjugates sit in the wrong
  // slots once multiplication stops commuting. Row norms still sum to one,
  // so the squared-norm matrix is bistochastic regardless.
  VectorMatrixH v(2, 1);
  const double s = 1.0 / std::sqrt(2.0);
  v.entry(0, 0)[0] = Quaternion(s, 0, 0, 0);
  v.entry(0, 1)[0] = Quaternion(0, s, 0, 0);
  v.entry(1, 0)[0] = Quaternion(0, 0, s, 0);
  v.entry(1, 1)[0] = Quaternion(0, 0, 0, s);
  const IsometryReport rep = check_isometry(v);
  CHECK(rep.ok);
  CHECK(rep.max_residual_cols <= 1e-15);
  CHECK(rep.max_residual_rows == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.residual_rows(0, 0) <= 1e-15);
  CHECK(rep.residual_rows(1, 1) <= 1e-15);
  CHECK_NOTHROW(nu(v));
}

TEST_CASE("column orthonormality does not bound the row gram residual when d > 1") {
  // Columns e_1, e_2 of R^4 arranged as a 2x2 matrix with R^2 entries: a
  // perfect column frame whose second row is entirely zero.
  VectorMatrixR v(2, 2);
  v.entry(0, 0)[0] = 1.0;
  v.entry(0, 1)[1] = 1.0;
  const IsometryReport rep = check_isometry(v);
  CHECK(rep.ok);
  CHECK(rep.max_residual_cols == 0.0);
  CHECK(rep.max_residual_rows == 1.0);
  // nu refuses it: the squared norms have a zero row.
  CHECK_THROWS_AS(nu(v), IsometryViolationError);
}

TEST_CASE("act_perm identity leaves the matrix unchanged") {
  const AnyVectorMatrix v = sample_isometry(Field::C, 3, 2, 5);
  const std::vector<int> id = {0, 1, 2};
  const AnyVectorMatrix w = act_perm(v, id, id);
  CHECK(std::get<VectorMatrixC>(v) == std::get<VectorMatrixC>(w));
}

TEST_CASE("act_perm is equivariant for squared norms") {
  Rng rng(21);
  for (Field f : {Field::R, Field::C, Field::H}) {
    const AnyVectorMatrix v = sample_isometry(f, 4, 2, rng.next_u64());
    std::vector<int> sigma = random_permutation(4, rng);
    std::vector<int> tau = random_permutation(4, rng);
    const Eigen::MatrixXd lhs = squared_norms(act_perm(v, sigma, tau));
    const Eigen::MatrixXd rhs = act_perm(squared_norms(v), sigma, tau);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() == 0.0);  // pure data movement
  }
}

TEST_CASE("row transposition swaps the rows of nu") {
  const VectorMatrixR v = rotation2(0.4);
  const std::vector<int> swap01 = {1, 0};
  const std::vector<int> id = {0, 1};
  const Eigen::MatrixXd before = squared_norms(v);
  const Eigen::MatrixXd after = squared_norms(act_perm(v, swap01, id));
  CHECK(after(0, 0) == before(1, 0));
  CHECK(after(1, 0) == before(0, 0));
  CHECK(after(0, 1) == before(1, 1));
  CHECK(after(1, 1) == before(0, 1));
}

TEST_CASE("act_perm rejects non-permutations") {
  const VectorMatrixR v = rotation2(0.1);
  const std::vector<int> bad = {0, 0};
  const std::vector<int> id = {0, 1};
  CHECK_THROWS_AS(act_perm(v, bad, id), InvalidInputError);
}

TEST_CASE("act_diag with identity blocks and unit phases is the identity") {
  const auto v = std::get<VectorMatrixC>(sample_isometry(Field::C, 3, 2, 8));
  std::vector<VectorMatrixC> blocks;
  for (int i = 0; i < 3; ++i) {
    VectorMatrixC b(2, 1);
    b.entry(0, 0)[0] = Complex(1, 0);
    b.entry(1, 1)[0] = Complex(1, 0);
    blocks.push_back(std::move(b));
  }
  const std::vector<Complex> phases(3, Complex(1, 0));
  const VectorMatrixC w = act_diag<Complex>(v, blocks, phases);
  CHECK((squared_norms(v) - squared_norms(w)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("real phases -1 leave nu unchanged") {
  const auto v = std::get<VectorMatrixR>(sample_isometry(Field::R, 3, 2, 9));
  std::vector<VectorMatrixR> blocks;
  for (int i = 0; i < 3; ++i) {
    VectorMatrixR b(2, 1);
    b.entry(0, 0)[0] = 1.0;
    b.entry(1, 1)[0] = 1.0;
    blocks.push_back(std::move(b));
  }
  const std::vector<double> phases(3, -1.0);
  const VectorMatrixR w = act_diag<double>(v, blocks, phases);
  CHECK((squared_norms(v) - squared_norms(w)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(check_isometry(w).ok);
}

TEST_CASE("quaternionic act_diag preserves nu and the isometry property") {
  const Bistochastic p = sample_sinkhorn(4, 31);
  const auto v = std::get<VectorMatrixH>(construct_full(p, Field::H, 4));
  std::vector<VectorMatrixH> blocks;
  Rng seeds(32);
  for (int i = 0; i < 4; ++i)
    blocks.push_back(std::get<VectorMatrixH>(sample_isometry(Field::H, 4, 1, seeds.next_u64())));
  const std::vector<Quaternion> phases = random_unit_scalars<Quaternion>(4, 33);
  const VectorMatrixH w = act_diag<Quaternion>(v, blocks, phases);
  CHECK(check_isometry(w, 1e-9).ok);
  CHECK((squared_norms(v) - squared_norms(w)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("act_diag rejects bad phases and blocks") {
  const auto v = std::get<VectorMatrixR>(sample_isometry(Field::R, 2, 2, 10));
  std::vector<VectorMatrixR> blocks;
  for (int i = 0; i < 2; ++i) {
    VectorMatrixR b(2, 1);
    b.entry(0, 0)[0] = 1.0;
    b.entry(1, 1)[0] = 1.0;
    blocks.push_back(std::move(b));
  }
  SUBCASE("non-unit phase") {
    const std::vector<double> phases = {1.0, 0.5};
    CHECK_THROWS_AS(act_diag<double>(v, blocks, phases), InvalidInputError);
  }
  SUBCASE("non-isometric block") {
    blocks[0].entry(0, 0)[0] = 2.0;
    const std::vector<double> phases = {1.0, 1.0};
    CHECK_THROWS_AS(act_diag<double>(v, blocks, phases), InvalidInputError);
  }
}

TEST_CASE("realify frozen 1x1 example") {
  VectorMatrixC v(1, 1);
  v.entry(0, 0)[0] = Complex(0, 1);
  const VectorMatrixR r = realify(v);
  CHECK(r.d() == 2);
  CHECK(r.entry(0, 0)[0] == 0.0);
  CHECK(r.entry(0, 0)[1] == 1.0);
  CHECK(squared_norms(r)(0, 0) == 1.0);
}

TEST_CASE("realify preserves nu and isometry") {
  Rng seeds(41);
  for (int t = 0; t < 20; ++t) {
    const auto v = std::get<VectorMatrixC>(sample_isometry(Field::C, 4, 2, seeds.next_u64()));
    const VectorMatrixR r = realify(v);
    CHECK(r.d() == 4);
    CHECK((squared_norms(v) - squared_norms(r)).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(check_isometry(r, 1e-10).ok);
  }
}

TEST_CASE("complexify frozen examples") {
  VectorMatrixH v(1, 1);
  SUBCASE("[1] -> ((1, 0))") {
    v.entry(0, 0)[0] = Quaternion(1.0);
    const VectorMatrixC c = complexify_from_quaternion(v);
    CHECK(c.entry(0, 0)[0] == Complex(1, 0));
    CHECK(c.entry(0, 0)[1] == Complex(0, 0));
  }
  SUBCASE("[j] -> ((0, 1))") {
    v.entry(0, 0)[0] = Quaternion{0, 0, 1, 0};
    const VectorMatrixC c = complexify_from_quaternion(v);
    CHECK(c.entry(0, 0)[0] == Complex(0, 0));
    CHECK(c.entry(0, 0)[1] == Complex(1, 0));
    CHECK(squared_norms(c)(0, 0) == 1.0);
  }
}

TEST_CASE("complexify preserves nu and isometry on random symplectic samples") {
  Rng seeds(43);
  for (int t = 0; t < 20; ++t) {
    const auto v = std::get<VectorMatrixH>(sample_isometry(Field::H, 2, 2, seeds.next_u64()));
    const VectorMatrixC c = complexify_from_quaternion(v);
    CHECK(c.d() == 4);
    CHECK((squared_norms(v) - squared_norms(c)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(check_isometry(c, 1e-10).ok);
  }
}

TEST_CASE("realify of complexify quadruples the dimension and preserves nu") {
  const auto v = std::get<VectorMatrixH>(sample_isometry(Field::H, 3, 2, 47));
  const VectorMatrixR r = realify(complexify_from_quaternion(v));
  CHECK(r.d() == 4 * v.d());
  CHECK((squared_norms(v) - squared_norms(r)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(check_isometry(r, 1e-10).ok);
}

TEST_CASE("pad_dimension") {
  const VectorMatrixR v = rotation2(1.1);
  SUBCASE("same d is the identity") {
    const VectorMatrixR w = pad_dimension(v, 1);
    CHECK(v == w);
  }
  SUBCASE("padding preserves nu and isometry") {
    const VectorMatrixR w = pad_dimension(v, 3);
    CHECK(w.d() == 3);
    CHECK((squared_norms(v) - squared_norms(w)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(check_isometry(w).ok);
  }
  SUBCASE("shrinking is rejected") {
    const VectorMatrixR w = pad_dimension(v, 2);
    CHECK_THROWS_AS(pad_dimension(w, 1), InvalidInputError);
  }
}

TEST_CASE("padded n-1 construction still passes check_isometry") {
  const Bistochastic p = Bistochastic::uniform(5);
  const ConstructionResult r = construct_nminus1(p, ConstructMode::weighted);
  REQUIRE(r.success());
  const VectorMatrixR padded = pad_dimension(r.V, 6);
  CHECK(check_isometry(padded, 1e-10).ok);
  CHECK((squared_norms(padded) - p.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("dims reproduces the classical d = 1 values") {
  for (int k = 1; k <= 10; ++k) {
    CHECK(dims(Field::R, k, 1).dim_iso == k * (k - 1) / 2);
    CHECK(dims(Field::C, k, 1).dim_iso == k * k);
    CHECK(dims(Field::H, k, 1).dim_iso == 2 * k * k + k);
  }
}

TEST_CASE("dims quotient values at d = 1") {
  for (int n = 2; n <= 10; ++n)
    CHECK(dims(Field::C, n, 1).dim_doc == (n - 1) * (n - 1));
  CHECK(dims(Field::R, 3, 1).dim_doc == 3);
}

TEST_CASE("dims is monotone in d up to d = n") {
  for (Field f : {Field::R, Field::C, Field::H})
    for (int n = 1; n <= 10; ++n)
      for (int d = 1; d < n; ++d) {
        CHECK(dims(f, n, d + 1).dim_iso >= dims(f, n, d).dim_iso);
        CHECK(dims(f, n, d + 1).dim_doc >= dims(f, n, d).dim_doc);
      }
}

TEST_CASE("the quotient dimension never exceeds the isometry dimension") {
  for (Field f : {Field::R, Field::C, Field::H})
    for (int n = 1; n <= 10; ++n)
      for (int d = 1; d <= n; ++d) {
        const DimensionReport r = dims(f, n, d);
        CHECK(r.dim_doc <= r.dim_iso);
      }
}

TEST_CASE("bistochastic validation") {
  Eigen::MatrixXd m(2, 2);
  m << 0.6, 0.4, 0.4, 0.6;
  CHECK_NOTHROW((void)Bistochastic{m});
  m(0, 0) = 0.7;
  CHECK_THROWS_AS((void)Bistochastic{m}, InvalidInputError);
  Eigen::MatrixXd neg(2, 2);
  neg << 1.2, -0.2, -0.2, 1.2;
  CHECK_THROWS_AS((void)Bistochastic{neg}, InvalidInputError);
}
