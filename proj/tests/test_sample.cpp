#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "vstoch/core_ops.hpp"
#include "vstoch/rng.hpp"
#include "vstoch/sample.hpp"

using namespace vstoch;

TEST_CASE("sinkhorn samples pass the bistochastic invariants tightly") {
  Rng seeds(1);
  for (int t = 0; t < 1000; ++t) {
    const Bistochastic p = sample_sinkhorn(3 + t % 4, seeds.next_u64());
    const int n = p.n();
    for (int r = 0; r < n; ++r) CHECK(std::abs(p.matrix().row(r).sum() - 1.0) <= 1e-10);
    for (int c = 0; c < n; ++c) CHECK(std::abs(p.matrix().col(c).sum() - 1.0) <= 1e-10);
    CHECK(p.matrix().minCoeff() > 0.0);
  }
}

TEST_CASE("sinkhorn n = 1 returns [1]") {
  const Bistochastic p = sample_sinkhorn(1, 5);
  CHECK(p.n() == 1);
  CHECK(p(0, 0) == 1.0);
}

TEST_CASE("sinkhorn is deterministic under a fixed seed") {
  const Bistochastic a = sample_sinkhorn(3, 42);
  const Bistochastic b = sample_sinkhorn(3, 42);
  CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() == 0.0);  // bit identical
  const Bistochastic c = sample_sinkhorn(3, 43);
  CHECK((a.matrix() - c.matrix()).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("birkhoff samples") {
  SUBCASE("k = 1 is a permutation matrix") {
    const Bistochastic p = sample_birkhoff(4, 1, 7);
    int ones = 0;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        CHECK((p(r, c) == 0.0 || p(r, c) == 1.0));
        if (p(r, c) == 1.0) ++ones;
      }
    CHECK(ones == 4);
  }
  SUBCASE("k = 2 is a strict mixture") {
    const Bistochastic p = sample_birkhoff(4, 2, 8);
    double largest = 0.0;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) largest = std::max(largest, p(r, c));
    CHECK(largest < 1.0);
  }
  SUBCASE("sums hold for many draws") {
    Rng seeds(9);
    for (int t = 0; t < 300; ++t) {
      const Bistochastic p = sample_birkhoff(5, 1 + t % 5, seeds.next_u64());
      for (int r = 0; r < 5; ++r) CHECK(std::abs(p.matrix().row(r).sum() - 1.0) <= 1e-12);
      for (int c = 0; c < 5; ++c) CHECK(std::abs(p.matrix().col(c).sum() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("random_permutation covers the symmetric group") {
  Rng rng(11);
  std::set<std::vector<int>> seen;
  for (int t = 0; t < 200; ++t) seen.insert(random_permutation(3, rng));
  CHECK(seen.size() == 6);
}

TEST_CASE("isometry samples pass the column check at 1e-10") {
  Rng seeds(12);
  for (Field f : {Field::R, Field::C, Field::H}) {
    for (int t = 0; t < 100; ++t) {
      const int n = 2 + t % 4;
      const int d = 1 + t % 3;
      const AnyVectorMatrix v = sample_isometry(f, n, d, seeds.next_u64());
      CHECK(check_isometry(v, 1e-10).ok);
    }
  }
}

TEST_CASE("nu of a square (d = 1) isometry sample is bistochastic") {
  Rng seeds(13);
  for (Field f : {Field::R, Field::C, Field::H}) {
    const AnyVectorMatrix v = sample_isometry(f, 5, 1, seeds.next_u64());
    CHECK_NOTHROW(nu(v));
  }
}

TEST_CASE("complex 2x2 samples are unitary: |det| = 1") {
  Rng seeds(14);
  for (int t = 0; t < 50; ++t) {
    const auto v = std::get<VectorMatrixC>(sample_isometry(Field::C, 2, 1, seeds.next_u64()));
    const Complex det =
        v.entry(0, 0)[0] * v.entry(1, 1)[0] - v.entry(0, 1)[0] * v.entry(1, 0)[0];
    CHECK(std::abs(std::abs(det) - 1.0) <= 1e-10);
  }
}

TEST_CASE("quaternionic 2x2 block samples pass the quaternionic gram check") {
  Rng seeds(15);
  for (int t = 0; t < 50; ++t) {
    const AnyVectorMatrix v = sample_isometry(Field::H, 2, 2, seeds.next_u64());
    CHECK(check_isometry(v, 1e-10).ok);
  }
}

TEST_CASE("isometry sampling is deterministic under a fixed seed") {
  const auto a = std::get<VectorMatrixH>(sample_isometry(Field::H, 3, 2, 99));
  const auto b = std::get<VectorMatrixH>(sample_isometry(Field::H, 3, 2, 99));
  CHECK(a == b);
}

TEST_CASE("random unit scalars have unit norm") {
  for (const double s : random_unit_scalars<double>(20, 3)) CHECK(std::abs(s) == 1.0);
  for (const Complex& s : random_unit_scalars<Complex>(20, 3))
    CHECK(std::abs(norm_sq_of(s) - 1.0) <= 1e-12);
  for (const Quaternion& s : random_unit_scalars<Quaternion>(20, 3))
    CHECK(std::abs(norm_sq_of(s) - 1.0) <= 1e-12);
}

TEST_CASE("rng streams: fork independence and determinism") {
  Rng a(5);
  Rng b(5);
  for (int t = 0; t < 100; ++t) CHECK(a.next_u64() == b.next_u64());
  Rng f1 = a.fork(1);
  Rng f2 = a.fork(2);
  CHECK(f1.next_u64() != f2.next_u64());
  // fork depends on the origin seed, not on how much was consumed
  Rng c(5);
  CHECK(c.fork(1).next_u64() == a.fork(1).next_u64());
}

TEST_CASE("rng uniform and normal ranges") {
  Rng rng(17);
  double acc = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    acc += rng.normal();
  }
  CHECK(std::abs(acc / 10000.0) < 0.05);  // loose sanity bound on the mean
}
