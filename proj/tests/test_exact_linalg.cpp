#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "smatrix/exact_linalg.hpp"

using namespace smatrix;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

namespace {

RationalMatrix random_rational(std::mt19937& rng, Eigen::Index n, Eigen::Index m) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  RationalMatrix a(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) a(i, j) = Rational(num(rng), den(rng));
  }
  return a;
}

CycloMatrix random_cyclo(std::mt19937& rng, Eigen::Index n, std::int64_t conductor) {
  CycloMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = oracle::random_cyclo(rng, conductor);
  }
  return a;
}

}  // namespace

TEST_CASE("Bareiss determinant matches cofactor expansion over Q", "[linalg][property]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 1 + trial % 5;
    const RationalMatrix a = random_rational(rng, n, n);
    CHECK(exact_determinant(a) == oracle::cofactor_determinant(oracle::to_rows(a)));
  }
}

TEST_CASE("Bareiss determinant matches cofactor expansion over Q(zeta)", "[linalg][property]") {
  std::mt19937 rng(11);
  for (std::int64_t n : {3, 4, 8}) {
    for (Eigen::Index size = 1; size <= 4; ++size) {
      const CycloMatrix a = random_cyclo(rng, size, n);
      CHECK(exact_determinant(a) == oracle::cofactor_determinant(oracle::to_rows(a)));
    }
  }
}

TEST_CASE("inverse matches the adjugate formula", "[linalg][property]") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const CycloMatrix a = random_cyclo(rng, 1 + trial % 3, trial % 2 ? 4 : 3);
    if (exact_determinant(a).is_zero()) continue;
    const CycloMatrix inv = exact_inverse(a);
    CHECK(inv == oracle::adjugate_inverse(a));
    const CycloMatrix id = CycloMatrix::Identity(a.rows(), a.cols());
    CHECK(CycloMatrix(a * inv) == id);
  }
}

TEST_CASE("rank of structured matrices", "[linalg]") {
  RationalMatrix a(3, 3);
  a << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  CHECK(exact_rank(a) == 2);
  CHECK(exact_determinant(a) == 0);
  CHECK(exact_rank(RationalMatrix::Zero(3, 4)) == 0);
  RationalMatrix wide(2, 4);
  wide << 0, 0, 1, 2, 0, 0, 2, 4;
  CHECK(exact_rank(wide) == 1);
  RationalMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(exact_determinant(swap) == -1);
  CHECK_THROWS_AS(exact_inverse(a), Error);
  CHECK_THROWS_AS(exact_determinant(wide), Error);
  CHECK(exact_determinant(RationalMatrix(0, 0)) == 1);
}

TEST_CASE("Fourier matrix of Z/n has |det|^2 = n^n", "[linalg]") {
  for (std::int64_t n = 1; n <= 8; ++n) {
    const CycloMatrix f = matrix_of_roots(n, n, [&](Eigen::Index i, Eigen::Index j) {
      return RootOfUnity(n, static_cast<std::int64_t>(i * j));
    });
    const CycloNumber d = exact_determinant(f);
    BigInt nn = 1;
    for (std::int64_t i = 0; i < n; ++i) nn *= n;
    CHECK(d * d.conj() == CycloNumber(Rational(nn)));
    CHECK(CycloMatrix(f * conjugate_transpose(f)) == CycloMatrix(CycloMatrix::Identity(n, n) * CycloNumber(n)));
  }
}
