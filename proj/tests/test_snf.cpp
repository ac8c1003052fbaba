#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "symgeo/snf.hpp"

using namespace symgeo;

namespace {

void check_certificate(const IntMatrix& a, const SnfResult& snf) {
  // d = u * a * v with unimodular transforms.
  CHECK(multiply(multiply(snf.u, a), snf.v) == snf.d);
  BigInt du = determinant(snf.u);
  BigInt dv = determinant(snf.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));

  // Diagonal, non-negative, divisibility chain.
  for (int i = 0; i < snf.d.rows; ++i)
    for (int j = 0; j < snf.d.cols; ++j)
      if (i != j) CHECK(snf.d.at(i, j) == 0);
  std::vector<BigInt> diag = snf.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (i + 1 < diag.size() && diag[i] != 0)
      CHECK(diag[i + 1] % diag[i] == 0);
    if (diag[i] == 0 && i + 1 < diag.size()) CHECK(diag[i + 1] == 0);
  }
}

}  // namespace

TEST_CASE("smith normal form of fixed matrices") {
  IntMatrix a(2, 2);
  a.at(0, 0) = 2;
  a.at(0, 1) = -4;
  SnfResult snf = smith_normal_form(a);
  check_certificate(a, snf);
  CHECK(snf.diagonal() == std::vector<BigInt>{2, 0});

  IntMatrix b(2, 2);
  b.at(0, 0) = 2;
  b.at(0, 1) = 0;
  b.at(1, 0) = 0;
  b.at(1, 1) = 3;
  SnfResult s2 = smith_normal_form(b);
  check_certificate(b, s2);
  CHECK(s2.diagonal() == std::vector<BigInt>{1, 6});

  IntMatrix zero(3, 2);
  SnfResult s3 = smith_normal_form(zero);
  check_certificate(zero, s3);
  CHECK(s3.diagonal() == std::vector<BigInt>{0, 0});
}

TEST_CASE("smith normal form against the minor-gcd oracle") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j) a.at(i, j) = entry(rng);
    SnfResult snf = smith_normal_form(a);
    check_certificate(a, snf);
    CHECK(snf.diagonal() == symgeo::testing::snf_diagonal_by_minors(a));
  }
}
