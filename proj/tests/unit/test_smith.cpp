#include <doctest.h>

#include "support/oracles.hpp"
#include "surgeon/int_matrix.hpp"

using namespace surgeon;

namespace {

IntMatrix from_rows(const oracle::Matrix& rows) {
  IntMatrix a(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = rows[i][j];
  return a;
}

}  // namespace

TEST_CASE("Smith form agrees with determinantal divisors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const oracle::Matrix rows = oracle::random_matrix(rng, 4, 9);
    const IntMatrix a = from_rows(rows);
    const SmithForm f = smith_normal_form(a);
    REQUIRE(f.u * a * f.v == f.d);
    CHECK(abs(determinant(f.u)) == 1);
    CHECK(abs(determinant(f.v)) == 1);
    const auto want = oracle::determinantal_factors(rows);
    for (std::size_t k = 0; k < want.size(); ++k) CHECK(f.d(k, k) == want[k]);
    // The two oracles agree with each other as well.
    CHECK(oracle::invariant_factors(rows) == want);
  }
}

TEST_CASE("Smith form of wide, tall and zero matrices") {
  const IntMatrix z(2, 3);
  CHECK(smith_normal_form(z).d == z);
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const SmithForm f = smith_normal_form(a);
  CHECK(f.d(0, 0) == 2);
  CHECK(f.d(1, 1) == 6);
  CHECK(f.d(2, 2) == 12);
  const IntMatrix tall{{3}, {5}};
  CHECK(smith_normal_form(tall).d(0, 0) == 1);
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    oracle::Matrix rows = oracle::random_matrix(rng, 5, 20);
    rows.resize(std::min(rows.size(), rows[0].size()));
    for (auto& r : rows) r.resize(rows.size());
    CHECK(determinant(from_rows(rows)) == oracle::cofactor_det(rows));
  }
}

TEST_CASE("cokernels and their names") {
  CHECK(cokernel_of_relations(IntMatrix{{3}}).to_string() == "Z/3");
  CHECK(cokernel_of_relations(IntMatrix{{0}}).to_string() == "Z");
  CHECK(cokernel_of_relations(IntMatrix{{1}}).to_string() == "trivial");
  CHECK(cokernel_of_relations(IntMatrix{{2, 0, 0}, {0, 4, 0}}).to_string() == "Z + Z/2 + Z/4");
  CHECK(cokernel_of_relations(IntMatrix{{2, 0}, {0, 3}}).to_string() == "Z/6");
  CHECK(cokernel_of_relations(IntMatrix(0, 2)).to_string() == "Z^2");
}

TEST_CASE("big entries stay exact") {
  IntMatrix a(2, 2);
  a(0, 0) = Integer("1000000000000000000000");
  a(0, 1) = Integer("999999999999999999999");
  a(1, 0) = 1;
  a(1, 1) = 1;
  CHECK(determinant(a) == 1);
  CHECK(cokernel_of_relations(a).trivial());
}
