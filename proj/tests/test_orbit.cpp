#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracle.hpp"
#include "tangle4/errors.hpp"
#include "tangle4/ket.hpp"
#include "tangle4/orbit.hpp"

using tangle4::Complex;
using tangle4::LocalOperator;
using tangle4::PureState4;

TEST_CASE("random_sl2 has unit determinant") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const LocalOperator op = tangle4::random_sl2(rng);
    CHECK(std::abs(op.det() - Complex{1.0, 0.0}) <= 1e-12);
  }
}

TEST_CASE("random_sl2 is deterministic per seed") {
  const LocalOperator a = tangle4::random_sl2(std::uint64_t{99});
  const LocalOperator b = tangle4::random_sl2(std::uint64_t{99});
  CHECK(a.m00 == b.m00);
  CHECK(a.m01 == b.m01);
  CHECK(a.m10 == b.m10);
  CHECK(a.m11 == b.m11);
  const LocalOperator c = tangle4::random_sl2(std::uint64_t{100});
  CHECK(a.m00 != c.m00);
}

TEST_CASE("quadruple draws are independent") {
  std::mt19937_64 rng(52);
  const auto ops = tangle4::random_sl2_quadruple(rng);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(ops[i].det() - Complex{1.0, 0.0}) <= 1e-12);
    for (int j = i + 1; j < 4; ++j) {
      CHECK(ops[i].m00 != ops[j].m00);
    }
  }
}

TEST_CASE("orbit_samples is reproducible and respects count") {
  const PureState4 ghz = tangle4::parse_ket("|0000>+|1111>");
  const auto first = tangle4::orbit_samples(ghz, 5, 7);
  const auto second = tangle4::orbit_samples(ghz, 5, 7);
  REQUIRE(first.size() == 5);
  REQUIRE(second.size() == 5);
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i] == second[i]);
  }
  const auto other_seed = tangle4::orbit_samples(ghz, 5, 8);
  CHECK(first[0] != other_seed[0]);
  CHECK_FALSE(first[0].is_zero());
}

TEST_CASE("orbit_samples validates its arguments") {
  const PureState4 ghz = tangle4::parse_ket("|0000>+|1111>");
  CHECK_THROWS_AS(tangle4::orbit_samples(ghz, 0, 7), std::invalid_argument);
  CHECK_THROWS_AS(tangle4::orbit_samples(ghz, -3, 7), std::invalid_argument);
  CHECK_THROWS_AS(tangle4::orbit_samples(PureState4{}, 5, 7), tangle4::zero_state_error);
}

TEST_CASE("orbit application agrees with the dense oracle") {
  std::mt19937_64 rng(53);
  const PureState4 ghz = tangle4::parse_ket("|0000>+|1111>");
  const auto ops = tangle4::random_sl2_quadruple(rng);
  const PureState4 fast = tangle4::apply_local(ghz, ops);
  const PureState4 dense =
      oracle::apply_local(ghz, oracle::to_mat2(ops[0]), oracle::to_mat2(ops[1]),
                          oracle::to_mat2(ops[2]), oracle::to_mat2(ops[3]));
  for (int i = 0; i < PureState4::kDim; ++i) {
    CHECK(std::abs(fast[i] - dense[i]) < 1e-13);
  }
}
