#include <doctest.h>

#include <random>

#include "support/oracle.hpp"
#include "support/random.hpp"
#include "tangle4/errors.hpp"
#include "tangle4/orbit.hpp"
#include "tangle4/state.hpp"

using tangle4::Complex;
using tangle4::LocalOperator;
using tangle4::PureState4;

TEST_CASE("basis states use qubit 1 as the most significant bit") {
  const PureState4 s = PureState4::basis(0b1000);
  CHECK(s[8] == Complex{1.0, 0.0});
  CHECK(s.norm_sq() == 1.0);

  // |1000> means qubit 1 is set, so X on qubit 1 must map |0000> -> |1000>.
  LocalOperator x;
  x.m00 = {0, 0};
  x.m01 = {1, 0};
  x.m10 = {1, 0};
  x.m11 = {0, 0};
  const PureState4 flipped = tangle4::apply_single(PureState4::basis(0), x, 1);
  CHECK(flipped[0b1000] == Complex{1.0, 0.0});
  const PureState4 flipped4 = tangle4::apply_single(PureState4::basis(0), x, 4);
  CHECK(flipped4[0b0001] == Complex{1.0, 0.0});
}

TEST_CASE("basis index and qubit arguments are validated") {
  CHECK_THROWS_AS(PureState4::basis(-1), std::out_of_range);
  CHECK_THROWS_AS(PureState4::basis(16), std::out_of_range);
  LocalOperator id;
  CHECK_THROWS_AS(tangle4::apply_single(PureState4::basis(0), id, 0), std::out_of_range);
  CHECK_THROWS_AS(tangle4::apply_single(PureState4::basis(0), id, 5), std::out_of_range);
}

TEST_CASE("state arithmetic") {
  const PureState4 a = PureState4::basis(3);
  const PureState4 b = PureState4::basis(5);
  PureState4 sum = a + b;
  CHECK(sum.norm_sq() == 2.0);
  sum -= b;
  CHECK(sum == a);
  const PureState4 scaled = Complex{0.0, 2.0} * a;
  CHECK(scaled[3] == Complex{0.0, 2.0});
  CHECK(scaled.norm_sq() == 4.0);
  CHECK(PureState4{}.is_zero());
  CHECK_FALSE(a.is_zero());
  CHECK_THROWS_AS(PureState4{}.normalized(), tangle4::zero_state_error);
  CHECK(a.normalized() == a);
}

TEST_CASE("local operator algebra") {
  LocalOperator a;
  a.m00 = {1, 0};
  a.m01 = {2, 0};
  a.m10 = {3, 0};
  a.m11 = {4, 0};
  const LocalOperator b = LocalOperator::diagonal({2, 0}, {5, 0});
  const LocalOperator ab = a * b;
  CHECK(ab.m00 == Complex{2, 0});
  CHECK(ab.m01 == Complex{10, 0});
  CHECK(ab.m10 == Complex{6, 0});
  CHECK(ab.m11 == Complex{20, 0});
  CHECK(a.det() == Complex{-2, 0});
  CHECK(LocalOperator::identity().det() == Complex{1, 0});
}

TEST_CASE("apply_single agrees with the dense kron oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState4 psi = testrand::random_state(rng);
    const LocalOperator op = tangle4::random_sl2(rng);
    for (int qubit = 1; qubit <= 4; ++qubit) {
      std::array<oracle::Mat2, 4> ops = {oracle::pauli(0), oracle::pauli(0), oracle::pauli(0),
                                         oracle::pauli(0)};
      ops[qubit - 1] = oracle::to_mat2(op);
      const PureState4 expected = oracle::apply_local(psi, ops[0], ops[1], ops[2], ops[3]);
      const PureState4 got = tangle4::apply_single(psi, op, qubit);
      CHECK((got - expected).norm() < 1e-14);
    }
  }
}

TEST_CASE("apply_local agrees with the dense kron oracle") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState4 psi = testrand::random_state(rng);
    const std::array<LocalOperator, 4> js = tangle4::random_sl2_quadruple(rng);
    const PureState4 expected =
        oracle::apply_local(psi, oracle::to_mat2(js[0]), oracle::to_mat2(js[1]),
                            oracle::to_mat2(js[2]), oracle::to_mat2(js[3]));
    const PureState4 got = tangle4::apply_local(psi, js);
    CHECK((got - expected).norm() < 1e-13);
  }
}

TEST_CASE("qubit permutations") {
  const tangle4::QubitPermutation swap14 = tangle4::swap_qubits(1, 4);
  const PureState4 moved = tangle4::permute_qubits(PureState4::basis(0b1000), swap14);
  CHECK(moved[0b0001] == Complex{1.0, 0.0});

  // |1010>: qubits 1 and 3 set. Swapping qubits 2 and 3 gives |1100>.
  const PureState4 s = tangle4::permute_qubits(PureState4::basis(0b1010),
                                               tangle4::swap_qubits(2, 3));
  CHECK(s[0b1100] == Complex{1.0, 0.0});

  CHECK(tangle4::all_qubit_permutations().size() == 24);
  CHECK_THROWS_AS(tangle4::swap_qubits(0, 3), std::out_of_range);
  const tangle4::QubitPermutation bad = {1, 1, 3, 4};
  CHECK_THROWS_AS(tangle4::permute_qubits(PureState4::basis(0), bad), std::invalid_argument);
}

TEST_CASE("permutation composition matches acting twice") {
  std::mt19937_64 rng(13);
  const PureState4 psi = testrand::random_state(rng);
  const PureState4 once =
      tangle4::permute_qubits(tangle4::permute_qubits(psi, tangle4::swap_qubits(1, 2)),
                              tangle4::swap_qubits(3, 4));
  PureState4 expected;
  for (int x = 0; x < 16; ++x) {
    const int b1 = (x >> 3) & 1, b2 = (x >> 2) & 1, b3 = (x >> 1) & 1, b4 = x & 1;
    expected[(b2 << 3) | (b1 << 2) | (b4 << 1) | b3] = psi[x];
  }
  CHECK((once - expected).norm() == 0.0);
}

TEST_CASE("is_symmetric") {
  const PureState4 ghz = PureState4::basis(0) + PureState4::basis(15);
  CHECK(tangle4::is_symmetric(ghz, 1e-9));
  const PureState4 w4 = PureState4::basis(1) + PureState4::basis(2) + PureState4::basis(4) +
                        PureState4::basis(8);
  CHECK(tangle4::is_symmetric(w4, 1e-9));
  CHECK_FALSE(tangle4::is_symmetric(PureState4::basis(0b1100), 1e-9));

  std::mt19937_64 rng(14);
  CHECK(tangle4::is_symmetric(testrand::random_symmetric_state(rng), 1e-9));

  CHECK_THROWS_AS(tangle4::is_symmetric(PureState4{}, 1e-9), tangle4::zero_state_error);
  CHECK_THROWS_AS(tangle4::is_symmetric(ghz, 0.0), std::invalid_argument);
}
