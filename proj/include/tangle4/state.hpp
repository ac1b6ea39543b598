#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "tangle4/errors.hpp"

namespace tangle4 {

using Complex = std::complex<double>;

/// Pure state of four qubits, stored as 16 complex amplitudes.
///
/// Basis convention: qubit 1 is the leftmost / most significant bit of a
/// basis label, so |b1 b2 b3 b4> lives at index 8*b1 + 4*b2 + 2*b3 + b4.
/// States are not kept normalized; operations that need a unit vector
/// normalize internally and say so.
class PureState4 {
 public:
  static constexpr int kQubits = 4;
  static constexpr int kDim = 16;

  /// Zero vector (all amplitudes 0).
  PureState4() : amp_{} {}

  explicit PureState4(const std::array<Complex, kDim>& amplitudes) : amp_(amplitudes) {}

  /// Computational basis state |b1 b2 b3 b4> for index in [0, 16).
  static PureState4 basis(int index);

  const Complex& operator[](std::size_t i) const { return amp_[i]; }
  Complex& operator[](std::size_t i) { return amp_[i]; }

  const std::array<Complex, kDim>& amplitudes() const { return amp_; }

  double norm_sq() const;
  double norm() const;

  /// True iff every amplitude is exactly zero.
  bool is_zero() const { return norm_sq() == 0.0; }

  /// State divided by its norm; throws zero_state_error on the zero vector.
  PureState4 normalized() const;

  bool operator==(const PureState4& other) const { return amp_ == other.amp_; }
  bool operator!=(const PureState4& other) const { return !(*this == other); }

  PureState4& operator+=(const PureState4& other);
  PureState4& operator-=(const PureState4& other);
  PureState4& operator*=(Complex scale);

  friend PureState4 operator+(PureState4 a, const PureState4& b) { return a += b; }
  friend PureState4 operator-(PureState4 a, const PureState4& b) { return a -= b; }
  friend PureState4 operator*(Complex scale, PureState4 s) { return s *= scale; }
  friend PureState4 operator*(PureState4 s, Complex scale) { return s *= scale; }

 private:
  std::array<Complex, kDim> amp_;
};

/// Invertible (in practice) 2x2 complex matrix acting on one qubit.
struct LocalOperator {
  Complex m00{1.0}, m01{0.0}, m10{0.0}, m11{1.0};

  Complex det() const { return m00 * m11 - m01 * m10; }

  static LocalOperator identity() { return {}; }
  static LocalOperator diagonal(Complex a, Complex b) { return {a, {}, {}, b}; }

  /// Matrix product, row-by-column.
  friend LocalOperator operator*(const LocalOperator& a, const LocalOperator& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
  }
};

/// Permutation of the qubit labels {1,2,3,4}: perm[j-1] is the position
/// that qubit j moves to. Must be a bijection.
using QubitPermutation = std::array<int, 4>;

/// Transposition of qubits a and b (1-based), identity elsewhere.
QubitPermutation swap_qubits(int a, int b);

/// All 24 permutations of {1,2,3,4} in lexicographic order.
const std::vector<QubitPermutation>& all_qubit_permutations();

/// Apply `op` to the given qubit (1-based), identity on the others.
PureState4 apply_single(const PureState4& state, const LocalOperator& op, int qubit);

/// Apply ops[0] (x) ops[1] (x) ops[2] (x) ops[3] to qubits 1..4, by
/// sequential single-qubit application.
PureState4 apply_local(const PureState4& state, const std::array<LocalOperator, 4>& ops);

/// Relabel qubits: the amplitude of |b1 b2 b3 b4> moves to the basis
/// string whose perm[j-1]-th slot holds b_j. Composing permutations and
/// then acting equals acting twice in sequence.
PureState4 permute_qubits(const PureState4& state, const QubitPermutation& perm);

/// True iff the state is invariant under all 24 qubit permutations:
/// max_perm ||perm(psi) - psi|| <= tol * ||psi||. Requires tol > 0 and a
/// nonzero state.
bool is_symmetric(const PureState4& state, double tol);

}  // namespace tangle4
