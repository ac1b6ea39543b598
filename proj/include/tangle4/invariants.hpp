#pragma once

#include <array>
#include <string>

#include "tangle4/state.hpp"

namespace tangle4 {

// Polynomial invariants of four-qubit states under determinant-1 local
// operations (SL(2,C) on each qubit).
//
// Building block: the unconjugated expectation value
//
//     ((M)) = sum_{x,y} psi_x M_{x,y} psi_y
//
// which is bilinear in the amplitudes (no complex conjugation). For
// Pauli strings M = sigma_mu1 (x) ... (x) sigma_mu4 with the basis
// (sigma_0, sigma_1, sigma_2, sigma_3) = (1, sigma_x, sigma_y, sigma_z),
// repeated Pauli indices are contracted with the metric weights
//
//     g = (g_0, g_1, g_2, g_3) = (-1, 1, 0, 1),
//
// so contracted sums run over mu in {0, 1, 3} only (index 2 carries
// weight zero and is skipped outright).
//
// Generators (degrees 2, 4, 4, 4, 6):
//
//     A  = ((sigma_2 sigma_2 sigma_2 sigma_2))
//     B1 = sum g_mu g_nu ((sigma_mu sigma_nu sigma_2 sigma_2))^2     (indices on qubits 1,2)
//     B2 = same with the free indices on qubits 1,3
//     B3 = 3 A^2 - B1 - B2                                           (sum rule)
//     C  = sum g_mu g_nu g_lam f12(mu,nu) f13(mu,lam) f23(nu,lam)
//
// where fab(mu,nu) places sigma_mu on qubit a, sigma_nu on qubit b and
// sigma_2 on the rest. Derived quantities:
//
//     D = C + (5/9) A^3
//     L = (B2 - B3)/48,  M = (B3 - B1)/48,  N = (B1 - B2)/48
//     X = (C + A^3)^2 - 128 A^2 (L^2 + M^2 + N^2)
//
// All of these are exactly invariant under apply_local with det-1
// operators, and homogeneous of the listed degree under rescaling.

/// Pauli label in {0,1,2,3} together with its metric weight.
class PauliIndex {
 public:
  explicit PauliIndex(int value);

  int value() const { return value_; }

  /// Contraction weight g_mu: (-1, 1, 0, 1).
  double metric_weight() const;

 private:
  int value_;
};

/// ((sigma_mu[0] (x) sigma_mu[1] (x) sigma_mu[2] (x) sigma_mu[3])) on `state`.
Complex bilinear_form(const PureState4& state, const std::array<PauliIndex, 4>& mu);

Complex inv_a(const PureState4& state);   // degree 2
Complex inv_b1(const PureState4& state);  // degree 4, indices on qubits 1,2
Complex inv_b2(const PureState4& state);  // degree 4, indices on qubits 1,3
Complex inv_b3(const PureState4& state);  // degree 4, via the sum rule

/// B3 evaluated directly with the free indices on qubits 1,4; must agree
/// with inv_b3 to rounding. Kept separate as a consistency probe.
Complex inv_b3_direct(const PureState4& state);

Complex inv_c(const PureState4& state);  // degree 6
Complex inv_d(const PureState4& state);  // degree 6, C + (5/9) A^3

struct LmnxValues {
  Complex L, M, N, X;
};

/// The differences L, M, N (degree 4, summing to zero) and X (degree 12).
LmnxValues inv_lmnx(const PureState4& state);

/// All ten invariants of one state, evaluated in a single pass.
struct InvariantSet {
  Complex A, B1, B2, B3, C, D, L, M, N, X;
};

InvariantSet evaluate_invariants(const PureState4& state);

/// Names and homogeneity degrees in InvariantSet field order.
struct InvariantInfo {
  const char* name;
  int degree;
};
constexpr std::array<InvariantInfo, 10> kInvariantInfo = {{
    {"A", 2}, {"B1", 4}, {"B2", 4}, {"B3", 4}, {"C", 6},
    {"D", 6}, {"L", 4}, {"M", 4}, {"N", 4}, {"X", 12},
}};

/// Entry of an InvariantSet by kInvariantInfo position.
Complex invariant_entry(const InvariantSet& set, int index);

/// Degree-compensated moduli |P|^(2/deg P) of the normalized state:
/// |A|, |Bj|^(1/2), |C|^(1/3), |D|^(1/3), |L,M,N|^(1/2), |X|^(1/6).
/// Throws zero_state_error on the zero vector.
struct TangleMagnitudes {
  double A, B1, B2, B3, C, D, L, M, N, X;
};

TangleMagnitudes tangle_magnitudes(const PureState4& state);

double magnitude_entry(const TangleMagnitudes& mags, int index);

}  // namespace tangle4
