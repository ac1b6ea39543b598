#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tangle4/invariants.hpp"
#include "tangle4/state.hpp"

namespace tangle4 {

/// Result of the pairwise test. DistinctClasses is a proof; Inconclusive
/// means no invariant-based separation was found (the states may or may
/// not be equivalent).
enum class Outcome { DistinctClasses, Inconclusive };

/// One violated equality: `name` is either a single generator ("A") for
/// a zero-versus-nonzero mismatch, or "P/Q" for a failed cross-ratio,
/// with the cross-multiplied values on each side.
struct Witness {
  std::string name;
  Complex lhs, rhs;
};

struct Verdict {
  Outcome outcome;
  std::vector<Witness> witnesses;  // nonempty iff DistinctClasses

  bool distinct() const { return outcome == Outcome::DistinctClasses; }
};

/// Ratio P^m / Q^n of two generator values of one state, kept in
/// numerator/denominator form. m and n are chosen so that both parts
/// have the same homogeneity degree: m = lcm(i,j)/i, n = lcm(i,j)/j for
/// generators of degrees i and j.
struct EtaValue {
  Complex numerator, denominator;
  int degree_p, degree_q;  // i, j
  int power_p, power_q;    // m, n
};

EtaValue make_eta(Complex p_value, int degree_p, Complex q_value, int degree_q);

/// Invariant-ratio separation test on two nonzero states.
///
/// Each generator value is first snapped to zero when its modulus is at
/// most tol * ||state||^degree. A zero/nonzero mismatch on any generator
/// is a witness. For every generator pair the cross-multiplied equality
/// P(psi)^m Q(phi)^n = P(phi)^m Q(psi)^n is then checked with relative
/// tolerance tol against the scale
/// max(|lhs|, |rhs|, ||psi||^(i m) ||phi||^(i m) eps). Equal ratios for
/// all pairs prove nothing; any violation proves inequivalence under
/// invertible local operations.
Verdict discriminate(const PureState4& psi, const PureState4& phi, double tol = 1e-9);

enum class Family { W, GHZ, Cluster, X };

/// Position of a permutation-symmetric state in the (A, D) hierarchy:
/// both zero, A nonzero with D zero, or D nonzero.
enum class SymmetricLevel { AllZero, AnonzeroDzero, Dnonzero };

struct FamilyLabel {
  Family family;
  std::optional<SymmetricLevel> symmetric_level;  // set for symmetric states
};

std::string to_string(Family family);
std::string to_string(SymmetricLevel level);
std::string to_string(Outcome outcome);

/// Coarse family of a nonzero state, decided on the normalized vector
/// with one absolute tolerance: X nonzero -> X; else any of L,M,N
/// nonzero -> Cluster; else A nonzero -> GHZ; else W.
FamilyLabel classify(const PureState4& state, double tol = 1e-9);

/// classify plus the symmetric (A, D) level. Throws not_symmetric_error
/// when is_symmetric(state, tol) fails; use classify for such states.
FamilyLabel classify_symmetric(const PureState4& state, double tol = 1e-9);

}  // namespace tangle4
