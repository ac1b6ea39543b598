#include "tangle4/classify.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tangle4 {

namespace {

Complex integer_power(Complex base, int exponent) {
  Complex result{1.0, 0.0};
  for (int k = 0; k < exponent; ++k) {
    result *= base;
  }
  return result;
}

struct Generator {
  const char* name;
  Complex value;
  int degree;
};

std::array<Generator, 5> generator_values(const InvariantSet& set) {
  return {{{"A", set.A, 2},
           {"B1", set.B1, 4},
           {"B2", set.B2, 4},
           {"B3", set.B3, 4},
           {"C", set.C, 6}}};
}

// Snap a generator value to exact zero when it is numerically zero for
// a state of the given norm: |value| <= tol * norm^degree.
Complex snap_to_zero(Complex value, double tol, double norm, int degree) {
  return std::abs(value) <= tol * std::pow(norm, degree) ? Complex{} : value;
}

void require_usable(const PureState4& state, double tol, const char* who) {
  if (tol <= 0.0) {
    throw std::invalid_argument(std::string(who) + ": tolerance must be positive");
  }
  if (state.is_zero()) {
    throw zero_state_error(std::string(who) + ": zero state has no class");
  }
}

}  // namespace

EtaValue make_eta(Complex p_value, int degree_p, Complex q_value, int degree_q) {
  const int common = std::lcm(degree_p, degree_q);
  EtaValue eta;
  eta.degree_p = degree_p;
  eta.degree_q = degree_q;
  eta.power_p = common / degree_p;
  eta.power_q = common / degree_q;
  eta.numerator = integer_power(p_value, eta.power_p);
  eta.denominator = integer_power(q_value, eta.power_q);
  return eta;
}

Verdict discriminate(const PureState4& psi, const PureState4& phi, double tol) {
  require_usable(psi, tol, "discriminate");
  require_usable(phi, tol, "discriminate");

  const auto gens_psi = generator_values(evaluate_invariants(psi));
  const auto gens_phi = generator_values(evaluate_invariants(phi));
  const double norm_psi = psi.norm();
  const double norm_phi = phi.norm();

  std::array<Complex, 5> snapped_psi;
  std::array<Complex, 5> snapped_phi;
  Verdict verdict;

  for (std::size_t g = 0; g < gens_psi.size(); ++g) {
    snapped_psi[g] = snap_to_zero(gens_psi[g].value, tol, norm_psi, gens_psi[g].degree);
    snapped_phi[g] = snap_to_zero(gens_phi[g].value, tol, norm_phi, gens_phi[g].degree);
    const bool zero_psi = snapped_psi[g] == Complex{};
    const bool zero_phi = snapped_phi[g] == Complex{};
    if (zero_psi != zero_phi) {
      verdict.witnesses.push_back({gens_psi[g].name, gens_psi[g].value, gens_phi[g].value});
    }
  }

  for (std::size_t p = 0; p < gens_psi.size(); ++p) {
    for (std::size_t q = p + 1; q < gens_psi.size(); ++q) {
      const EtaValue eta_psi =
          make_eta(snapped_psi[p], gens_psi[p].degree, snapped_psi[q], gens_psi[q].degree);
      const EtaValue eta_phi =
          make_eta(snapped_phi[p], gens_phi[p].degree, snapped_phi[q], gens_phi[q].degree);
      // eta_psi == eta_phi, cross-multiplied to avoid dividing by small
      // denominators.
      const Complex lhs = eta_psi.numerator * eta_phi.denominator;
      const Complex rhs = eta_phi.numerator * eta_psi.denominator;
      const int total_degree = gens_psi[p].degree * eta_psi.power_p;  // = lcm(i, j)
      const double floor = std::pow(norm_psi, total_degree) * std::pow(norm_phi, total_degree) *
                           std::numeric_limits<double>::epsilon();
      const double scale = std::max({std::abs(lhs), std::abs(rhs), floor});
      if (std::abs(lhs - rhs) > tol * scale) {
        verdict.witnesses.push_back(
            {std::string(gens_psi[p].name) + "/" + gens_psi[q].name, lhs, rhs});
      }
    }
  }

  verdict.outcome =
      verdict.witnesses.empty() ? Outcome::Inconclusive : Outcome::DistinctClasses;
  return verdict;
}

std::string to_string(Family family) {
  switch (family) {
    case Family::W: return "W";
    case Family::GHZ: return "GHZ";
    case Family::Cluster: return "cluster";
    case Family::X: return "X";
  }
  throw std::logic_error("unreachable family");
}

std::string to_string(SymmetricLevel level) {
  switch (level) {
    case SymmetricLevel::AllZero: return "AllZero";
    case SymmetricLevel::AnonzeroDzero: return "AnonzeroDzero";
    case SymmetricLevel::Dnonzero: return "Dnonzero";
  }
  throw std::logic_error("unreachable symmetric level");
}

std::string to_string(Outcome outcome) {
  return outcome == Outcome::DistinctClasses ? "DistinctClasses" : "Inconclusive";
}

FamilyLabel classify(const PureState4& state, double tol) {
  require_usable(state, tol, "classify");
  const InvariantSet set = evaluate_invariants(state.normalized());
  Family family = Family::W;
  if (std::abs(set.X) > tol) {
    family = Family::X;
  } else if (std::abs(set.L) > tol || std::abs(set.M) > tol || std::abs(set.N) > tol) {
    family = Family::Cluster;
  } else if (std::abs(set.A) > tol) {
    family = Family::GHZ;
  }
  return {family, std::nullopt};
}

FamilyLabel classify_symmetric(const PureState4& state, double tol) {
  require_usable(state, tol, "classify_symmetric");
  if (!is_symmetric(state, tol)) {
    throw not_symmetric_error(
        "classify_symmetric: state is not permutation symmetric at this tolerance");
  }
  FamilyLabel label = classify(state, tol);
  const InvariantSet set = evaluate_invariants(state.normalized());
  if (std::abs(set.D) > tol) {
    label.symmetric_level = SymmetricLevel::Dnonzero;
  } else if (std::abs(set.A) > tol) {
    label.symmetric_level = SymmetricLevel::AnonzeroDzero;
  } else {
    label.symmetric_level = SymmetricLevel::AllZero;
  }
  return label;
}

}  // namespace tangle4
