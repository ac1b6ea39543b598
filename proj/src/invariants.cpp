#include "tangle4/invariants.hpp"

#include <cmath>
#include <stdexcept>

namespace tangle4 {

namespace {

// Pauli matrices (1, sigma_x, sigma_y, sigma_z), row-major 2x2.
constexpr Complex kI{0.0, 1.0};
const std::array<std::array<Complex, 4>, 4> kPauli = {{
    {{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}},
    {{{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}}},
    {{{0.0, 0.0}, -kI, kI, {0.0, 0.0}}},
    {{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}}},
}};

constexpr std::array<double, 4> kMetric = {-1.0, 1.0, 0.0, 1.0};

// Indices taking part in contracted sums; index 2 has weight 0 and is
// skipped everywhere.
constexpr std::array<int, 3> kLive = {0, 1, 3};
constexpr std::array<double, 3> kLiveWeight = {-1.0, 1.0, 1.0};

LocalOperator pauli_operator(int mu) {
  const auto& p = kPauli[mu];
  return {p[0], p[1], p[2], p[3]};
}

Complex unconjugated_dot(const PureState4& a, const PureState4& b) {
  Complex total{};
  for (int i = 0; i < PureState4::kDim; ++i) {
    total += a[i] * b[i];
  }
  return total;
}

Complex pauli_string_form(const PureState4& state, int mu1, int mu2, int mu3, int mu4) {
  PureState4 t = apply_single(state, pauli_operator(mu1), 1);
  t = apply_single(t, pauli_operator(mu2), 2);
  t = apply_single(t, pauli_operator(mu3), 3);
  t = apply_single(t, pauli_operator(mu4), 4);
  return unconjugated_dot(state, t);
}

// f_{ab}(mu, nu): sigma_mu on qubit a, sigma_nu on qubit b, sigma_2 on
// the remaining two qubits, restricted to the live indices {0, 1, 3}.
using PairTable = std::array<std::array<Complex, 3>, 3>;

PairTable pair_table(const PureState4& state, int qa, int qb) {
  std::array<int, 4> mu = {2, 2, 2, 2};
  PairTable table;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      mu[qa - 1] = kLive[i];
      mu[qb - 1] = kLive[j];
      table[i][j] = pauli_string_form(state, mu[0], mu[1], mu[2], mu[3]);
    }
  }
  return table;
}

// sum g_mu g_nu f(mu, nu)^2 over the live indices.
Complex contract_squared(const PairTable& f) {
  Complex total{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      total += kLiveWeight[i] * kLiveWeight[j] * f[i][j] * f[i][j];
    }
  }
  return total;
}

Complex contract_triple(const PairTable& f12, const PairTable& f13, const PairTable& f23) {
  Complex total{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        total += kLiveWeight[i] * kLiveWeight[j] * kLiveWeight[k] * f12[i][j] * f13[i][k] *
                 f23[j][k];
      }
    }
  }
  return total;
}

LmnxValues lmnx_from(const Complex& a, const Complex& b1, const Complex& b2, const Complex& b3,
                     const Complex& c) {
  LmnxValues v;
  v.L = (b2 - b3) / 48.0;
  v.M = (b3 - b1) / 48.0;
  v.N = (b1 - b2) / 48.0;
  const Complex sum_sq = v.L * v.L + v.M * v.M + v.N * v.N;
  const Complex base = c + a * a * a;
  v.X = base * base - 128.0 * a * a * sum_sq;
  return v;
}

}  // namespace

PauliIndex::PauliIndex(int value) : value_(value) {
  if (value < 0 || value > 3) {
    throw std::out_of_range("Pauli index must lie in [0, 3]");
  }
}

double PauliIndex::metric_weight() const { return kMetric[value_]; }

Complex bilinear_form(const PureState4& state, const std::array<PauliIndex, 4>& mu) {
  return pauli_string_form(state, mu[0].value(), mu[1].value(), mu[2].value(), mu[3].value());
}

Complex inv_a(const PureState4& state) { return pauli_string_form(state, 2, 2, 2, 2); }

Complex inv_b1(const PureState4& state) { return contract_squared(pair_table(state, 1, 2)); }

Complex inv_b2(const PureState4& state) { return contract_squared(pair_table(state, 1, 3)); }

Complex inv_b3(const PureState4& state) {
  const Complex a = inv_a(state);
  return 3.0 * a * a - inv_b1(state) - inv_b2(state);
}

Complex inv_b3_direct(const PureState4& state) {
  return contract_squared(pair_table(state, 1, 4));
}

Complex inv_c(const PureState4& state) {
  return contract_triple(pair_table(state, 1, 2), pair_table(state, 1, 3),
                         pair_table(state, 2, 3));
}

Complex inv_d(const PureState4& state) {
  const Complex a = inv_a(state);
  return inv_c(state) + (5.0 / 9.0) * a * a * a;
}

LmnxValues inv_lmnx(const PureState4& state) {
  const InvariantSet set = evaluate_invariants(state);
  return {set.L, set.M, set.N, set.X};
}

InvariantSet evaluate_invariants(const PureState4& state) {
  const PairTable f12 = pair_table(state, 1, 2);
  const PairTable f13 = pair_table(state, 1, 3);
  const PairTable f23 = pair_table(state, 2, 3);

  InvariantSet set;
  set.A = inv_a(state);
  set.B1 = contract_squared(f12);
  set.B2 = contract_squared(f13);
  set.B3 = 3.0 * set.A * set.A - set.B1 - set.B2;
  set.C = contract_triple(f12, f13, f23);
  set.D = set.C + (5.0 / 9.0) * set.A * set.A * set.A;
  const LmnxValues v = lmnx_from(set.A, set.B1, set.B2, set.B3, set.C);
  set.L = v.L;
  set.M = v.M;
  set.N = v.N;
  set.X = v.X;
  return set;
}

Complex invariant_entry(const InvariantSet& set, int index) {
  switch (index) {
    case 0: return set.A;
    case 1: return set.B1;
    case 2: return set.B2;
    case 3: return set.B3;
    case 4: return set.C;
    case 5: return set.D;
    case 6: return set.L;
    case 7: return set.M;
    case 8: return set.N;
    case 9: return set.X;
    default: throw std::out_of_range("invariant index must lie in [0, 10)");
  }
}

TangleMagnitudes tangle_magnitudes(const PureState4& state) {
  if (state.is_zero()) {
    throw zero_state_error("tangle magnitudes need a nonzero state");
  }
  const InvariantSet set = evaluate_invariants(state.normalized());
  TangleMagnitudes mags;
  mags.A = std::abs(set.A);
  mags.B1 = std::sqrt(std::abs(set.B1));
  mags.B2 = std::sqrt(std::abs(set.B2));
  mags.B3 = std::sqrt(std::abs(set.B3));
  mags.C = std::cbrt(std::abs(set.C));
  mags.D = std::cbrt(std::abs(set.D));
  mags.L = std::sqrt(std::abs(set.L));
  mags.M = std::sqrt(std::abs(set.M));
  mags.N = std::sqrt(std::abs(set.N));
  mags.X = std::pow(std::abs(set.X), 1.0 / 6.0);
  return mags;
}

double magnitude_entry(const TangleMagnitudes& mags, int index) {
  switch (index) {
    case 0: return mags.A;
    case 1: return mags.B1;
    case 2: return mags.B2;
    case 3: return mags.B3;
    case 4: return mags.C;
    case 5: return mags.D;
    case 6: return mags.L;
    case 7: return mags.M;
    case 8: return mags.N;
    case 9: return mags.X;
    default: throw std::out_of_range("invariant index must lie in [0, 10)");
  }
}

}  // namespace tangle4
