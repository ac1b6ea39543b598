#include "tangle4/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tangle4 {

PureState4 PureState4::basis(int index) {
  if (index < 0 || index >= kDim) {
    throw std::out_of_range("basis index must lie in [0, 16)");
  }
  PureState4 s;
  s.amp_[static_cast<std::size_t>(index)] = Complex{1.0, 0.0};
  return s;
}

double PureState4::norm_sq() const {
  double total = 0.0;
  for (const Complex& a : amp_) {
    total += std::norm(a);
  }
  return total;
}

double PureState4::norm() const { return std::sqrt(norm_sq()); }

PureState4 PureState4::normalized() const {
  const double n = norm();
  if (n == 0.0) {
    throw zero_state_error("cannot normalize the zero state");
  }
  PureState4 result = *this;
  for (Complex& a : result.amp_) {
    a /= n;
  }
  return result;
}

PureState4& PureState4::operator+=(const PureState4& other) {
  for (int i = 0; i < kDim; ++i) {
    amp_[i] += other.amp_[i];
  }
  return *this;
}

PureState4& PureState4::operator-=(const PureState4& other) {
  for (int i = 0; i < kDim; ++i) {
    amp_[i] -= other.amp_[i];
  }
  return *this;
}

PureState4& PureState4::operator*=(Complex scale) {
  for (Complex& a : amp_) {
    a *= scale;
  }
  return *this;
}

namespace {

void check_qubit(int qubit) {
  if (qubit < 1 || qubit > 4) {
    throw std::out_of_range("qubit label must lie in [1, 4]");
  }
}

bool is_bijection(const QubitPermutation& perm) {
  std::array<bool, 4> seen{};
  for (int v : perm) {
    if (v < 1 || v > 4 || seen[v - 1]) {
      return false;
    }
    seen[v - 1] = true;
  }
  return true;
}

}  // namespace

QubitPermutation swap_qubits(int a, int b) {
  check_qubit(a);
  check_qubit(b);
  QubitPermutation perm{1, 2, 3, 4};
  std::swap(perm[a - 1], perm[b - 1]);
  return perm;
}

const std::vector<QubitPermutation>& all_qubit_permutations() {
  static const std::vector<QubitPermutation> perms = [] {
    std::vector<QubitPermutation> out;
    QubitPermutation p{1, 2, 3, 4};
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

PureState4 apply_single(const PureState4& state, const LocalOperator& op, int qubit) {
  check_qubit(qubit);
  const int stride = 1 << (4 - qubit);  // qubit 1 is the most significant bit
  PureState4 out;
  for (int base = 0; base < PureState4::kDim; ++base) {
    if (base & stride) {
      continue;
    }
    const Complex a0 = state[base];
    const Complex a1 = state[base | stride];
    out[base] = op.m00 * a0 + op.m01 * a1;
    out[base | stride] = op.m10 * a0 + op.m11 * a1;
  }
  return out;
}

PureState4 apply_local(const PureState4& state, const std::array<LocalOperator, 4>& ops) {
  PureState4 out = state;
  for (int q = 1; q <= 4; ++q) {
    out = apply_single(out, ops[q - 1], q);
  }
  return out;
}

PureState4 permute_qubits(const PureState4& state, const QubitPermutation& perm) {
  if (!is_bijection(perm)) {
    throw std::invalid_argument("qubit permutation must be a bijection of {1,2,3,4}");
  }
  PureState4 out;
  for (int x = 0; x < PureState4::kDim; ++x) {
    int y = 0;
    for (int j = 1; j <= 4; ++j) {
      const int bit = (x >> (4 - j)) & 1;
      y |= bit << (4 - perm[j - 1]);
    }
    out[y] = state[x];
  }
  return out;
}

bool is_symmetric(const PureState4& state, double tol) {
  if (tol <= 0.0) {
    throw std::invalid_argument("symmetry tolerance must be positive");
  }
  const double n = state.norm();
  if (n == 0.0) {
    throw zero_state_error("symmetry test needs a nonzero state");
  }
  for (const QubitPermutation& perm : all_qubit_permutations()) {
    const PureState4 permuted = permute_qubits(state, perm);
    double diff_sq = 0.0;
    for (int i = 0; i < PureState4::kDim; ++i) {
      diff_sq += std::norm(permuted[i] - state[i]);
    }
    if (std::sqrt(diff_sq) > tol * n) {
      return false;
    }
  }
  return true;
}

}  // namespace tangle4
