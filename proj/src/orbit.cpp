#include "tangle4/orbit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tangle4 {

namespace {

// Uniform double in (0, 1], built from the top 53 bits of the engine
// output so the stream does not depend on the standard library's
// distribution internals.
double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

// One Box-Muller pair of independent standard normals.
std::pair<double, double> normal_pair(std::mt19937_64& rng) {
  const double u1 = uniform_unit(rng);
  const double u2 = uniform_unit(rng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(angle), r * std::sin(angle)};
}

// Standard complex normal: unit total variance, independent parts.
Complex complex_normal(std::mt19937_64& rng) {
  const auto [x, y] = normal_pair(rng);
  return Complex{x, y} * std::numbers::sqrt2 / 2.0;
}

}  // namespace

LocalOperator random_sl2(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    LocalOperator op{complex_normal(rng), complex_normal(rng), complex_normal(rng),
                     complex_normal(rng)};
    const Complex det = op.det();
    if (std::abs(det) < 1e-6) {
      continue;
    }
    const Complex root = std::sqrt(det);  // principal branch
    op.m00 /= root;
    op.m01 /= root;
    op.m10 /= root;
    op.m11 /= root;
    return op;
  }
  throw std::runtime_error("random_sl2: exceeded 1000 redraws of near-singular matrices");
}

LocalOperator random_sl2(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_sl2(rng);
}

std::array<LocalOperator, 4> random_sl2_quadruple(std::mt19937_64& rng) {
  std::array<LocalOperator, 4> ops;
  for (LocalOperator& op : ops) {
    op = random_sl2(rng);
  }
  return ops;
}

std::vector<PureState4> orbit_samples(const PureState4& state, int count, std::uint64_t seed) {
  if (count < 1) {
    throw std::invalid_argument("orbit sample count must be at least 1");
  }
  if (state.is_zero()) {
    throw zero_state_error("orbit sampling needs a nonzero state");
  }
  std::mt19937_64 rng(seed);
  std::vector<PureState4> samples;
  samples.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    samples.push_back(apply_local(state, random_sl2_quadruple(rng)));
  }
  return samples;
}

}  // namespace tangle4
