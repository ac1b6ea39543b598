// Deterministic random draws for the tests. Uses raw mt19937_64 bits so runs
// are reproducible across platforms.
#pragma once

#include <random>

#include "tangle4/catalog.hpp"
#include "tangle4/state.hpp"

namespace testrand {

using tangle4::Complex;
using tangle4::PureState4;

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

// Uniform in [lo, hi].
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

inline Complex complex_in_box(std::mt19937_64& rng, double half_width) {
  return {uniform(rng, -half_width, half_width), uniform(rng, -half_width, half_width)};
}

// A random state with amplitudes in the unit box, normalized.
inline PureState4 random_state(std::mt19937_64& rng) {
  PureState4 state;
  for (int x = 0; x < PureState4::kDim; ++x) {
    state[x] = complex_in_box(rng, 1.0);
  }
  return state.normalized();
}

// A random permutation-symmetric state: a combination of the five symmetric
// basis states.
inline PureState4 random_symmetric_state(std::mt19937_64& rng) {
  PureState4 state;
  for (int k = 0; k <= 4; ++k) {
    state += complex_in_box(rng, 1.0) * tangle4::build_dicke(k);
  }
  return state.normalized();
}

// A nonzero complex scalar with magnitude in [0.4, 1.6].
inline Complex random_scalar(std::mt19937_64& rng) {
  Complex z;
  do {
    z = complex_in_box(rng, 1.6);
  } while (std::abs(z) < 0.4 || std::abs(z) > 1.6);
  return z;
}

}  // namespace testrand
