#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tangle4/state.hpp"

namespace tangle4 {

/// Random determinant-1 operator: entries are drawn as standard complex
/// normals (Box-Muller on the raw engine output, so the sequence is
/// identical on every platform), redrawing while |det| < 1e-6, then the
/// matrix is divided by the principal square root of its determinant.
/// The result satisfies |det - 1| <= 1e-12. Throws std::runtime_error
/// after 1000 failed redraws.
LocalOperator random_sl2(std::mt19937_64& rng);

/// Same, from a fresh engine seeded with `seed` (deterministic).
LocalOperator random_sl2(std::uint64_t seed);

/// Four independent draws, for one local-orbit step.
std::array<LocalOperator, 4> random_sl2_quadruple(std::mt19937_64& rng);

/// `count` states of the local orbit of `state`: each sample applies a
/// fresh random_sl2 quadruple. Deterministic given the seed. Requires
/// count >= 1 and a nonzero state.
std::vector<PureState4> orbit_samples(const PureState4& state, int count, std::uint64_t seed);

}  // namespace tangle4
