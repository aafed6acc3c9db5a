#pragma once

#include <random>

#include "csm/interp.hpp"

namespace csm::test {

using Rng = std::mt19937_64;

/// A valid model: at most 6 blocks with at most 4 transitions each, every
/// duration term at most 5. Invariants sit only on states the initial
/// configuration does not occupy.
Model random_model(Rng& rng);

/// At most 20 TCs, dates at most 200, deltas at most 5. Half of the draws
/// follow the model (guided by the step API) so that long accepted runs
/// are common; the rest are uniform noise, including malformed TCs.
TcSequence random_sequence(const Model& model, Rng& rng);

}  // namespace csm::test
