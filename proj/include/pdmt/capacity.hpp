#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "pdmt/channel.hpp"
#include "pdmt/linalg.hpp"

namespace pdmt {

// Outcome of maximizing two-slot mutual information over input states.
struct CapacityResult {
    double value = 0.0;              // bits, at argmax_state
    DensityMatrix argmax_state;      // best input found
    std::size_t evaluations = 0;     // objective evaluations consumed
    // Incumbent improvements: (Bloch vector, objective value).
    std::vector<std::pair<std::array<double, 3>, double>> trace;
};

// Best I(A:B) over qubit inputs for the given channel: coarse Bloch grid
// (step 0.1 over the [0,1]^3 corner of the ball) then Nelder-Mead refinement
// from the five best grid points, capped at `budget` objective evaluations.
// Deterministic for fixed budget. The result is a lower bound on the
// supremum, not a global-optimality certificate.
CapacityResult temporal_capacity(const QuantumChannel& ch, std::size_t budget);

// State with Bloch vector r (must satisfy |r| ≤ 1 within 1e-9).
DensityMatrix state_from_bloch(const std::array<double, 3>& r);

}  // namespace pdmt
