#pragma once

#include <string>
#include <vector>

#include "pdmt/channel.hpp"
#include "pdmt/entropy.hpp"
#include "pdmt/linalg.hpp"

namespace pdmt {

// Outcome of one structural check: pass/fail plus the measured deviations,
// so callers can print diagnostics without recomputing.
struct VerificationReport {
    bool passed = false;
    double max_deviation = 0.0;
    std::string detail;
};

// Unitary evolution: mutual information across the cut equals S(rho), and
// the two-slot spectrum is the input spectrum together with ±(λ_i+λ_j)/2
// for every unordered pair i<j.
VerificationReport verify_theorem1(const DensityMatrix& rho, const QuantumChannel& u);

// Maximally mixed qubit input: 0 ≤ I ≤ 1 for unital or Choi-rank-≤2
// channels, with closed-form spectra cross-checked in canonical coordinates
// (unital: {1/2 − p_i}; two-Kraus: {1/2, 1/2, ±λ₁λ₂/2}).
VerificationReport verify_theorem2(const QuantumChannel& ch);

namespace detail {
// Pauli mixing weights of a unital qubit channel with diagonal distortion
// diag(λ): p = ((1+λ1+λ2+λ3), (1+λ1−λ2−λ3), (1−λ1+λ2−λ3), (1−λ1−λ2+λ3))/4.
std::vector<double> pauli_weights_from_lambdas(const std::array<double, 3>& lam);
}  // namespace detail

}  // namespace pdmt
