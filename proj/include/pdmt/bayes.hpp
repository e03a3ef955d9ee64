#pragma once

#include <optional>
#include <string>

#include "pdmt/channel.hpp"
#include "pdmt/linalg.hpp"
#include "pdmt/theorems.hpp"

namespace pdmt {

// Result of solving for a reverse-direction channel M with
// swap(star_product(ch, rho)) = star_product(M, ch(rho)).
struct BayesSolution {
    enum class Kind { none, unique, family };
    Kind kind = Kind::none;
    std::optional<QuantumChannel> representative;
    // Residual of the linear constraint system at the returned point (or at
    // the least-norm point when no CP solution was found).
    double residual = 0.0;
    // Dimension of the affine solution space of the linear constraints.
    std::size_t nullity = 0;
    // A second, distinct solution when the family is nontrivial and a second
    // CP point was found; lets callers check that the reversed process is
    // independent of the representative.
    std::optional<QuantumChannel> second_member;
};

// Solve the swap relation for the reverse channel, classify multiplicity
// (none / unique / family) from the constraint-system rank and CP
// feasibility, and return a CPTP representative when one exists.
BayesSolution bayesian_inverse(const QuantumChannel& ch, const DensityMatrix& rho);

// Check that reversing the process preserves mutual information and the
// two-slot spectrum, and that the representative maps ch(rho) back to rho.
VerificationReport verify_time_symmetry(const QuantumChannel& ch, const DensityMatrix& rho);

}  // namespace pdmt
