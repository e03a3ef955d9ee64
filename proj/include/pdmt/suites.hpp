#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pdmt/random.hpp"

namespace pdmt {

// Aggregate outcome of a seeded Monte Carlo verification suite.
struct SuiteResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    double max_deviation = 0.0;
    // Extremes of the quantity under study where meaningful (scan suites).
    double min_value = 0.0;
    double max_value = 0.0;
    std::vector<std::string> notes;
    bool passed() const { return failures == 0; }
};

// Unitary-evolution identity I = S(rho) plus the paired-spectrum law.
SuiteResult run_theorem1_suite(std::size_t trials, std::uint64_t seed);

// Maximally mixed input through unital and two-Kraus channels: 0 ≤ I ≤ 1
// with closed-form spectra; trials counts each family separately.
SuiteResult run_theorem2_suite(std::size_t trials, std::uint64_t seed);

// Classical-quantum block decomposition of mutual information, including the
// unitary case where both sides equal the Holevo quantity.
SuiteResult run_theorem3_suite(std::size_t trials, std::uint64_t seed);

// Reverse-channel existence/classification and time symmetry of I.
SuiteResult run_bayes_suite(std::size_t trials, std::uint64_t seed);

// Sequential-measurement information bounds.
SuiteResult run_holevo_suite(std::size_t trials, std::uint64_t seed);

// Non-asserting scan: random qubit channels and states, record min/max I and
// note any value outside [0, 1]; never fails.
SuiteResult run_conjecture_scan(std::size_t trials, std::uint64_t seed);

// Searches 3-slot chains for a case where discarding the middle slot raises
// the mutual information between the outer slots; returns a note describing
// the first witness found.
SuiteResult run_monotonicity_witness_search(std::size_t trials, std::uint64_t seed);

}  // namespace pdmt
