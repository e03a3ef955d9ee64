#pragma once

#include <cstddef>
#include <vector>

#include "pdmt/linalg.hpp"
#include "pdmt/pdm.hpp"

namespace pdmt {

// Nonnegative weights summing to 1 within 1e-12.
class ProbabilityVector {
  public:
    explicit ProbabilityVector(std::vector<double> weights);
    const std::vector<double>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }

  private:
    std::vector<double> weights_;
};

// -Σ λ_i log₂|λ_i| over the eigenvalues, with |λ| ≤ 1e-12 contributing 0.
// Reduces to the von Neumann entropy on states; may be negative or exceed
// log₂(dim) on indefinite operators.
double hermitian_entropy(const HermitianOperator& x);

// -Σ p_i log₂ p_i with 0·log 0 = 0.
double shannon_entropy(const ProbabilityVector& p);

// Shannon entropy of (p, 1-p).
double binary_entropy(double p);

// S(first k slots) + S(rest) − S(whole); cut counts slots on the left side.
double mutual_information(const Pdm& p, std::size_t cut);

// True iff descending prefix sums of y dominate those of x and totals match
// within 1e-10.
bool majorizes(const std::vector<double>& y, const std::vector<double>& x);

}  // namespace pdmt
