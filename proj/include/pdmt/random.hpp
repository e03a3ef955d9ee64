#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "pdmt/channel.hpp"
#include "pdmt/complex_matrix.hpp"
#include "pdmt/holevo.hpp"
#include "pdmt/linalg.hpp"

namespace pdmt {

// Seeded sampler for states, unitaries, channels, and measurements.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi);
    // Standard complex Gaussian entries.
    ComplexMatrix ginibre(std::size_t rows, std::size_t cols);
    // Haar-distributed unitary (QR of a Ginibre matrix with phase fixing).
    ComplexMatrix haar_unitary(std::size_t dim);
    // G G† / Tr[G G†] with G square Ginibre.
    DensityMatrix random_state(std::size_t dim);
    // Flat Dirichlet point on the probability simplex.
    std::vector<double> random_simplex(std::size_t n);
    // CPTP map via a Haar-random isometry into dim_out × kraus_rank.
    QuantumChannel random_channel(std::size_t dim_in, std::size_t dim_out,
                                  std::size_t kraus_rank);
    // Haar pre- and post-rotated Pauli mixture (always unital).
    QuantumChannel random_unital_qubit_channel();
    // n_effects random PSD operators normalized to sum to the identity.
    Povm random_povm(std::size_t dim, std::size_t n_effects);

    std::mt19937_64& engine() { return gen_; }

  private:
    std::mt19937_64 gen_;
};

}  // namespace pdmt
