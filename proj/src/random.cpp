#include "pdmt/random.hpp"

#include <cmath>
#include <stdexcept>

namespace pdmt {

double Rng::uniform(double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(gen_);
}

ComplexMatrix Rng::ginibre(std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) g(i, j) = Complex(normal(gen_), normal(gen_));
    return g;
}

ComplexMatrix Rng::haar_unitary(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("haar_unitary: zero dimension");
    // Gram-Schmidt QR of a Ginibre matrix; positive-diagonal R makes the Q
    // factor Haar distributed.
    ComplexMatrix g = ginibre(dim, dim);
    ComplexMatrix q(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<Complex> col(dim);
        for (std::size_t i = 0; i < dim; ++i) col[i] = g(i, j);
        for (std::size_t prev = 0; prev < j; ++prev) {
            Complex dot = 0.0;
            for (std::size_t i = 0; i < dim; ++i) dot += std::conj(q(i, prev)) * col[i];
            for (std::size_t i = 0; i < dim; ++i) col[i] -= dot * q(i, prev);
        }
        double norm = 0.0;
        for (const Complex& c : col) norm += std::norm(c);
        norm = std::sqrt(norm);
        if (norm < 1e-12) throw std::runtime_error("haar_unitary: degenerate sample");
        for (std::size_t i = 0; i < dim; ++i) q(i, j) = col[i] / norm;
    }
    return q;
}

DensityMatrix Rng::random_state(std::size_t dim) {
    const ComplexMatrix g = ginibre(dim, dim);
    ComplexMatrix rho = g * g.dagger();
    rho *= Complex(1.0, 0.0) / rho.trace();
    // Scrub roundoff asymmetry so the Hermiticity gate never trips.
    ComplexMatrix sym = rho;
    sym += rho.dagger();
    sym *= 0.5;
    return DensityMatrix(sym);
}

std::vector<double> Rng::random_simplex(std::size_t n) {
    if (n == 0) throw std::invalid_argument("random_simplex: zero length");
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(n);
    double sum = 0.0;
    for (double& x : w) {
        x = expo(gen_);
        sum += x;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        w[i] /= sum;
        acc += w[i];
    }
    w[n - 1] = 1.0 - acc;  // exact unit total
    return w;
}

QuantumChannel Rng::random_channel(std::size_t dim_in, std::size_t dim_out,
                                   std::size_t kraus_rank) {
    if (kraus_rank == 0 || dim_out * kraus_rank < dim_in) {
        throw std::invalid_argument("random_channel: need dim_out*kraus_rank >= dim_in > 0");
    }
    // Haar-random isometry dim_in -> dim_out ⊗ rank, sliced into Kraus blocks.
    const ComplexMatrix w = haar_unitary(dim_out * kraus_rank);
    std::vector<ComplexMatrix> kraus;
    for (std::size_t e = 0; e < kraus_rank; ++e) {
        ComplexMatrix k(dim_out, dim_in);
        for (std::size_t o = 0; o < dim_out; ++o)
            for (std::size_t i = 0; i < dim_in; ++i) k(o, i) = w(o * kraus_rank + e, i);
        kraus.push_back(std::move(k));
    }
    return QuantumChannel(dim_in, dim_out, std::move(kraus));
}

QuantumChannel Rng::random_unital_qubit_channel() {
    const std::vector<double> p = random_simplex(4);
    const QuantumChannel mid = QuantumChannel::pauli_channel(p[0], p[1], p[2], p[3]);
    const QuantumChannel pre = QuantumChannel::unitary(haar_unitary(2));
    const QuantumChannel post = QuantumChannel::unitary(haar_unitary(2));
    return post.compose_after(mid.compose_after(pre));
}

Povm Rng::random_povm(std::size_t dim, std::size_t n_effects) {
    if (n_effects == 0) throw std::invalid_argument("random_povm: zero effects");
    std::vector<ComplexMatrix> raw;
    ComplexMatrix total(dim, dim);
    for (std::size_t i = 0; i < n_effects; ++i) {
        const ComplexMatrix g = ginibre(dim, dim);
        ComplexMatrix a = g * g.dagger();
        total += a;
        raw.push_back(std::move(a));
    }
    // Normalize by total^{-1/2} on both sides so the family sums to identity.
    const Spectrum s = detail::jacobi_eig(total);
    ComplexMatrix inv_sqrt(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        if (s.eigenvalues[k] <= 1e-12) {
            throw std::runtime_error("random_povm: degenerate total operator");
        }
        const double w = 1.0 / std::sqrt(s.eigenvalues[k]);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                inv_sqrt(i, j) += w * s.eigenvectors(i, k) * std::conj(s.eigenvectors(j, k));
    }
    std::vector<HermitianOperator> effects;
    for (auto& a : raw) {
        ComplexMatrix m = inv_sqrt * a * inv_sqrt;
        ComplexMatrix sym = m;
        sym += m.dagger();
        sym *= 0.5;
        effects.emplace_back(sym);
    }
    return Povm(std::move(effects));
}

}  // namespace pdmt
