#include "pdmt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pdmt {

namespace detail {

namespace {

double offdiag_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

Spectrum jacobi_eig(ComplexMatrix a) {
    if (!a.is_square()) throw std::invalid_argument("jacobi_eig: matrix is not square");
    const std::size_t n = a.rows();

    // Symmetrize so roundoff asymmetry cannot feed back into the iteration.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Complex(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }

    ComplexMatrix v = ComplexMatrix::identity(n);
    if (n > 1) {
        // Absolute threshold on the off-diagonal Frobenius mass, scaled up
        // only when the matrix itself is large in norm.
        const double tol = 1e-12 * std::max(1.0, a.frobenius_norm());
        const int max_sweeps = 100;
        int sweep = 0;
        for (; sweep < max_sweeps; ++sweep) {
            if (offdiag_frobenius(a) < tol) break;
            for (std::size_t p = 0; p < n - 1; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const Complex apq = a(p, q);
                    const double mag = std::abs(apq);
                    if (mag < 1e-300) continue;
                    const Complex phase = apq / mag;  // e^{i arg(a_pq)}
                    const double app = a(p, p).real();
                    const double aqq = a(q, q).real();
                    // Classic smallest-angle rotation zeroing the (p,q) entry.
                    const double tau = (app - aqq) / (2.0 * mag);
                    const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;

                    // Unitary G = I except G(p,p)=c, G(p,q)=-s, G(q,p)=conj(phase)*s,
                    // G(q,q)=conj(phase)*c; apply A <- G^dag A G, V <- V G.
                    const Complex gqp = std::conj(phase) * s;
                    const Complex gqq = std::conj(phase) * c;
                    for (std::size_t k = 0; k < n; ++k) {  // columns: A <- A G
                        const Complex akp = a(k, p), akq = a(k, q);
                        a(k, p) = c * akp + gqp * akq;
                        a(k, q) = -s * akp + gqq * akq;
                    }
                    for (std::size_t k = 0; k < n; ++k) {  // rows: A <- G^dag A
                        const Complex apk = a(p, k), aqk = a(q, k);
                        a(p, k) = c * apk + std::conj(gqp) * aqk;
                        a(q, k) = -s * apk + std::conj(gqq) * aqk;
                    }
                    a(p, q) = 0.0;  // zero by construction
                    a(q, p) = 0.0;
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vkp = v(k, p), vkq = v(k, q);
                        v(k, p) = c * vkp + gqp * vkq;
                        v(k, q) = -s * vkp + gqq * vkq;
                    }
                }
            }
        }
        if (sweep == max_sweeps) {
            throw std::runtime_error("jacobi_eig: no convergence after " +
                                     std::to_string(max_sweeps) + " sweeps");
        }
    }

    Spectrum spec;
    spec.eigenvalues.resize(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() > a(y, y).real();
    });
    spec.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        spec.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) spec.eigenvectors(i, j) = v(i, order[j]);
    }
    return spec;
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
    const Spectrum s = jacobi_eig(hermitian);
    return s.eigenvalues.empty() ? 0.0 : s.eigenvalues.back();
}

}  // namespace detail

HermitianOperator::HermitianOperator(ComplexMatrix m) : mat_(std::move(m)) {
    if (!mat_.is_square()) {
        throw std::invalid_argument("HermitianOperator: matrix is not square");
    }
    if (!mat_.is_hermitian(1e-10)) {
        throw std::invalid_argument("HermitianOperator: matrix is not Hermitian within 1e-10");
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : HermitianOperator(std::move(m)) {
    const Complex tr = matrix().trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > 1e-10) {
        throw std::invalid_argument("DensityMatrix: trace differs from 1 by more than 1e-10");
    }
    if (detail::min_eigenvalue(matrix()) < -1e-9) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue below -1e-9");
    }
}

Spectrum hermitian_eig(const HermitianOperator& h) { return detail::jacobi_eig(h.matrix()); }

Spectrum hermitian_eig(const ComplexMatrix& h) {
    return hermitian_eig(HermitianOperator(h));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
    if (!m.is_square()) throw std::invalid_argument("partial_trace: matrix is not square");
    std::size_t total = 1;
    for (std::size_t d : dims) {
        if (d == 0) throw std::invalid_argument("partial_trace: zero subsystem dimension");
        total *= d;
    }
    if (total != m.rows()) {
        throw std::invalid_argument("partial_trace: dims product " + std::to_string(total) +
                                    " does not match matrix dimension " +
                                    std::to_string(m.rows()));
    }
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] >= dims.size()) throw std::invalid_argument("partial_trace: keep index out of range");
        if (k > 0 && keep[k] <= keep[k - 1]) {
            throw std::invalid_argument("partial_trace: keep indices must be strictly increasing");
        }
    }

    std::vector<std::size_t> traced;
    for (std::size_t s = 0; s < dims.size(); ++s)
        if (std::find(keep.begin(), keep.end(), s) == keep.end()) traced.push_back(s);

    // Big-endian strides: slot 0 is the most significant block of the index.
    std::vector<std::size_t> stride(dims.size(), 1);
    for (std::size_t s = dims.size(); s-- > 1;) stride[s - 1] = stride[s] * dims[s];

    std::size_t kept_dim = 1, traced_dim = 1;
    for (std::size_t s : keep) kept_dim *= dims[s];
    for (std::size_t s : traced) traced_dim *= dims[s];

    // Decode a flat index over the listed slots into a base offset.
    auto offset = [&](const std::vector<std::size_t>& slots, std::size_t flat) {
        std::size_t off = 0;
        for (std::size_t s = slots.size(); s-- > 0;) {
            const std::size_t d = dims[slots[s]];
            off += (flat % d) * stride[slots[s]];
            flat /= d;
        }
        return off;
    };

    ComplexMatrix out(kept_dim, kept_dim);
    for (std::size_t i = 0; i < kept_dim; ++i) {
        const std::size_t ri = offset(keep, i);
        for (std::size_t j = 0; j < kept_dim; ++j) {
            const std::size_t cj = offset(keep, j);
            Complex sum = 0.0;
            for (std::size_t t = 0; t < traced_dim; ++t) {
                const std::size_t ot = offset(traced, t);
                sum += m(ri + ot, cj + ot);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

ComplexMatrix swap_bipartite(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
    if (!m.is_square() || m.rows() != dim_a * dim_b) {
        throw std::invalid_argument("swap_bipartite: matrix dimension does not equal dim_a*dim_b");
    }
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t a = 0; a < dim_a; ++a)
        for (std::size_t b = 0; b < dim_b; ++b)
            for (std::size_t a2 = 0; a2 < dim_a; ++a2)
                for (std::size_t b2 = 0; b2 < dim_b; ++b2)
                    out(b * dim_a + a, b2 * dim_a + a2) = m(a * dim_b + b, a2 * dim_b + b2);
    return out;
}

}  // namespace pdmt
