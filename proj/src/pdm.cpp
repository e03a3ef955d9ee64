#include "pdmt/pdm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pdmt/pauli.hpp"

namespace pdmt {

Pdm::Pdm(std::vector<std::size_t> dims, HermitianOperator op)
    : dims_(std::move(dims)), op_(std::move(op)) {
    if (dims_.empty()) throw std::invalid_argument("Pdm: empty slot list");
    std::size_t total = 1;
    for (std::size_t d : dims_) {
        if (d == 0) throw std::invalid_argument("Pdm: zero slot dimension");
        total *= d;
    }
    if (total != op_.dim()) {
        throw std::invalid_argument("Pdm: slot dimensions " + std::to_string(total) +
                                    " do not match operator dimension " + std::to_string(op_.dim()));
    }
    if (std::abs(op_.matrix().trace() - Complex(1.0, 0.0)) > 1e-10) {
        throw std::invalid_argument("Pdm: trace differs from 1 by more than 1e-10");
    }
    // Single-slot marginals must be genuine states; DensityMatrix validates.
    for (std::size_t s = 0; s < dims_.size(); ++s) {
        (void)DensityMatrix(partial_trace(op_.matrix(), dims_, {s}));
    }
}

double two_time_expectation(const DensityMatrix& rho, const QuantumChannel& ch,
                            const std::vector<std::size_t>& alpha,
                            const std::vector<std::size_t>& beta) {
    const ComplexMatrix sa = pauli_string(alpha);
    const ComplexMatrix sb = pauli_string(beta);
    if (sa.rows() != rho.dim() || rho.dim() != ch.dim_in() || sb.rows() != ch.dim_out()) {
        throw std::invalid_argument("two_time_expectation: dimension mismatch");
    }
    ComplexMatrix proj_plus = ComplexMatrix::identity(sa.rows());
    proj_plus += sa;
    proj_plus *= 0.5;
    ComplexMatrix proj_minus = ComplexMatrix::identity(sa.rows());
    proj_minus -= sa;
    proj_minus *= 0.5;

    const Complex plus = (ch.apply(proj_plus * rho.matrix() * proj_plus) * sb).trace();
    const Complex minus = (ch.apply(proj_minus * rho.matrix() * proj_minus) * sb).trace();
    const Complex val = plus - minus;
    if (std::abs(val.imag()) > 1e-10) {
        throw std::runtime_error("two_time_expectation: non-real correlation value");
    }
    return val.real();
}

Pdm pdm_from_expectations(const DensityMatrix& rho, const QuantumChannel& ch) {
    std::size_t m = 0, d = 1;
    while (d < rho.dim()) {
        d <<= 1;
        ++m;
    }
    if (d != rho.dim() || m == 0 || m > 2) {
        throw std::invalid_argument("pdm_from_expectations: supports 1 or 2 qubits per slot");
    }
    if (ch.dim_in() != d || ch.dim_out() != d) {
        throw std::invalid_argument("pdm_from_expectations: channel dimensions must match state");
    }

    // Enumerate all Pauli label strings on m qubits.
    std::vector<std::vector<std::size_t>> labels;
    const std::size_t count = std::size_t{1} << (2 * m);
    for (std::size_t code = 0; code < count; ++code) {
        std::vector<std::size_t> l(m);
        std::size_t c = code;
        for (std::size_t i = m; i-- > 0;) {
            l[i] = c % 4;
            c /= 4;
        }
        labels.push_back(std::move(l));
    }

    ComplexMatrix r(d * d, d * d);
    for (const auto& a : labels) {
        const ComplexMatrix sa = pauli_string(a);
        for (const auto& b : labels) {
            const double corr = two_time_expectation(rho, ch, a, b);
            if (corr == 0.0) continue;
            ComplexMatrix term = tensor(sa, pauli_string(b));
            term *= Complex(corr, 0.0);
            r += term;
        }
    }
    // Each basis string has squared norm Tr[(σ_a⊗σ_b)²] = d² = count, so the
    // orthogonal expansion divides by count once.
    r *= Complex(1.0 / static_cast<double>(count), 0.0);
    return Pdm({d, d}, HermitianOperator(r));
}

Pdm star_product(const QuantumChannel& ch, const DensityMatrix& rho) {
    if (rho.dim() != ch.dim_in()) {
        throw std::invalid_argument("star_product: state dimension " + std::to_string(rho.dim()) +
                                    " != channel input dimension " + std::to_string(ch.dim_in()));
    }
    const ComplexMatrix j = jamiolkowski(ch).matrix();
    ComplexMatrix half_anti = anticommutator(tensor(rho.matrix(), ComplexMatrix::identity(ch.dim_out())), j);
    half_anti *= 0.5;
    return Pdm({ch.dim_in(), ch.dim_out()}, HermitianOperator(half_anti));
}

namespace detail {

ComplexMatrix jamiolkowski_of_tail_map(const std::vector<std::size_t>& dims,
                                       const QuantumChannel& ch) {
    if (dims.empty()) throw std::invalid_argument("jamiolkowski_of_tail_map: empty dims");
    std::size_t din = 1;
    for (std::size_t d : dims) din *= d;
    if (dims.back() != ch.dim_in()) {
        throw std::invalid_argument("jamiolkowski_of_tail_map: channel input dimension " +
                                    std::to_string(ch.dim_in()) + " != final slot dimension " +
                                    std::to_string(dims.back()));
    }
    const std::size_t dout = ch.dim_out();
    const std::size_t dlead = din / dims.back();

    // The composite map sends X (on all slots) to ch(trace-out-leading(X)).
    // Its Jamiolkowski matrix is assembled from basis units |j><i|:
    //   trace-out-leading(|j_l j_t><i_l i_t|) = δ_{i_l j_l} |j_t><i_t|.
    ComplexMatrix jm(din * dout, din * dout);
    for (std::size_t it = 0; it < dims.back(); ++it) {
        for (std::size_t jt = 0; jt < dims.back(); ++jt) {
            ComplexMatrix unit(dims.back(), dims.back());
            unit(jt, it) = 1.0;
            const ComplexMatrix block = ch.apply(unit);
            for (std::size_t lead = 0; lead < dlead; ++lead) {
                const std::size_t i = lead * dims.back() + it;
                const std::size_t jj = lead * dims.back() + jt;
                for (std::size_t r = 0; r < dout; ++r)
                    for (std::size_t c = 0; c < dout; ++c)
                        jm(i * dout + r, jj * dout + c) = block(r, c);
            }
        }
    }
    return jm;
}

}  // namespace detail

Pdm multi_time_pdm(const DensityMatrix& rho, const std::vector<QuantumChannel>& chs) {
    if (chs.empty()) throw std::invalid_argument("multi_time_pdm: need at least one channel");
    Pdm r = star_product(chs[0], rho);
    for (std::size_t k = 1; k < chs.size(); ++k) {
        const ComplexMatrix jm = detail::jamiolkowski_of_tail_map(r.dims(), chs[k]);
        ComplexMatrix ext =
            anticommutator(tensor(r.matrix(), ComplexMatrix::identity(chs[k].dim_out())), jm);
        ext *= 0.5;
        std::vector<std::size_t> dims = r.dims();
        dims.push_back(chs[k].dim_out());
        r = Pdm(std::move(dims), HermitianOperator(ext));
    }
    return r;
}

Pdm marginal(const Pdm& p, const std::vector<std::size_t>& keep) {
    if (keep.empty()) throw std::invalid_argument("marginal: keep set is empty");
    const ComplexMatrix reduced = partial_trace(p.matrix(), p.dims(), keep);
    std::vector<std::size_t> dims;
    for (std::size_t s : keep) dims.push_back(p.dims()[s]);
    return Pdm(std::move(dims), HermitianOperator(reduced));
}

bool is_dual_state(const Pdm& p) { return detail::min_eigenvalue(p.matrix()) >= -1e-9; }

}  // namespace pdmt
