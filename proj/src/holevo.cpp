#include "pdmt/holevo.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pdmt {

namespace {

void accumulate_plogp(double& acc, double p) {
    if (p > 0.0) acc -= p * std::log2(p);
}

}  // namespace

CqEnsemble::CqEnsemble(ProbabilityVector p, std::vector<DensityMatrix> s)
    : probs(std::move(p)), states(std::move(s)) {
    if (probs.size() != states.size()) {
        throw std::invalid_argument("CqEnsemble: probability/state count mismatch");
    }
    for (const auto& st : states) {
        if (st.dim() != states[0].dim()) {
            throw std::invalid_argument("CqEnsemble: states have mixed dimensions");
        }
    }
}

DensityMatrix CqEnsemble::average_state() const {
    ComplexMatrix avg(state_dim(), state_dim());
    for (std::size_t i = 0; i < size(); ++i) {
        ComplexMatrix term = states[i].matrix();
        term *= Complex(probs.weights()[i], 0.0);
        avg += term;
    }
    return DensityMatrix(avg);
}

Povm::Povm(std::vector<HermitianOperator> e) : effects(std::move(e)) {
    if (effects.empty()) throw std::invalid_argument("Povm: no effects");
    ComplexMatrix total(effects[0].dim(), effects[0].dim());
    for (const auto& m : effects) {
        if (m.dim() != effects[0].dim()) throw std::invalid_argument("Povm: mixed dimensions");
        if (detail::min_eigenvalue(m.matrix()) < -1e-9) {
            throw std::invalid_argument("Povm: effect is not PSD within -1e-9");
        }
        total += m.matrix();
    }
    total -= ComplexMatrix::identity(effects[0].dim());
    if (total.max_abs() > 1e-9) {
        throw std::invalid_argument("Povm: effects do not sum to the identity within 1e-9");
    }
}

JointDistribution3::JointDistribution3(std::size_t ni, std::size_t nj, std::size_t nk,
                                       std::vector<double> p_ijk)
    : ni_(ni), nj_(nj), nk_(nk), p_(std::move(p_ijk)) {
    if (p_.size() != ni_ * nj_ * nk_) {
        throw std::invalid_argument("JointDistribution3: size mismatch");
    }
    double sum = 0.0;
    for (double& v : p_) {
        if (v < -1e-12) {
            throw std::invalid_argument("JointDistribution3: negative probability " +
                                        std::to_string(v));
        }
        if (v < 0.0) v = 0.0;
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        throw std::invalid_argument("JointDistribution3: total probability " + std::to_string(sum));
    }
}

double JointDistribution3::operator()(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= ni_ || j >= nj_ || k >= nk_) {
        throw std::out_of_range("JointDistribution3: index out of range");
    }
    return p_[(i * nj_ + j) * nk_ + k];
}

Pdm cq_pdm(const CqEnsemble& ens, const QuantumChannel& ch) {
    if (ens.state_dim() != ch.dim_in()) {
        throw std::invalid_argument("cq_pdm: state dimension does not match channel input");
    }
    const std::size_t k = ens.size();
    const std::size_t block = ch.dim_in() * ch.dim_out();
    ComplexMatrix r(k * block, k * block);
    for (std::size_t i = 0; i < k; ++i) {
        const Pdm ri = star_product(ch, ens.states[i]);
        const double p = ens.probs.weights()[i];
        for (std::size_t a = 0; a < block; ++a)
            for (std::size_t b = 0; b < block; ++b)
                r(i * block + a, i * block + b) = p * ri.matrix()(a, b);
    }
    return Pdm({k, ch.dim_in(), ch.dim_out()}, HermitianOperator(r));
}

std::pair<double, double> theorem3_mi(const CqEnsemble& ens, const QuantumChannel& ch) {
    const double lhs = mutual_information(cq_pdm(ens, ch), 1);

    const std::size_t block = ch.dim_in() * ch.dim_out();
    ComplexMatrix avg(block, block);
    double avg_entropy = 0.0;
    for (std::size_t i = 0; i < ens.size(); ++i) {
        const Pdm ri = star_product(ch, ens.states[i]);
        const double p = ens.probs.weights()[i];
        ComplexMatrix term = ri.matrix();
        term *= Complex(p, 0.0);
        avg += term;
        avg_entropy += p * hermitian_entropy(ri.op());
    }
    const double rhs = hermitian_entropy(HermitianOperator(avg)) - avg_entropy;
    return {lhs, rhs};
}

double holevo_chi(const CqEnsemble& ens) {
    double avg_entropy = 0.0;
    for (std::size_t i = 0; i < ens.size(); ++i) {
        avg_entropy += ens.probs.weights()[i] * hermitian_entropy(ens.states[i]);
    }
    return hermitian_entropy(ens.average_state()) - avg_entropy;
}

namespace detail {

ComplexMatrix psd_sqrt(const HermitianOperator& m) {
    const Spectrum s = hermitian_eig(m);
    const std::size_t d = m.dim();
    ComplexMatrix root(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        double lam = s.eigenvalues[k];
        if (lam < -1e-9) {
            throw std::invalid_argument("psd_sqrt: operator is not PSD within -1e-9");
        }
        if (lam < 0.0) lam = 0.0;
        const double w = std::sqrt(lam);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                root(i, j) += w * s.eigenvectors(i, k) * std::conj(s.eigenvectors(j, k));
    }
    return root;
}

}  // namespace detail

JointDistribution3 sequential_distribution(const CqEnsemble& ens, const Povm& m, const Povm& n,
                                           const QuantumChannel& u) {
    if (choi_rank(u) != 1) {
        throw std::invalid_argument("sequential_distribution: intermediate channel must be unitary");
    }
    if (m.dim() != ens.state_dim() || n.dim() != u.dim_out() || u.dim_in() != ens.state_dim()) {
        throw std::invalid_argument("sequential_distribution: dimension mismatch");
    }
    std::vector<ComplexMatrix> roots;
    for (const auto& eff : m.effects) roots.push_back(detail::psd_sqrt(eff));

    std::vector<double> p(ens.size() * m.size() * n.size());
    for (std::size_t i = 0; i < ens.size(); ++i) {
        const double pi = ens.probs.weights()[i];
        for (std::size_t j = 0; j < m.size(); ++j) {
            const ComplexMatrix branch = u.apply(roots[j] * ens.states[i].matrix() * roots[j]);
            for (std::size_t k = 0; k < n.size(); ++k) {
                const Complex val = (branch * n.effects[k].matrix()).trace();
                p[(i * m.size() + j) * n.size() + k] = pi * val.real();
            }
        }
    }
    return JointDistribution3(ens.size(), m.size(), n.size(), std::move(p));
}

double classical_mi_x_y1y2(const JointDistribution3& d) {
    double h_x = 0.0, h_y = 0.0, h_xy = 0.0;
    for (std::size_t i = 0; i < d.ni(); ++i) {
        double pi = 0.0;
        for (std::size_t j = 0; j < d.nj(); ++j)
            for (std::size_t k = 0; k < d.nk(); ++k) pi += d(i, j, k);
        accumulate_plogp(h_x, pi);
    }
    for (std::size_t j = 0; j < d.nj(); ++j) {
        for (std::size_t k = 0; k < d.nk(); ++k) {
            double pjk = 0.0;
            for (std::size_t i = 0; i < d.ni(); ++i) pjk += d(i, j, k);
            accumulate_plogp(h_y, pjk);
        }
    }
    for (std::size_t i = 0; i < d.ni(); ++i)
        for (std::size_t j = 0; j < d.nj(); ++j)
            for (std::size_t k = 0; k < d.nk(); ++k) accumulate_plogp(h_xy, d(i, j, k));
    return h_x + h_y - h_xy;
}

VerificationReport check_sequential_holevo(const CqEnsemble& ens, const Povm& m, const Povm& n,
                                           const QuantumChannel& u) {
    const JointDistribution3 d = sequential_distribution(ens, m, n, u);
    const double classical = classical_mi_x_y1y2(d);
    const double chi = holevo_chi(ens);
    const auto [temporal, block_form] = theorem3_mi(ens, u);

    const double chi_violation = classical - chi;
    const double temporal_violation = classical - temporal;

    VerificationReport rep;
    rep.max_deviation = std::max({chi_violation, temporal_violation, 0.0});
    rep.passed = chi_violation <= 1e-9 && temporal_violation <= 1e-9;
    std::ostringstream os;
    os << "I(X:Y1Y2)=" << classical << " chi=" << chi << " I(A:B1B2)=" << temporal
       << " (block form " << block_form << ")";
    rep.detail = os.str();
    return rep;
}

}  // namespace pdmt
