#include "pdmt/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pdmt/pauli.hpp"

namespace pdmt {

namespace {

ComplexMatrix kraus_sum_check(const std::vector<ComplexMatrix>& kraus, std::size_t dim_in,
                              std::size_t dim_out) {
    if (kraus.empty()) throw std::invalid_argument("QuantumChannel: empty Kraus family");
    ComplexMatrix acc(dim_in, dim_in);
    for (const auto& k : kraus) {
        if (k.rows() != dim_out || k.cols() != dim_in) {
            throw std::invalid_argument("QuantumChannel: Kraus operator has shape " +
                                        std::to_string(k.rows()) + "x" + std::to_string(k.cols()) +
                                        ", expected " + std::to_string(dim_out) + "x" +
                                        std::to_string(dim_in));
        }
        acc += k.dagger() * k;
    }
    return acc;
}

}  // namespace

QuantumChannel::QuantumChannel(std::size_t dim_in, std::size_t dim_out,
                               std::vector<ComplexMatrix> kraus)
    : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)) {
    if (dim_in_ == 0 || dim_out_ == 0) {
        throw std::invalid_argument("QuantumChannel: zero dimension");
    }
    ComplexMatrix acc = kraus_sum_check(kraus_, dim_in_, dim_out_);
    acc -= ComplexMatrix::identity(dim_in_);
    if (acc.max_abs() > 1e-9) {
        throw std::invalid_argument("QuantumChannel: Kraus family is not trace preserving "
                                    "(deviation " + std::to_string(acc.max_abs()) + ")");
    }
    // CP holds by construction for any Kraus family; still guard against a
    // numerically degenerate input via the Choi minimum eigenvalue.
    if (detail::min_eigenvalue(choi(*this).matrix()) < -1e-9) {
        throw std::invalid_argument("QuantumChannel: Choi matrix not PSD");
    }
}

QuantumChannel QuantumChannel::identity(std::size_t num_qubits) {
    if (num_qubits == 0) throw std::invalid_argument("identity: need at least one qubit");
    const std::size_t d = std::size_t{1} << num_qubits;
    return QuantumChannel(d, d, {ComplexMatrix::identity(d)});
}

QuantumChannel QuantumChannel::unitary(const ComplexMatrix& u) {
    if (!u.is_square()) throw std::invalid_argument("unitary: matrix is not square");
    ComplexMatrix gram = u.dagger() * u;
    gram -= ComplexMatrix::identity(u.rows());
    if (gram.max_abs() > 1e-10) {
        throw std::invalid_argument("unitary: matrix is not unitary within 1e-10");
    }
    return QuantumChannel(u.rows(), u.rows(), {u});
}

QuantumChannel QuantumChannel::depolarizing(double eta) {
    if (eta < 0.0 || eta > 1.0) {
        throw std::invalid_argument("depolarizing: eta must lie in [0,1]");
    }
    const double p0 = (1.0 + 3.0 * eta) / 4.0;
    const double p = (1.0 - eta) / 4.0;
    return pauli_channel(p0, p, p, p);
}

QuantumChannel QuantumChannel::decoherence() {
    ComplexMatrix k0(2, 2), k1(2, 2);
    k0(0, 0) = 1.0;
    k1(1, 1) = 1.0;
    return QuantumChannel(2, 2, {k0, k1});
}

QuantumChannel QuantumChannel::discard_prepare(const DensityMatrix& sigma_out) {
    const std::size_t d = sigma_out.dim();
    const Spectrum s = hermitian_eig(sigma_out);
    std::vector<ComplexMatrix> kraus;
    for (std::size_t l = 0; l < d; ++l) {
        const double mu = std::max(s.eigenvalues[l], 0.0);
        if (mu < 1e-15) continue;
        const double root = std::sqrt(mu);
        for (std::size_t i = 0; i < d; ++i) {
            ComplexMatrix k(d, d);
            for (std::size_t r = 0; r < d; ++r) k(r, i) = root * s.eigenvectors(r, l);
            kraus.push_back(std::move(k));
        }
    }
    return QuantumChannel(d, d, std::move(kraus));
}

QuantumChannel QuantumChannel::pauli_channel(double p0, double p1, double p2, double p3) {
    const std::array<double, 4> p = {p0, p1, p2, p3};
    double sum = 0.0;
    for (double w : p) {
        if (w < -1e-12) throw std::invalid_argument("pauli_channel: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("pauli_channel: weights must sum to 1");
    }
    std::vector<ComplexMatrix> kraus;
    for (std::size_t i = 0; i < 4; ++i) {
        if (p[i] <= 0.0) continue;
        ComplexMatrix k = sigma(i);
        k *= Complex(std::sqrt(p[i]), 0.0);
        kraus.push_back(std::move(k));
    }
    if (kraus.empty()) throw std::invalid_argument("pauli_channel: all weights zero");
    return QuantumChannel(2, 2, std::move(kraus));
}

QuantumChannel QuantumChannel::rank2_channel(double u, double v) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (u < 0.0 || u >= two_pi) throw std::invalid_argument("rank2_channel: u must lie in [0, 2*pi)");
    if (v < 0.0 || v >= std::numbers::pi) {
        throw std::invalid_argument("rank2_channel: v must lie in [0, pi)");
    }
    const double cm = std::cos((v - u) / 2.0), cp = std::cos((v + u) / 2.0);
    const double sm = std::sin((v - u) / 2.0), sp = std::sin((v + u) / 2.0);
    ComplexMatrix kplus(2, 2), kminus(2, 2);
    kplus(0, 0) = cm;
    kplus(1, 1) = cp;
    kminus(0, 1) = sp;
    kminus(1, 0) = sm;
    return QuantumChannel(2, 2, {kplus, kminus});
}

ComplexMatrix QuantumChannel::apply(const ComplexMatrix& rho) const {
    if (!rho.is_square() || rho.rows() != dim_in_) {
        throw std::invalid_argument("QuantumChannel::apply: operand dimension " +
                                    std::to_string(rho.rows()) + " != " + std::to_string(dim_in_));
    }
    ComplexMatrix out(dim_out_, dim_out_);
    for (const auto& k : kraus_) out += k * rho * k.dagger();
    return out;
}

QuantumChannel QuantumChannel::compose_after(const QuantumChannel& inner) const {
    if (inner.dim_out_ != dim_in_) {
        throw std::invalid_argument("compose_after: inner output dimension " +
                                    std::to_string(inner.dim_out_) + " != outer input dimension " +
                                    std::to_string(dim_in_));
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(kraus_.size() * inner.kraus_.size());
    for (const auto& a : kraus_)
        for (const auto& b : inner.kraus_) kraus.push_back(a * b);
    return QuantumChannel(inner.dim_in_, dim_out_, std::move(kraus));
}

HermitianOperator jamiolkowski(const QuantumChannel& ch) {
    const std::size_t di = ch.dim_in(), dout = ch.dim_out();
    ComplexMatrix j(di * dout, di * dout);
    for (std::size_t i = 0; i < di; ++i) {
        for (std::size_t jj = 0; jj < di; ++jj) {
            ComplexMatrix unit(di, di);
            unit(jj, i) = 1.0;  // |j><i| fed through the channel
            const ComplexMatrix block = ch.apply(unit);
            for (std::size_t r = 0; r < dout; ++r)
                for (std::size_t c = 0; c < dout; ++c)
                    j(i * dout + r, jj * dout + c) = block(r, c);
        }
    }
    return HermitianOperator(j);
}

HermitianOperator choi(const QuantumChannel& ch) {
    const std::size_t di = ch.dim_in(), dout = ch.dim_out();
    ComplexMatrix j(di * dout, di * dout);
    for (std::size_t i = 0; i < di; ++i) {
        for (std::size_t jj = 0; jj < di; ++jj) {
            ComplexMatrix unit(di, di);
            unit(i, jj) = 1.0;  // |i><j| fed through the channel
            const ComplexMatrix block = ch.apply(unit);
            for (std::size_t r = 0; r < dout; ++r)
                for (std::size_t c = 0; c < dout; ++c)
                    j(i * dout + r, jj * dout + c) = block(r, c);
        }
    }
    return HermitianOperator(j);
}

std::size_t choi_rank(const QuantumChannel& ch) {
    const Spectrum s = hermitian_eig(choi(ch));
    std::size_t rank = 0;
    for (double lam : s.eigenvalues)
        if (lam > 1e-9) ++rank;
    return rank;
}

bool is_unital(const QuantumChannel& ch) {
    ComplexMatrix dev = ch.apply(ComplexMatrix::identity(ch.dim_in()));
    dev -= ComplexMatrix::identity(ch.dim_out());
    return dev.max_abs() <= 1e-9;
}

PauliTransfer pauli_transfer(const QuantumChannel& ch) {
    if (ch.dim_in() != 2 || ch.dim_out() != 2) {
        throw std::invalid_argument("pauli_transfer: requires a qubit channel");
    }
    PauliTransfer n;
    const ComplexMatrix n_id = ch.apply(ComplexMatrix::identity(2));
    for (std::size_t i = 0; i < 3; ++i) {
        n.t[i] = 0.5 * (sigma(i + 1) * n_id).trace().real();
    }
    for (std::size_t j = 0; j < 3; ++j) {
        const ComplexMatrix out = ch.apply(sigma(j + 1));
        for (std::size_t i = 0; i < 3; ++i) {
            n.T[i][j] = 0.5 * (sigma(i + 1) * out).trace().real();
        }
    }
    return n;
}

ComplexMatrix apply_pauli_transfer(const PauliTransfer& n, const ComplexMatrix& rho) {
    if (!rho.is_square() || rho.rows() != 2) {
        throw std::invalid_argument("apply_pauli_transfer: operand must be 2x2");
    }
    // Components of rho in the Pauli basis: rho = (x0*I + x·sigma)/2 with
    // x_mu = Tr[sigma_mu rho]; the map sends x -> (x0, t*x0 + T x).
    Complex x0 = rho.trace();
    std::array<Complex, 3> x{};
    for (std::size_t i = 0; i < 3; ++i) x[i] = (sigma(i + 1) * rho).trace();
    std::array<Complex, 3> y{};
    for (std::size_t i = 0; i < 3; ++i) {
        y[i] = n.t[i] * x0;
        for (std::size_t j = 0; j < 3; ++j) y[i] += n.T[i][j] * x[j];
    }
    ComplexMatrix out = ComplexMatrix::identity(2);
    out *= 0.5 * x0;
    for (std::size_t i = 0; i < 3; ++i) {
        ComplexMatrix term = sigma(i + 1);
        term *= 0.5 * y[i];
        out += term;
    }
    return out;
}

namespace detail {

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

double det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

ComplexMatrix su2_from_so3(const Mat3& r) {
    const double tr = r[0][0] + r[1][1] + r[2][2];
    std::array<double, 3> w = {r[2][1] - r[1][2], r[0][2] - r[2][0], r[1][0] - r[0][1]};
    const double wnorm = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
    const double theta = std::atan2(wnorm / 2.0, (tr - 1.0) / 2.0);
    const double c = std::cos(theta);

    std::array<double, 3> axis = {0.0, 0.0, 1.0};
    if (c > -0.9) {
        if (wnorm > 1e-14) {
            for (std::size_t i = 0; i < 3; ++i) axis[i] = w[i] / wnorm;
        }
        // wnorm ~ 0 with c > -0.9 means theta ~ 0: axis irrelevant.
    } else {
        // Near a half-turn the antisymmetric part degenerates; recover the
        // axis from the symmetric part instead.
        std::size_t imax = 0;
        for (std::size_t i = 1; i < 3; ++i)
            if (r[i][i] > r[imax][imax]) imax = i;
        std::array<double, 3> n{};
        n[imax] = std::sqrt(std::max((r[imax][imax] - c) / (1.0 - c), 0.0));
        for (std::size_t i = 0; i < 3; ++i) {
            if (i == imax) continue;
            const double sym = 0.5 * (r[imax][i] + r[i][imax]);
            n[i] = sym / ((1.0 - c) * n[imax]);
        }
        double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        for (std::size_t i = 0; i < 3; ++i) n[i] /= nn;
        // Align with the antisymmetric part when it still carries a sign.
        if (wnorm > 1e-8 && (n[0] * w[0] + n[1] * w[1] + n[2] * w[2]) < 0.0) {
            for (auto& ni : n) ni = -ni;
        }
        axis = n;
    }

    ComplexMatrix u = ComplexMatrix::identity(2);
    u *= Complex(std::cos(theta / 2.0), 0.0);
    for (std::size_t i = 0; i < 3; ++i) {
        ComplexMatrix term = sigma(i + 1);
        term *= Complex(0.0, -std::sin(theta / 2.0) * axis[i]);
        u += term;
    }
    return u;
}

}  // namespace detail

CanonicalForm canonical_form(const QuantumChannel& ch) {
    using detail::su2_from_so3;
    using Mat3 = std::array<std::array<double, 3>, 3>;

    const PauliTransfer n = pauli_transfer(ch);

    // Real SVD of T via the eigendecomposition of TᵀT (3x3, well within
    // double precision for the 1e-8 recomposition tolerance).
    ComplexMatrix tt(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) s += n.T[k][i] * n.T[k][j];
            tt(i, j) = s;
        }
    const Spectrum es = detail::jacobi_eig(tt);  // descending

    Mat3 vmat{};  // right singular vectors as columns
    std::array<double, 3> sv{};
    for (std::size_t j = 0; j < 3; ++j) {
        sv[j] = std::sqrt(std::max(es.eigenvalues[j], 0.0));
        for (std::size_t i = 0; i < 3; ++i) vmat[i][j] = es.eigenvectors(i, j).real();
    }

    // Left singular vectors: u_j = T v_j / s_j, Gram-Schmidt completion for
    // (numerically) vanishing singular values.
    Mat3 umat{};
    for (std::size_t j = 0; j < 3; ++j) {
        std::array<double, 3> col{};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k) col[i] += n.T[i][k] * vmat[k][j];
        double norm = std::sqrt(col[0] * col[0] + col[1] * col[1] + col[2] * col[2]);
        if (sv[j] > 1e-12 && norm > 1e-12) {
            for (std::size_t i = 0; i < 3; ++i) umat[i][j] = col[i] / norm;
        } else {
            // Any unit vector orthogonal to the previous columns.
            for (std::size_t trial = 0; trial < 3; ++trial) {
                std::array<double, 3> cand{};
                cand[trial] = 1.0;
                for (std::size_t prev = 0; prev < j; ++prev) {
                    double dot = 0.0;
                    for (std::size_t i = 0; i < 3; ++i) dot += cand[i] * umat[i][prev];
                    for (std::size_t i = 0; i < 3; ++i) cand[i] -= dot * umat[i][prev];
                }
                const double cn = std::sqrt(cand[0] * cand[0] + cand[1] * cand[1] + cand[2] * cand[2]);
                if (cn > 0.5) {
                    for (std::size_t i = 0; i < 3; ++i) umat[i][j] = cand[i] / cn;
                    break;
                }
            }
        }
    }
    // Re-orthogonalize the left factor (guards the degenerate-σ case).
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t prev = 0; prev < j; ++prev) {
            double dot = 0.0;
            for (std::size_t i = 0; i < 3; ++i) dot += umat[i][j] * umat[i][prev];
            for (std::size_t i = 0; i < 3; ++i) umat[i][j] -= dot * umat[i][prev];
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < 3; ++i) norm += umat[i][j] * umat[i][j];
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < 3; ++i) umat[i][j] /= norm;
    }

    const double det_u = detail::det3(umat);
    const double det_v = detail::det3(vmat);

    // O_V = U * diag(1,1,sgn(det U)); O_Uᵀ = V * diag(1,1,sgn(det V));
    // absorbed signs flip the third singular value.
    Mat3 o_v = umat;
    for (std::size_t i = 0; i < 3; ++i) o_v[i][2] *= (det_u < 0.0 ? -1.0 : 1.0);
    Mat3 o_u{};  // = diag(1,1,sgn det V) · Vᵀ
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            o_u[i][j] = vmat[j][i] * (i == 2 && det_v < 0.0 ? -1.0 : 1.0);

    std::array<double, 3> lam = {sv[0], sv[1],
                                 sv[2] * (det_u < 0.0 ? -1.0 : 1.0) * (det_v < 0.0 ? -1.0 : 1.0)};

    PauliTransfer nd;
    for (std::size_t i = 0; i < 3; ++i) {
        nd.T[i][i] = lam[i];
        double s = 0.0;
        for (std::size_t k = 0; k < 3; ++k) s += o_v[k][i] * n.t[k];  // O_Vᵀ t
        nd.t[i] = s;
    }

    return CanonicalForm{QuantumChannel::unitary(su2_from_so3(o_u)), nd,
                         QuantumChannel::unitary(su2_from_so3(o_v))};
}

}  // namespace pdmt
