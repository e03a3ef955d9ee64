#include "pdmt/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "pdmt/entropy.hpp"
#include "pdmt/pdm.hpp"

namespace pdmt {

namespace {

// ---- Hermitian matrix <-> real vector (Frobenius-isometric) ----

std::vector<double> hermitian_to_vec(const ComplexMatrix& j) {
    const std::size_t d = j.rows();
    const double rt2 = std::numbers::sqrt2;
    std::vector<double> x;
    x.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i) x.push_back(j(i, i).real());
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = i + 1; k < d; ++k) {
            x.push_back(rt2 * j(i, k).real());
            x.push_back(rt2 * j(i, k).imag());
        }
    }
    return x;
}

ComplexMatrix vec_to_hermitian(const std::vector<double>& x, std::size_t d) {
    const double inv_rt2 = 1.0 / std::numbers::sqrt2;
    ComplexMatrix j(d, d);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < d; ++i) j(i, i) = x[pos++];
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = i + 1; k < d; ++k) {
            const Complex v(inv_rt2 * x[pos], inv_rt2 * x[pos + 1]);
            pos += 2;
            j(i, k) = v;
            j(k, i) = std::conj(v);
        }
    }
    return j;
}

// Partial transpose on the first factor of a (db x da)-indexed matrix.
ComplexMatrix pt_slot1(const ComplexMatrix& j, std::size_t db, std::size_t da) {
    ComplexMatrix c(j.rows(), j.cols());
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t a = 0; a < da; ++a)
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t b = 0; b < da; ++b)
                    c(i * da + a, k * da + b) = j(k * da + a, i * da + b);
    return c;
}

// ---- dense real SVD via one-sided (Hestenes) Jacobi ----

struct RealSvd {
    std::vector<std::vector<double>> u;  // orthonormal columns, length m (only where sigma>0)
    std::vector<double> sigma;           // column norms, unsorted
    std::vector<std::vector<double>> v;  // orthogonal n x n, stored as columns
};

RealSvd hestenes_svd(std::vector<std::vector<double>> cols) {
    const std::size_t n = cols.size();
    const std::size_t m = cols[0].size();
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

    auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };

    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = dot(cols[p], cols[p]);
                const double beta = dot(cols[q], cols[q]);
                const double gamma = dot(cols[p], cols[q]);
                if (std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta) || alpha * beta == 0.0) {
                    continue;
                }
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const double ap = cols[p][i], aq = cols[q][i];
                    cols[p][i] = c * ap - s * aq;
                    cols[q][i] = s * ap + c * aq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vp = v[p][i], vq = v[q][i];
                    v[p][i] = c * vp - s * vq;
                    v[q][i] = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }

    RealSvd out;
    out.sigma.resize(n);
    out.u.resize(n);
    out.v = std::move(v);
    for (std::size_t j = 0; j < n; ++j) {
        const double norm = std::sqrt(dot(cols[j], cols[j]));
        out.sigma[j] = norm;
        out.u[j].assign(m, 0.0);
        if (norm > 0.0) {
            for (std::size_t i = 0; i < m; ++i) out.u[j][i] = cols[j][i] / norm;
        }
    }
    return out;
}

struct ConstraintSystem {
    std::vector<std::vector<double>> cols;  // n columns of length m
    std::vector<double> b;
    std::size_t n_vars = 0;
    std::size_t n_rows = 0;
};

std::vector<double> matvec(const ConstraintSystem& sys, const std::vector<double>& x) {
    std::vector<double> y(sys.n_rows, 0.0);
    for (std::size_t k = 0; k < sys.n_vars; ++k) {
        const double xk = x[k];
        if (xk == 0.0) continue;
        for (std::size_t i = 0; i < sys.n_rows; ++i) y[i] += xk * sys.cols[k][i];
    }
    return y;
}

double residual_norm(const ConstraintSystem& sys, const std::vector<double>& x) {
    const std::vector<double> y = matvec(sys, x);
    double s = 0.0;
    for (std::size_t i = 0; i < sys.n_rows; ++i) {
        const double d = y[i] - sys.b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

constexpr double kSvCutoff = 1e-8;

// x - pinv(A)(Ax - b): orthogonal projection onto the least-squares affine set.
std::vector<double> project_affine(const ConstraintSystem& sys, const RealSvd& svd,
                                   const std::vector<double>& x) {
    std::vector<double> r = matvec(sys, x);
    for (std::size_t i = 0; i < sys.n_rows; ++i) r[i] -= sys.b[i];
    std::vector<double> out = x;
    for (std::size_t j = 0; j < sys.n_vars; ++j) {
        if (svd.sigma[j] <= kSvCutoff) continue;
        double coeff = 0.0;
        for (std::size_t i = 0; i < sys.n_rows; ++i) coeff += svd.u[j][i] * r[i];
        coeff /= svd.sigma[j];
        for (std::size_t k = 0; k < sys.n_vars; ++k) out[k] -= coeff * svd.v[j][k];
    }
    return out;
}

// Project onto maps whose Choi matrix is PSD (eigenvalue clipping in Choi
// coordinates; the slot-1 partial transpose is a Frobenius isometry so this
// is the metric-correct projection).
std::vector<double> project_psd(const std::vector<double>& x, std::size_t db, std::size_t da,
                                double* min_eig_out) {
    const std::size_t d = db * da;
    const ComplexMatrix choi_mat = pt_slot1(vec_to_hermitian(x, d), db, da);
    const Spectrum s = detail::jacobi_eig(choi_mat);
    if (min_eig_out) *min_eig_out = s.eigenvalues.empty() ? 0.0 : s.eigenvalues.back();
    ComplexMatrix clipped(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const double lam = s.eigenvalues[k];
        if (lam <= 0.0) continue;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                clipped(i, j) += lam * s.eigenvectors(i, k) * std::conj(s.eigenvectors(j, k));
    }
    return hermitian_to_vec(pt_slot1(clipped, db, da));
}

// Kraus family from the (PSD-clipped) Choi matrix of the candidate map, with
// an exact trace-preservation polish K -> K G^{-1/2}.
std::optional<QuantumChannel> channel_from_solution(const std::vector<double>& x, std::size_t db,
                                                    std::size_t da) {
    const std::size_t d = db * da;
    const ComplexMatrix choi_mat = pt_slot1(vec_to_hermitian(x, d), db, da);
    const Spectrum s = detail::jacobi_eig(choi_mat);
    std::vector<ComplexMatrix> kraus;
    for (std::size_t l = 0; l < d; ++l) {
        const double mu = s.eigenvalues[l];
        if (mu < 1e-12) continue;
        const double root = std::sqrt(mu);
        ComplexMatrix k(da, db);
        for (std::size_t i = 0; i < db; ++i)
            for (std::size_t a = 0; a < da; ++a) k(a, i) = root * s.eigenvectors(i * da + a, l);
        kraus.push_back(std::move(k));
    }
    if (kraus.empty()) return std::nullopt;

    ComplexMatrix gram(db, db);
    for (const auto& k : kraus) gram += k.dagger() * k;
    ComplexMatrix dev = gram;
    dev -= ComplexMatrix::identity(db);
    if (dev.max_abs() > 1e-6) return std::nullopt;  // too far off to polish honestly

    // G^{-1/2} via eigendecomposition (G is ~identity, comfortably PD).
    const Spectrum gs = detail::jacobi_eig(gram);
    ComplexMatrix inv_root(db, db);
    for (std::size_t l = 0; l < db; ++l) {
        if (gs.eigenvalues[l] <= 0.0) return std::nullopt;
        const double w = 1.0 / std::sqrt(gs.eigenvalues[l]);
        for (std::size_t i = 0; i < db; ++i)
            for (std::size_t j = 0; j < db; ++j)
                inv_root(i, j) += w * gs.eigenvectors(i, l) * std::conj(gs.eigenvectors(j, l));
    }
    for (auto& k : kraus) k = k * inv_root;
    try {
        return QuantumChannel(db, da, std::move(kraus));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

struct PocsOutcome {
    bool feasible = false;
    std::vector<double> x;
    double linear_residual = 0.0;
    double min_eig = 0.0;
};

PocsOutcome run_pocs(const ConstraintSystem& sys, const RealSvd& svd, std::vector<double> x,
                     std::size_t db, std::size_t da, std::size_t max_iters) {
    PocsOutcome out;
    double min_eig = 0.0;
    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        x = project_affine(sys, svd, x);
        const double lin_res = residual_norm(sys, x);
        std::vector<double> clipped = project_psd(x, db, da, &min_eig);
        if (lin_res <= 5e-8 && min_eig >= -1e-9) {
            out.feasible = true;
            out.x = std::move(x);
            out.linear_residual = lin_res;
            out.min_eig = min_eig;
            return out;
        }
        x = std::move(clipped);
    }
    out.x = project_affine(sys, svd, x);
    out.linear_residual = residual_norm(sys, out.x);
    (void)project_psd(out.x, db, da, &min_eig);
    out.min_eig = min_eig;
    return out;
}

}  // namespace

BayesSolution bayesian_inverse(const QuantumChannel& ch, const DensityMatrix& rho) {
    const std::size_t da = ch.dim_in(), db = ch.dim_out();
    const std::size_t d = db * da;
    const std::size_t n_vars = d * d;

    // Target: the slot-swapped forward PDM, expressed on the (B, A) space.
    const Pdm forward = star_product(ch, rho);
    const ComplexMatrix target = swap_bipartite(forward.matrix(), da, db);

    ComplexMatrix sigma_raw = ch.apply(rho.matrix());
    ComplexMatrix sigma = sigma_raw;
    sigma += sigma_raw.dagger();
    sigma *= 0.5;
    const ComplexMatrix sigma_ext = tensor(sigma, ComplexMatrix::identity(da));

    // Linear constraints on the Hermitian unknown J (the candidate map's
    // input-output correlation matrix): anticommutator relation plus trace
    // preservation of the map.
    ConstraintSystem sys;
    sys.n_vars = n_vars;
    sys.n_rows = n_vars + db * db;
    std::vector<double> rhs_top = hermitian_to_vec(target);
    std::vector<double> rhs_tp = hermitian_to_vec(ComplexMatrix::identity(db));
    sys.b = rhs_top;
    sys.b.insert(sys.b.end(), rhs_tp.begin(), rhs_tp.end());

    std::vector<double> unit(n_vars, 0.0);
    for (std::size_t k = 0; k < n_vars; ++k) {
        unit.assign(n_vars, 0.0);
        unit[k] = 1.0;
        const ComplexMatrix ek = vec_to_hermitian(unit, d);
        ComplexMatrix anti = anticommutator(sigma_ext, ek);
        anti *= 0.5;
        std::vector<double> col = hermitian_to_vec(anti);
        const std::vector<double> tp_part =
            hermitian_to_vec(partial_trace(ek, {db, da}, {0}));
        col.insert(col.end(), tp_part.begin(), tp_part.end());
        sys.cols.push_back(std::move(col));
    }

    const RealSvd svd = hestenes_svd(sys.cols);
    std::size_t nullity = 0;
    for (double sv : svd.sigma) {
        if (sv <= kSvCutoff) ++nullity;
    }

    // Least-norm least-squares point.
    std::vector<double> x_star(n_vars, 0.0);
    for (std::size_t j = 0; j < n_vars; ++j) {
        if (svd.sigma[j] <= kSvCutoff) continue;
        double coeff = 0.0;
        for (std::size_t i = 0; i < sys.n_rows; ++i) coeff += svd.u[j][i] * sys.b[i];
        coeff /= svd.sigma[j];
        for (std::size_t k = 0; k < n_vars; ++k) x_star[k] += coeff * svd.v[j][k];
    }

    BayesSolution sol;
    sol.nullity = nullity;
    sol.residual = residual_norm(sys, x_star);

    if (sol.residual > 1e-7) {
        sol.kind = BayesSolution::Kind::none;  // linear system itself infeasible
        return sol;
    }

    const PocsOutcome main_run = run_pocs(sys, svd, x_star, db, da, 10000);
    if (!main_run.feasible) {
        sol.kind = BayesSolution::Kind::none;
        sol.residual = main_run.linear_residual;
        return sol;
    }
    sol.residual = main_run.linear_residual;
    sol.representative = channel_from_solution(main_run.x, db, da);
    if (!sol.representative) {
        sol.kind = BayesSolution::Kind::none;
        return sol;
    }
    sol.kind = nullity == 0 ? BayesSolution::Kind::unique : BayesSolution::Kind::family;

    if (sol.kind == BayesSolution::Kind::family) {
        // Walk along a null direction and re-project to land on a second point.
        std::size_t null_idx = n_vars;
        for (std::size_t j = 0; j < n_vars; ++j) {
            if (svd.sigma[j] <= kSvCutoff) {
                null_idx = j;
                break;
            }
        }
        if (null_idx < n_vars) {
            for (double step : {0.3, -0.3}) {
                std::vector<double> start = main_run.x;
                for (std::size_t k = 0; k < n_vars; ++k) {
                    start[k] += step * svd.v[null_idx][k];
                }
                const PocsOutcome second = run_pocs(sys, svd, start, db, da, 4000);
                if (!second.feasible) continue;
                double dist = 0.0;
                for (std::size_t k = 0; k < n_vars; ++k) {
                    const double diff = second.x[k] - main_run.x[k];
                    dist += diff * diff;
                }
                if (std::sqrt(dist) < 1e-6) continue;
                auto second_ch = channel_from_solution(second.x, db, da);
                if (second_ch) {
                    sol.second_member = std::move(second_ch);
                    break;
                }
            }
        }
    }
    return sol;
}

VerificationReport verify_time_symmetry(const QuantumChannel& ch, const DensityMatrix& rho) {
    VerificationReport rep;
    const BayesSolution sol = bayesian_inverse(ch, rho);
    if (sol.kind == BayesSolution::Kind::none) {
        rep.passed = true;
        std::ostringstream os;
        os << "skipped: no reverse channel found (residual " << sol.residual << ")";
        rep.detail = os.str();
        return rep;
    }

    const Pdm forward = star_product(ch, rho);
    const double info_fwd = mutual_information(forward, 1);

    ComplexMatrix sigma_raw = ch.apply(rho.matrix());
    ComplexMatrix sigma = sigma_raw;
    sigma += sigma_raw.dagger();
    sigma *= 0.5;
    const DensityMatrix sigma_dm(sigma);

    const QuantumChannel& rev = *sol.representative;
    const Pdm backward = star_product(rev, sigma_dm);
    const double info_bwd = mutual_information(backward, 1);

    const double info_dev = std::abs(info_fwd - info_bwd);

    std::vector<double> fwd_spec = hermitian_eig(forward.op()).eigenvalues;
    std::vector<double> bwd_spec = hermitian_eig(backward.op()).eigenvalues;
    std::sort(fwd_spec.begin(), fwd_spec.end());
    std::sort(bwd_spec.begin(), bwd_spec.end());
    double spec_dev = 0.0;
    for (std::size_t i = 0; i < fwd_spec.size(); ++i) {
        spec_dev = std::max(spec_dev, std::abs(fwd_spec[i] - bwd_spec[i]));
    }

    ComplexMatrix recovered = rev.apply(sigma);
    recovered -= rho.matrix();
    const double recovery_dev = recovered.max_abs();

    rep.max_deviation = std::max({info_dev, spec_dev, recovery_dev});
    rep.passed = info_dev <= 1e-7 && spec_dev <= 1e-7 && recovery_dev <= 1e-7;
    std::ostringstream os;
    os << "forward I=" << info_fwd << " reverse I=" << info_bwd << " spectrum dev=" << spec_dev
       << " state recovery dev=" << recovery_dev;
    rep.detail = os.str();
    return rep;
}

}  // namespace pdmt
