#include "pdmt/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pdmt/pdm.hpp"

namespace pdmt {

namespace detail {

std::vector<double> pauli_weights_from_lambdas(const std::array<double, 3>& lam) {
    return {(1.0 + lam[0] + lam[1] + lam[2]) / 4.0, (1.0 + lam[0] - lam[1] - lam[2]) / 4.0,
            (1.0 - lam[0] + lam[1] - lam[2]) / 4.0, (1.0 - lam[0] - lam[1] + lam[2]) / 4.0};
}

}  // namespace detail

namespace {

// Largest pairwise gap between two descending-sorted multisets.
double multiset_deviation(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::sort(a.begin(), a.end(), std::greater<double>());
    std::sort(b.begin(), b.end(), std::greater<double>());
    double dev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
    return dev;
}

}  // namespace

VerificationReport verify_theorem1(const DensityMatrix& rho, const QuantumChannel& u) {
    if (choi_rank(u) != 1) {
        throw std::invalid_argument("verify_theorem1: channel is not unitary (Choi rank != 1)");
    }
    const Pdm r = star_product(u, rho);
    const double info = mutual_information(r, 1);
    const double s_rho = hermitian_entropy(rho);

    const std::vector<double> lam = hermitian_eig(rho).eigenvalues;
    std::vector<double> expected = lam;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        for (std::size_t j = i + 1; j < lam.size(); ++j) {
            expected.push_back((lam[i] + lam[j]) / 2.0);
            expected.push_back(-(lam[i] + lam[j]) / 2.0);
        }
    }
    const double spec_dev = multiset_deviation(expected, hermitian_eig(r.op()).eigenvalues);
    const double info_dev = std::abs(info - s_rho);

    VerificationReport rep;
    rep.max_deviation = std::max(info_dev, spec_dev);
    rep.passed = info_dev <= 1e-8 && spec_dev <= 1e-8;
    std::ostringstream os;
    os << "I=" << info << " S(rho)=" << s_rho << " |I-S|=" << info_dev
       << " spectrum-pairing deviation=" << spec_dev;
    rep.detail = os.str();
    return rep;
}

VerificationReport verify_theorem2(const QuantumChannel& ch) {
    VerificationReport rep;
    const bool unital = is_unital(ch);
    const bool low_rank = choi_rank(ch) <= 2;
    if (ch.dim_in() != 2 || ch.dim_out() != 2 || (!unital && !low_rank)) {
        rep.passed = false;
        rep.detail = "precondition not met: need a qubit channel that is unital or Choi rank <= 2";
        return rep;
    }

    const DensityMatrix max_mixed(ComplexMatrix{{0.5, 0.0}, {0.0, 0.5}});
    const Pdm r = star_product(ch, max_mixed);
    const double info = mutual_information(r, 1);
    const std::vector<double> actual = hermitian_eig(r.op()).eigenvalues;

    const CanonicalForm cf = canonical_form(ch);
    const std::array<double, 3> lam = {cf.n_d.T[0][0], cf.n_d.T[1][1], cf.n_d.T[2][2]};

    std::vector<double> expected;
    if (unital) {
        for (double p : detail::pauli_weights_from_lambdas(lam)) expected.push_back(0.5 - p);
    } else {
        const double l3 = *std::min_element(
            lam.begin(), lam.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
        expected = {0.5, 0.5, l3 / 2.0, -l3 / 2.0};
    }
    const double spec_dev = multiset_deviation(expected, actual);
    const double range_dev = std::max(0.0, std::max(-info, info - 1.0));

    rep.max_deviation = std::max(spec_dev, range_dev);
    rep.passed = range_dev <= 1e-9 && spec_dev <= 1e-8;
    std::ostringstream os;
    os << "I=" << info << (unital ? " (unital)" : " (two-Kraus)")
       << " spectrum deviation=" << spec_dev;
    rep.detail = os.str();
    return rep;
}

}  // namespace pdmt
