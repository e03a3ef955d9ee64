#include "pdmt/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pdmt {

ProbabilityVector::ProbabilityVector(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("ProbabilityVector: empty");
    double sum = 0.0;
    for (double w : weights_) {
        if (w < 0.0) throw std::invalid_argument("ProbabilityVector: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("ProbabilityVector: weights sum to " + std::to_string(sum));
    }
}

double hermitian_entropy(const HermitianOperator& x) {
    const Spectrum s = hermitian_eig(x);
    double acc = 0.0;
    for (double lam : s.eigenvalues) {
        const double mag = std::abs(lam);
        if (mag <= 1e-12) continue;
        acc -= lam * std::log2(mag);
    }
    return acc;
}

double shannon_entropy(const ProbabilityVector& p) {
    double acc = 0.0;
    for (double w : p.weights()) {
        if (w <= 0.0) continue;
        acc -= w * std::log2(w);
    }
    return acc;
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("binary_entropy: p outside [0,1]");
    return shannon_entropy(ProbabilityVector({p, 1.0 - p}));
}

double mutual_information(const Pdm& p, std::size_t cut) {
    if (cut == 0 || cut >= p.slots()) {
        throw std::invalid_argument("mutual_information: cut must satisfy 1 <= cut < slots");
    }
    std::vector<std::size_t> left(cut), right(p.slots() - cut);
    std::iota(left.begin(), left.end(), 0);
    std::iota(right.begin(), right.end(), cut);
    const double s_left = hermitian_entropy(marginal(p, left).op());
    const double s_right = hermitian_entropy(marginal(p, right).op());
    const double s_whole = hermitian_entropy(p.op());
    return s_left + s_right - s_whole;
}

bool majorizes(const std::vector<double>& y, const std::vector<double>& x) {
    if (y.size() != x.size()) throw std::invalid_argument("majorizes: length mismatch");
    std::vector<double> ys = y, xs = x;
    std::sort(ys.begin(), ys.end(), std::greater<double>());
    std::sort(xs.begin(), xs.end(), std::greater<double>());
    double py = 0.0, px = 0.0;
    for (std::size_t k = 0; k + 1 < ys.size(); ++k) {
        py += ys[k];
        px += xs[k];
        if (py < px - 1e-10) return false;
    }
    py += ys.empty() ? 0.0 : ys.back();
    px += xs.empty() ? 0.0 : xs.back();
    return std::abs(py - px) <= 1e-10;
}

}  // namespace pdmt
