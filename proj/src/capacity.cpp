#include "pdmt/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pdmt/entropy.hpp"
#include "pdmt/pauli.hpp"
#include "pdmt/pdm.hpp"

namespace pdmt {

namespace {

using Bloch = std::array<double, 3>;

double norm(const Bloch& r) {
    return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
}

Bloch clamp_to_ball(Bloch r) {
    const double n = norm(r);
    if (n > 1.0) {
        for (double& c : r) c /= n;
    }
    return r;
}

struct Objective {
    const QuantumChannel& ch;
    std::size_t budget;
    std::size_t used = 0;
    double best = -std::numeric_limits<double>::infinity();
    Bloch best_r{};
    std::vector<std::pair<Bloch, double>> trace = {};

    bool exhausted() const { return used >= budget; }

    double eval(const Bloch& r) {
        ++used;
        const double value = mutual_information(star_product(ch, state_from_bloch(r)), 1);
        if (value > best) {
            best = value;
            best_r = r;
            trace.emplace_back(r, value);
        }
        return value;
    }
};

}  // namespace

DensityMatrix state_from_bloch(const Bloch& r) {
    if (norm(r) > 1.0 + 1e-9) {
        throw std::invalid_argument("state_from_bloch: Bloch vector outside the unit ball");
    }
    ComplexMatrix m = ComplexMatrix::identity(2);
    for (std::size_t i = 0; i < 3; ++i) {
        ComplexMatrix term = sigma(i + 1);
        term *= Complex(r[i], 0.0);
        m += term;
    }
    m *= 0.5;
    return DensityMatrix(m);
}

CapacityResult temporal_capacity(const QuantumChannel& ch, std::size_t budget) {
    if (ch.dim_in() != 2 || ch.dim_out() != 2) {
        throw std::invalid_argument("temporal_capacity: requires a qubit channel");
    }
    if (budget < 100) throw std::invalid_argument("temporal_capacity: budget must be >= 100");

    // Reserve one evaluation for the final recomputation at the argmax, so
    // the reported evaluation count never exceeds the budget.
    Objective obj{ch, budget - 1};

    // Coarse grid over the [0,1]^3 corner of the Bloch ball, lexicographic.
    std::vector<std::pair<double, Bloch>> scored;
    for (int i = 0; i <= 10 && !obj.exhausted(); ++i) {
        for (int j = 0; j <= 10 && !obj.exhausted(); ++j) {
            for (int k = 0; k <= 10 && !obj.exhausted(); ++k) {
                const Bloch r = {i * 0.1, j * 0.1, k * 0.1};
                if (norm(r) > 1.0 + 1e-9) continue;
                scored.emplace_back(obj.eval(r), r);
            }
        }
    }

    // Nelder-Mead refinement from the five best grid points.
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    const std::size_t starts = std::min<std::size_t>(5, scored.size());
    for (std::size_t s = 0; s < starts && !obj.exhausted(); ++s) {
        struct Vertex {
            Bloch x;
            double f;
        };
        std::vector<Vertex> simplex;
        const Bloch x0 = scored[s].second;
        simplex.push_back({x0, scored[s].first});
        for (std::size_t i = 0; i < 3 && !obj.exhausted(); ++i) {
            Bloch xi = x0;
            xi[i] += 0.08;
            xi = clamp_to_ball(xi);
            simplex.push_back({xi, obj.eval(xi)});
        }
        if (simplex.size() < 4) break;

        while (!obj.exhausted()) {
            std::stable_sort(simplex.begin(), simplex.end(),
                             [](const Vertex& a, const Vertex& b) { return a.f > b.f; });
            double diameter = 0.0;
            for (std::size_t i = 1; i < simplex.size(); ++i) {
                Bloch d;
                for (std::size_t c = 0; c < 3; ++c) d[c] = simplex[i].x[c] - simplex[0].x[c];
                diameter = std::max(diameter, norm(d));
            }
            if (diameter < 1e-6) break;

            Bloch centroid{};
            for (std::size_t i = 0; i + 1 < simplex.size(); ++i) {
                for (std::size_t c = 0; c < 3; ++c) centroid[c] += simplex[i].x[c] / 3.0;
            }
            const Vertex& worst = simplex.back();

            auto affine = [&](double t) {
                Bloch x;
                for (std::size_t c = 0; c < 3; ++c) {
                    x[c] = centroid[c] + t * (centroid[c] - worst.x[c]);
                }
                return clamp_to_ball(x);
            };

            const Bloch xr = affine(1.0);
            const double fr = obj.eval(xr);
            if (fr > simplex[0].f) {
                if (obj.exhausted()) break;
                const Bloch xe = affine(2.0);
                const double fe = obj.eval(xe);
                simplex.back() = fe > fr ? Vertex{xe, fe} : Vertex{xr, fr};
            } else if (fr > simplex[simplex.size() - 2].f) {
                simplex.back() = {xr, fr};
            } else {
                if (obj.exhausted()) break;
                const Bloch xc = affine(-0.5);
                const double fc = obj.eval(xc);
                if (fc > worst.f) {
                    simplex.back() = {xc, fc};
                } else {
                    // Shrink toward the best vertex.
                    for (std::size_t i = 1; i < simplex.size() && !obj.exhausted(); ++i) {
                        for (std::size_t c = 0; c < 3; ++c) {
                            simplex[i].x[c] = simplex[0].x[c] + 0.5 * (simplex[i].x[c] - simplex[0].x[c]);
                        }
                        simplex[i].f = obj.eval(simplex[i].x);
                    }
                }
            }
        }
    }

    CapacityResult result{0.0, state_from_bloch(obj.best_r), 0, {}};
    // Recompute at the argmax so the reported value is exactly the objective
    // at the returned state.
    result.value = mutual_information(star_product(ch, result.argmax_state), 1);
    ++obj.used;
    result.evaluations = obj.used;
    result.trace = std::move(obj.trace);
    return result;
}

}  // namespace pdmt
