#include <doctest.h>

#include <cmath>
#include <vector>

#include "pdmt/channel.hpp"
#include "pdmt/entropy.hpp"
#include "pdmt/holevo.hpp"
#include "pdmt/pdm.hpp"
#include "pdmt/random.hpp"
#include "pdmt/suites.hpp"

using namespace pdmt;

namespace {

DensityMatrix ket0() { return DensityMatrix(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}); }
DensityMatrix ket1() { return DensityMatrix(ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}); }
DensityMatrix ket_plus() { return DensityMatrix(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}); }

Povm z_projectors() {
    return Povm({HermitianOperator(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}),
                 HermitianOperator(ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}})});
}

Povm trivial_povm() { return Povm({HermitianOperator(ComplexMatrix::identity(2))}); }

QuantumChannel hadamard_channel() {
    const double s = 1.0 / std::sqrt(2.0);
    return QuantumChannel::unitary(ComplexMatrix{{s, s}, {s, -s}});
}

}  // namespace

TEST_CASE("ensemble constructor validates and averages") {
    CHECK_THROWS_AS(CqEnsemble(ProbabilityVector({0.5, 0.5}), {ket0()}),
                    std::invalid_argument);
    Rng rng(61);
    CHECK_THROWS_AS(CqEnsemble(ProbabilityVector({0.5, 0.5}), {ket0(), rng.random_state(4)}),
                    std::invalid_argument);
    const CqEnsemble ens(ProbabilityVector({0.25, 0.75}), {ket0(), ket1()});
    const ComplexMatrix avg = ens.average_state().matrix();
    CHECK(avg(0, 0).real() == doctest::Approx(0.25));
    CHECK(avg(1, 1).real() == doctest::Approx(0.75));
}

TEST_CASE("povm constructor validates effects") {
    CHECK_NOTHROW(z_projectors());
    // Sum differs from the identity.
    CHECK_THROWS_AS(Povm({HermitianOperator(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}})}),
                    std::invalid_argument);
    // An effect with a negative eigenvalue.
    CHECK_THROWS_AS(Povm({HermitianOperator(ComplexMatrix{{1.5, 0.0}, {0.0, 0.5}}),
                          HermitianOperator(ComplexMatrix{{-0.5, 0.0}, {0.0, 0.5}})}),
                    std::invalid_argument);
}

TEST_CASE("joint distribution validates and indexes") {
    CHECK_THROWS_AS(JointDistribution3(2, 2, 2, {0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(JointDistribution3(1, 1, 2, {0.7, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(JointDistribution3(1, 1, 2, {1.2, -0.2}), std::invalid_argument);
    // Tiny negatives from floating point are clipped.
    const JointDistribution3 d(1, 1, 2, {1.0 + 1e-13, -1e-13});
    CHECK(d(0, 0, 1) == 0.0);
    CHECK_THROWS_AS(d(0, 0, 2), std::out_of_range);
}

TEST_CASE("holevo quantity on reference ensembles") {
    CHECK(holevo_chi(CqEnsemble(ProbabilityVector({0.5, 0.5}), {ket0(), ket1()})) ==
          doctest::Approx(1.0));
    const double expect = binary_entropy((1.0 + 1.0 / std::sqrt(2.0)) / 2.0);
    CHECK(holevo_chi(CqEnsemble(ProbabilityVector({0.5, 0.5}), {ket0(), ket_plus()})) ==
          doctest::Approx(expect).epsilon(1e-9));
    CHECK(expect == doctest::Approx(0.6009).epsilon(1e-3));
    CHECK(holevo_chi(CqEnsemble(ProbabilityVector({1.0}), {ket_plus()})) ==
          doctest::Approx(0.0));
}

TEST_CASE("labelled three-slot operator is block diagonal with weighted blocks") {
    const CqEnsemble ens(ProbabilityVector({0.5, 0.5}), {ket0(), ket1()});
    const QuantumChannel id = QuantumChannel::identity();
    const Pdm r = cq_pdm(ens, id);
    CHECK(r.dims() == std::vector<std::size_t>{2, 2, 2});
    const ComplexMatrix& m = r.matrix();
    for (std::size_t i = 0; i < 2; ++i) {
        const ComplexMatrix block = star_product(id, ens.states[i]).matrix();
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) {
                CHECK(std::abs(m(i * 4 + a, i * 4 + b) - 0.5 * block(a, b)) <= 1e-12);
                // Off-diagonal label blocks vanish.
                CHECK(std::abs(m(i * 4 + a, (1 - i) * 4 + b)) <= 1e-12);
            }
    }
    // Label marginal is the probability vector.
    const ComplexMatrix lab = marginal(r, {0}).matrix();
    CHECK(lab(0, 0).real() == doctest::Approx(0.5));
    CHECK(lab(1, 1).real() == doctest::Approx(0.5));
    // Single-element ensemble.
    const Pdm single = cq_pdm(CqEnsemble(ProbabilityVector({1.0}), {ket_plus()}), id);
    CHECK(single.dims() == std::vector<std::size_t>{1, 2, 2});
}

TEST_CASE("label-cut information equals the block entropy combination") {
    Rng rng(62);
    for (int t = 0; t < 20; ++t) {
        const std::size_t k = 2 + t % 3;
        std::vector<DensityMatrix> states;
        for (std::size_t i = 0; i < k; ++i) states.push_back(rng.random_state(2));
        const CqEnsemble ens(ProbabilityVector(rng.random_simplex(k)), std::move(states));
        const QuantumChannel ch = rng.random_channel(2, 2, 1 + t % 4);
        const auto [lhs, rhs] = theorem3_mi(ens, ch);
        CHECK(std::abs(lhs - rhs) <= 1e-8);
    }
}

TEST_CASE("with unitary evolution the label-cut information is the holevo quantity") {
    Rng rng(63);
    for (int t = 0; t < 15; ++t) {
        std::vector<DensityMatrix> states;
        for (int i = 0; i < 2; ++i) {
            const ComplexMatrix u = rng.haar_unitary(2);
            ComplexMatrix pure(2, 2);
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) pure(r, c) = u(r, 0) * std::conj(u(c, 0));
            states.push_back(DensityMatrix(pure));
        }
        const CqEnsemble ens(ProbabilityVector(rng.random_simplex(2)), std::move(states));
        const QuantumChannel u = QuantumChannel::unitary(rng.haar_unitary(2));
        const auto [lhs, rhs] = theorem3_mi(ens, u);
        const double chi = holevo_chi(ens);
        CHECK(std::abs(lhs - chi) <= 1e-8);
        CHECK(std::abs(rhs - chi) <= 1e-8);
    }
    // Identical states carry nothing.
    const CqEnsemble dull(ProbabilityVector({0.5, 0.5}), {ket_plus(), ket_plus()});
    const auto [l0, r0] = theorem3_mi(dull, QuantumChannel::identity());
    CHECK(l0 == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(r0 == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("sequential statistics of repeated projective measurement") {
    const CqEnsemble ens(ProbabilityVector({1.0}), {ket0()});
    const JointDistribution3 d =
        sequential_distribution(ens, z_projectors(), z_projectors(), QuantumChannel::identity());
    CHECK(d(0, 0, 0) == doctest::Approx(1.0));
    CHECK(d(0, 0, 1) == doctest::Approx(0.0));
    CHECK(d(0, 1, 0) == doctest::Approx(0.0));
    CHECK(d(0, 1, 1) == doctest::Approx(0.0));
}

TEST_CASE("intermediate rotation makes the second outcome uniform") {
    const CqEnsemble ens(ProbabilityVector({1.0}), {ket0()});
    const JointDistribution3 d =
        sequential_distribution(ens, z_projectors(), z_projectors(), hadamard_channel());
    CHECK(d(0, 0, 0) == doctest::Approx(0.5));
    CHECK(d(0, 0, 1) == doctest::Approx(0.5));
    CHECK(d(0, 1, 0) == doctest::Approx(0.0));
    // One label only: no classical information.
    CHECK(classical_mi_x_y1y2(d) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("trivial first measurement reduces to single-measurement statistics") {
    Rng rng(64);
    const DensityMatrix rho = rng.random_state(2);
    const CqEnsemble ens(ProbabilityVector({1.0}), {rho});
    const ComplexMatrix u = rng.haar_unitary(2);
    const Povm n = rng.random_povm(2, 3);
    const JointDistribution3 d =
        sequential_distribution(ens, trivial_povm(), n, QuantumChannel::unitary(u));
    const ComplexMatrix evolved = u * rho.matrix() * u.dagger();
    for (std::size_t k = 0; k < 3; ++k) {
        const double born = (evolved * n.effects[k].matrix()).trace().real();
        CHECK(d(0, 0, k) == doctest::Approx(born).epsilon(1e-12));
    }
}

TEST_CASE("sequential statistics require a unitary middle step") {
    const CqEnsemble ens(ProbabilityVector({1.0}), {ket0()});
    CHECK_THROWS_AS(sequential_distribution(ens, z_projectors(), z_projectors(),
                                            QuantumChannel::depolarizing(0.5)),
                    std::invalid_argument);
}

TEST_CASE("classical information of hand-built distributions") {
    // Product: independent label.
    const JointDistribution3 prod(2, 2, 1, {0.25, 0.25, 0.25, 0.25});
    CHECK(classical_mi_x_y1y2(prod) == doctest::Approx(0.0).epsilon(1e-12));
    // Label perfectly encoded in the outcome pair.
    const JointDistribution3 tight(2, 2, 2, {0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5});
    CHECK(classical_mi_x_y1y2(tight) == doctest::Approx(1.0));
}

TEST_CASE("orthogonal ensemble with aligned projectors saturates the bound") {
    const CqEnsemble ens(ProbabilityVector({0.5, 0.5}), {ket0(), ket1()});
    const JointDistribution3 d =
        sequential_distribution(ens, z_projectors(), z_projectors(), QuantumChannel::identity());
    CHECK(classical_mi_x_y1y2(d) == doctest::Approx(1.0).epsilon(1e-9));
    const VerificationReport rep =
        check_sequential_holevo(ens, z_projectors(), z_projectors(), QuantumChannel::identity());
    CHECK(rep.passed);
}

TEST_CASE("trivial measurements extract nothing") {
    const CqEnsemble ens(ProbabilityVector({0.5, 0.5}), {ket0(), ket_plus()});
    const JointDistribution3 d =
        sequential_distribution(ens, trivial_povm(), trivial_povm(), QuantumChannel::identity());
    CHECK(classical_mi_x_y1y2(d) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(check_sequential_holevo(ens, trivial_povm(), trivial_povm(),
                                  QuantumChannel::identity())
              .passed);
}

TEST_CASE("measured-outcome marginals aggregate over labels") {
    Rng rng(65);
    std::vector<DensityMatrix> states{rng.random_state(2), rng.random_state(2)};
    const std::vector<double> p = rng.random_simplex(2);
    const CqEnsemble ens(ProbabilityVector(p), states);
    const Povm m = rng.random_povm(2, 2);
    const Povm n = rng.random_povm(2, 2);
    const QuantumChannel u = QuantumChannel::unitary(rng.haar_unitary(2));

    const JointDistribution3 joint = sequential_distribution(ens, m, n, u);
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) {
            double from_parts = 0.0;
            for (std::size_t i = 0; i < 2; ++i) {
                const CqEnsemble single(ProbabilityVector({1.0}), {states[i]});
                from_parts += p[i] * sequential_distribution(single, m, n, u)(0, j, k);
            }
            double total = 0.0;
            for (std::size_t i = 0; i < 2; ++i) total += joint(i, j, k);
            CHECK(total == doctest::Approx(from_parts).epsilon(1e-10));
        }
}

TEST_CASE("randomized sequential-information suite passes") {
    const SuiteResult res = run_holevo_suite(150, 66);
    CHECK(res.passed());
}
