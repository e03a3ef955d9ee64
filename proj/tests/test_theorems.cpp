#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pdmt/channel.hpp"
#include "pdmt/entropy.hpp"
#include "pdmt/pdm.hpp"
#include "pdmt/random.hpp"
#include "pdmt/suites.hpp"
#include "pdmt/theorems.hpp"

using namespace pdmt;

namespace {
DensityMatrix maximally_mixed() {
    return DensityMatrix(ComplexMatrix{{0.5, 0.0}, {0.0, 0.5}});
}

ComplexMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return ComplexMatrix{{s, s}, {s, -s}};
}
}  // namespace

TEST_CASE("unitary-evolution identity on reference inputs") {
    // Maximally mixed through the identity: one bit.
    const VerificationReport r1 = verify_theorem1(maximally_mixed(), QuantumChannel::identity());
    CHECK(r1.passed);
    CHECK(r1.max_deviation <= 1e-10);
    CHECK(mutual_information(star_product(QuantumChannel::identity(), maximally_mixed()), 1) ==
          doctest::Approx(1.0));

    // Pure state through Hadamard: zero.
    const DensityMatrix zero(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}});
    const QuantumChannel h = QuantumChannel::unitary(hadamard());
    CHECK(verify_theorem1(zero, h).passed);
    CHECK(mutual_information(star_product(h, zero), 1) == doctest::Approx(0.0).epsilon(1e-9));

    // diag(3/4, 1/4) through a random rotation: the binary entropy of 1/4.
    Rng rng(41);
    const DensityMatrix rho(ComplexMatrix{{0.75, 0.0}, {0.0, 0.25}});
    const QuantumChannel u = QuantumChannel::unitary(rng.haar_unitary(2));
    CHECK(verify_theorem1(rho, u).passed);
    CHECK(mutual_information(star_product(u, rho), 1) ==
          doctest::Approx(binary_entropy(0.25)).epsilon(1e-9));
}

TEST_CASE("unitary-evolution spectrum pairing on a known input") {
    // diag(3/4, 1/4) through identity: spectrum {3/4, 1/4} plus ±1/2.
    const DensityMatrix rho(ComplexMatrix{{0.75, 0.0}, {0.0, 0.25}});
    const Pdm r = star_product(QuantumChannel::identity(), rho);
    const auto eigs = hermitian_eig(r.op()).eigenvalues;
    CHECK(eigs[0] == doctest::Approx(0.75));
    CHECK(eigs[1] == doctest::Approx(0.5));
    CHECK(eigs[2] == doctest::Approx(0.25));
    CHECK(eigs[3] == doctest::Approx(-0.5));
}

TEST_CASE("non-unitary channels are rejected by the unitary-case checker") {
    CHECK_THROWS_AS(verify_theorem1(maximally_mixed(), QuantumChannel::depolarizing(0.5)),
                    std::invalid_argument);
}

TEST_CASE("unital-channel information window with known mixing weights") {
    // Spectrum of the two-slot operator is {1/2 - p_i} exactly.
    const Pdm r = star_product(QuantumChannel::pauli_channel(0.4, 0.3, 0.2, 0.1),
                               maximally_mixed());
    auto eigs = hermitian_eig(r.op()).eigenvalues;
    CHECK(eigs[0] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(eigs[1] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(eigs[2] == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(eigs[3] == doctest::Approx(0.1).epsilon(1e-12));

    CHECK(verify_theorem2(QuantumChannel::pauli_channel(0.4, 0.3, 0.2, 0.1)).passed);

    // Completely depolarizing: zero information.
    CHECK(mutual_information(star_product(QuantumChannel::depolarizing(0.0), maximally_mixed()),
                             1) == doctest::Approx(0.0).epsilon(1e-9));
    // Two vanishing weights: one full bit.
    CHECK(mutual_information(star_product(QuantumChannel::pauli_channel(0.5, 0.5, 0.0, 0.0),
                                          maximally_mixed()),
                             1) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("two-kraus channel closed forms") {
    constexpr double pi = std::numbers::pi;
    Rng rng(42);
    for (int t = 0; t < 30; ++t) {
        const double u = rng.uniform(0.0, 2.0 * pi);
        const double v = rng.uniform(0.0, pi);
        const QuantumChannel ch = QuantumChannel::rank2_channel(u, v);
        const Pdm r = star_product(ch, maximally_mixed());
        auto eigs = hermitian_eig(r.op()).eigenvalues;
        const double half_prod = std::cos(u) * std::cos(v) / 2.0;
        // Multiset {1/2, 1/2, ±cos(u)cos(v)/2} sorted descending.
        const double mx = std::max(0.5, std::abs(half_prod));
        CHECK(eigs[0] == doctest::Approx(mx).epsilon(1e-10));
        CHECK(eigs[3] == doctest::Approx(-std::abs(half_prod)).epsilon(1e-10));

        const double info = mutual_information(r, 1);
        CHECK(info == doctest::Approx(
                          binary_entropy((1.0 + std::sin(u) * std::sin(v)) / 2.0))
                          .epsilon(1e-8));
        CHECK(verify_theorem2(ch).passed);
    }
}

TEST_CASE("checker reports rather than throws on unsupported channels") {
    // Choi rank 3, non-unital: outside both supported branches.
    Rng rng(43);
    QuantumChannel ch = rng.random_channel(2, 2, 3);
    while (is_unital(ch) || choi_rank(ch) <= 2) ch = rng.random_channel(2, 2, 3);
    const VerificationReport rep = verify_theorem2(ch);
    CHECK_FALSE(rep.passed);
    CHECK(rep.detail.find("precondition") != std::string::npos);
}

TEST_CASE("mixing weights from distortion eigenvalues round-trip") {
    const std::vector<double> p = detail::pauli_weights_from_lambdas({0.4, 0.2, 0.0});
    CHECK(p[0] == doctest::Approx(0.4));
    CHECK(p[1] == doctest::Approx(0.3));
    CHECK(p[2] == doctest::Approx(0.2));
    CHECK(p[3] == doctest::Approx(0.1));
    const std::vector<double> id = detail::pauli_weights_from_lambdas({1.0, 1.0, 1.0});
    CHECK(id[0] == doctest::Approx(1.0));
    CHECK(id[1] == doctest::Approx(0.0));
}

TEST_CASE("randomized suites pass at moderate trial counts") {
    const SuiteResult t1 = run_theorem1_suite(100, 101);
    CHECK(t1.passed());
    CHECK(t1.max_deviation <= 1e-8);

    const SuiteResult t2 = run_theorem2_suite(100, 102);
    CHECK(t2.passed());
    CHECK(t2.min_value >= -1e-9);
    CHECK(t2.max_value <= 1.0 + 1e-9);

    const SuiteResult t3 = run_theorem3_suite(80, 103);
    CHECK(t3.passed());
    CHECK(t3.max_deviation <= 1e-8);
}
