#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "twobc/errors.hpp"
#include "twobc/path_integral.hpp"

#include <cmath>

using namespace twobc;
using doctest::Approx;

namespace
{
    LatticeActionSpec spec_of(double omega, double dt, int n, double a, double b)
    {
        return LatticeActionSpec::make(Mode{1, 0.0, omega}, dt, n, a, b);
    }
} // namespace

TEST_CASE("one-slice free particle against the exact Gaussian")
{
    const auto s = spec_of(0.0, 1.4, 1, 0.2, -0.3);
    const auto bf = joint_probability_bruteforce(s);
    const auto ex = joint_probability_exact(s);
    CHECK(std::abs(bf.magnitude / ex.magnitude - 1.0) < 1e-4);
    CHECK(oracle::angle_distance(bf.phase, ex.phase) < 1e-4);

    // And the 1D Fresnel integral behind it: int e^{i a x^2 / 2} dx = sqrt(2 pi / |a|) e^{i pi/4 sign a}.
    const double a = 2.0 / s.delta;
    const double fresnel = std::sqrt(2.0 * oracle::pi / a);
    const double norm = 1.0 / (2.0 * oracle::pi * s.delta);
    CHECK(ex.magnitude == Approx(norm * fresnel).epsilon(1e-12));
}

TEST_CASE("two-slice harmonic case")
{
    const auto s = spec_of(1.1, 1.9, 2, 0.4, 0.1);
    const auto bf = joint_probability_bruteforce(s);
    const auto ex = joint_probability_exact(s);
    CHECK(std::abs(bf.magnitude / ex.magnitude - 1.0) < 1e-3);
    CHECK(oracle::angle_distance(bf.phase, ex.phase) < 1e-3);
    CHECK(bf.epsilons.size() == bf.regulated.size());
    CHECK(bf.max_nodes > 0);
}

TEST_CASE("near-singular kernel: magnitude follows the inverse square root of the eigenvalue")
{
    // Trapezoid, N = 1, delta = 1: M = 2 - omega^2. Antisymmetric endpoints
    // give b = 0, so the regulated integral is a pure Fresnel factor in eps / lambda.
    BruteForceOptions opts;
    opts.epsilons.clear();
    for (int k = 0; k < 6; ++k)
        opts.epsilons.push_back(1e-4 * std::pow(2.0, -0.5 * k));
    std::vector<double> lams, mags;
    for (double lam : {1e-3, 4e-3})
    {
        const auto s = spec_of(std::sqrt(2.0 - lam), 2.0, 1, 0.3, -0.3);
        const auto ex = joint_probability_exact(s);
        REQUIRE(ex.min_abs_eigenvalue == Approx(lam).epsilon(1e-6));
        const auto bf = joint_probability_bruteforce(s, opts);
        CHECK(std::abs(bf.magnitude / ex.magnitude - 1.0) < 0.05);
        lams.push_back(lam);
        mags.push_back(bf.magnitude);
    }
    CHECK(oracle::loglog_slope(lams, mags) == Approx(-0.5).epsilon(0.05));
}

TEST_CASE("brute force refuses large lattices and reports non-convergence")
{
    CHECK_THROWS_AS(joint_probability_bruteforce(spec_of(1.0, 1.0, 4, 0.0, 0.0)), std::invalid_argument);
    BruteForceOptions unordered;
    unordered.epsilons = {0.1, 0.2};
    CHECK_THROWS_AS(joint_probability_bruteforce(spec_of(1.0, 1.0, 1, 0.0, 0.0), unordered), std::invalid_argument);
    // Default regulators are far too strong for an eigenvalue of 1e-3.
    CHECK_THROWS_AS(joint_probability_bruteforce(spec_of(std::sqrt(2.0 - 1e-3), 2.0, 1, 0.3, 0.2)),
                    ConvergenceError);
}
