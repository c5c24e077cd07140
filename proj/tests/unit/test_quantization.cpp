#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "twobc/errors.hpp"
#include "twobc/quantization.hpp"

#include <algorithm>
#include <cmath>

using namespace twobc;
using doctest::Approx;

namespace
{
    std::vector<oracle::Pair> as_pairs(const std::vector<AdmissiblePair>& v)
    {
        std::vector<oracle::Pair> out;
        for (const auto& p : v)
            out.push_back({p.n_x, p.n_t});
        return out;
    }
} // namespace

TEST_CASE("quantized temporal frequencies")
{
    const auto a = quantized_frequencies(oracle::pi, 3);
    REQUIRE(a.size() == 3);
    CHECK(a[0] == Approx(1.0));
    CHECK(a[1] == Approx(2.0));
    CHECK(a[2] == Approx(3.0));
    CHECK(quantized_frequencies(1.0, 1).at(0) == Approx(oracle::pi));
    const auto b = quantized_frequencies(2.0, 4);
    CHECK(b[3] == Approx(2.0 * oracle::pi));
    CHECK(std::is_sorted(b.begin(), b.end()));
    CHECK_THROWS_AS(quantized_frequencies(0.0, 1), std::invalid_argument);
}

TEST_CASE("Compton bound examples")
{
    CHECK(*compton_bound(FieldParams(oracle::pi), 1) == Approx(1.0));
    CHECK(*compton_bound(FieldParams(oracle::pi), 7) == Approx(7.0));
    CHECK(!compton_bound(FieldParams(0.0), 3).has_value());
    const double electron = *compton_bound(FieldParams::from_si_mass(9.109e-31), 1);
    CHECK(electron == Approx(4.05e-21).epsilon(0.01));
    CHECK(electron < 1e-20);
    CHECK(electron > 1e-22);
}

TEST_CASE("pair search matches exhaustive enumeration on known cases")
{
    const auto one = find_admissible_pairs(FieldParams(3.0 * oracle::pi), 1.0, 1.0, 1e-9);
    CHECK(as_pairs(one) == std::vector<oracle::Pair>{{4, 5}});
    CHECK(as_pairs(one) == oracle::enumerate_pairs(3.0 * oracle::pi, 1.0, 1.0, 1e-9, -1));

    const auto lit = find_admissible_pairs(FieldParams(5.0 * oracle::pi), 1.0, 1.0, 1e-9, ConstraintForm::PaperLiteral);
    CHECK(as_pairs(lit) == std::vector<oracle::Pair>{{3, 4}, {4, 3}});
    CHECK(as_pairs(lit) == oracle::enumerate_pairs(5.0 * oracle::pi, 1.0, 1.0, 1e-9, +1));
}

TEST_CASE("massless cavity with L = c dt admits exactly the diagonal")
{
    PairSearchOptions opts;
    opts.max_n_x = 60;
    const auto pairs = find_admissible_pairs(FieldParams(0.0), 1.0, 1.0, 1e-9, ConstraintForm::DispersionConsistent, opts);
    REQUIRE(pairs.size() == 60);
    for (std::size_t i = 0; i < pairs.size(); ++i)
    {
        CHECK(pairs[i].n_x == static_cast<int>(i + 1));
        CHECK(pairs[i].n_t == pairs[i].n_x);
    }
}

TEST_CASE("pair search agrees with enumeration on random inputs")
{
    auto g = oracle::rng(31);
    for (int trial = 0; trial < 60; ++trial)
    {
        // Integer-friendly inputs so exact hits occur.
        const double mu = oracle::pi * std::floor(oracle::uniform(g, 0.0, 12.0));
        const double length = std::floor(oracle::uniform(g, 1.0, 4.0));
        const double dt = std::floor(oracle::uniform(g, 1.0, 4.0)) * (trial % 2 ? 1.0 : 0.5);
        const double tol = std::pow(10.0, oracle::uniform(g, -9.0, -2.0));
        for (int sign : {-1, +1})
        {
            const auto form = sign < 0 ? ConstraintForm::DispersionConsistent : ConstraintForm::PaperLiteral;
            PairSearchOptions opts;
            opts.max_n_x = 100;
            auto got = as_pairs(find_admissible_pairs(FieldParams(mu), length, dt, tol, form, opts));
            std::erase_if(got, [](const oracle::Pair& p) { return p.n_t > 100; });
            CHECK(got == oracle::enumerate_pairs(mu, length, dt, tol, sign));
        }
    }
}

TEST_CASE("every returned pair satisfies its residual bound")
{
    auto g = oracle::rng(32);
    for (int trial = 0; trial < 100; ++trial)
    {
        const FieldParams p(oracle::uniform(g, 0.0, 30.0));
        const double length = oracle::uniform(g, 0.5, 3.0), dt = oracle::uniform(g, 0.5, 3.0);
        const double tol = 1e-2;
        for (auto form : {ConstraintForm::DispersionConsistent, ConstraintForm::PaperLiteral})
            for (const auto& pair : find_admissible_pairs(p, length, dt, tol, form))
            {
                CHECK(pair.residual <= tol);
                CHECK(pair.residual == constraint_residual(p, length, dt, pair.n_x, pair.n_t, form));
                const double r = dt / length, m2 = std::pow(p.mass() * dt / oracle::pi, 2);
                const double sign = form == ConstraintForm::PaperLiteral ? 1.0 : -1.0;
                const double raw = double(pair.n_t) * pair.n_t + sign * r * r * pair.n_x * pair.n_x - m2;
                CHECK(std::abs(raw) / std::max(1.0, m2) == Approx(pair.residual).epsilon(1e-9).scale(1e-12));
            }
    }
}

TEST_CASE("admissible sets grow monotonically with tolerance")
{
    auto g = oracle::rng(33);
    for (int trial = 0; trial < 40; ++trial)
    {
        const FieldParams p(oracle::uniform(g, 0.0, 20.0));
        const double length = oracle::uniform(g, 0.5, 2.0), dt = oracle::uniform(g, 0.5, 2.0);
        const auto small = as_pairs(find_admissible_pairs(p, length, dt, 1e-4));
        const auto large = as_pairs(find_admissible_pairs(p, length, dt, 1e-2));
        for (const auto& s : small)
            CHECK(std::find(large.begin(), large.end(), s) != large.end());
    }
}

TEST_CASE("search rejects bad inputs and caps pathological ones")
{
    CHECK_THROWS_AS(find_admissible_pairs(FieldParams(1.0), 0.0, 1.0, 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(find_admissible_pairs(FieldParams(1.0), 1.0, 1.0, 0.0), std::invalid_argument);
    PairSearchOptions tiny;
    tiny.max_candidates = 10;
    CHECK_THROWS_AS(find_admissible_pairs(FieldParams(0.0), 1.0, 1.0, 0.5, ConstraintForm::DispersionConsistent, tiny),
                    ResolutionError);
}

TEST_CASE("delta_t scan shape and fraction")
{
    const auto two = scan_delta_t(FieldParams(3.0 * oracle::pi), 1.0, 0.9, 1.1, 2, 1e-9);
    CHECK(two.delta_t_values.size() == 2);
    CHECK(two.delta_t_values.front() == 0.9);
    CHECK(two.delta_t_values.back() == 1.1);
    CHECK_THROWS_AS(scan_delta_t(FieldParams(1.0), 1.0, 1.0, 1.0, 5, 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(scan_delta_t(FieldParams(1.0), 1.0, 0.5, 1.0, 1, 1e-9), std::invalid_argument);

    const auto scan = scan_delta_t(FieldParams(3.0 * oracle::pi), 1.0, 0.9, 1.1, 1001, 1e-6);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < scan.solution_counts.size(); ++i)
    {
        const auto direct = find_admissible_pairs(FieldParams(3.0 * oracle::pi), 1.0, scan.delta_t_values[i], 1e-6);
        CHECK(direct.size() == scan.solution_counts[i]);
        hits += scan.solution_counts[i] > 0;
    }
    CHECK(scan.admissible_fraction == Approx(double(hits) / 1001.0));
    CHECK(scan.tolerance == 1e-6);
}

TEST_CASE("massless scan hits only commensurate delta_t")
{
    const auto scan = scan_delta_t(FieldParams(0.0), 1.0, 0.5, 1.5, 101, 1e-12);
    for (std::size_t i = 0; i < scan.delta_t_values.size(); ++i)
    {
        const double dt = scan.delta_t_values[i];
        if (scan.solution_counts[i] > 0)
        {
            // n_t = n_x dt needs dt rational with denominator below max_n_x.
            bool rational = false;
            for (int q = 1; q <= 1000 && !rational; ++q)
                rational = std::abs(dt * q - std::round(dt * q)) < 1e-9;
            CHECK(rational);
        }
    }
    CHECK(scan.solution_counts[50] > 0); // dt = 1
}
