#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "twobc/errors.hpp"
#include "twobc/two_time_bvp.hpp"

#include <cmath>

using namespace twobc;
using doctest::Approx;

namespace
{
    Mode bare_mode(double omega) { return Mode{1, 0.0, omega}; }

    double max_abs_diff(std::span<const double> a, std::span<const double> b)
    {
        double m = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            m = std::max(m, std::abs(a[i] - b[i]));
        return m;
    }
} // namespace

TEST_CASE("sine decomposition of basis functions and mixtures")
{
    const CavityGrid grid(2.0, 1.0, 31, 2);
    std::vector<double> s(31), zero(31, 0.0), mix(31);
    for (std::size_t i = 0; i < 31; ++i)
    {
        const double x = grid.x(i + 1);
        s[i] = std::sin(oracle::pi * x / 2.0);
        mix[i] = 0.3 * std::sin(2.0 * oracle::pi * x / 2.0) - 0.7 * std::sin(5.0 * oracle::pi * x / 2.0);
    }
    const auto c1 = decompose_profile(s, grid, 8);
    CHECK(c1.coefficients[0] == Approx(1.0).epsilon(1e-12));
    for (std::size_t j = 1; j < 8; ++j)
        CHECK(std::abs(c1.coefficients[j]) < 1e-10);
    for (double c : decompose_profile(zero, grid, 8).coefficients)
        CHECK(c == 0.0);

    const auto cm = decompose_profile(mix, grid, 10);
    const auto f = [](double x) { return 0.3 * std::sin(oracle::pi * x) - 0.7 * std::sin(2.5 * oracle::pi * x); };
    for (int n = 1; n <= 10; ++n)
    {
        const double reference = oracle::sine_projection(f, 2.0, n);
        CHECK(std::abs(cm.coefficients[n - 1] - reference) < 1e-10);
    }
    CHECK(cm.coefficients[1] == Approx(0.3).epsilon(1e-12));
    CHECK(cm.coefficients[4] == Approx(-0.7).epsilon(1e-12));
}

TEST_CASE("decompose then synthesize reproduces samples at full resolution")
{
    const CavityGrid grid(1.3, 1.0, 17, 2);
    auto g = oracle::rng(21);
    std::vector<double> s(17);
    for (auto& v : s)
        v = oracle::uniform(g, -2.0, 2.0);
    const auto back = synthesize_profile(decompose_profile(s, grid, 17), grid);
    CHECK(max_abs_diff(s, back) < 1e-10);
    CHECK_THROWS_AS(decompose_profile(s, grid, 18), ResolutionError);
    CHECK_THROWS_AS(decompose_profile(std::vector<double>(16), grid, 4), ShapeError);
}

TEST_CASE("mode solutions: documented examples")
{
    const auto z = solve_mode_bvp(bare_mode(1.0), 0.0, 0.0, oracle::pi / 2);
    CHECK(z.classification == ModeClass::Unique);
    CHECK(z.coeff_cos == 0.0);
    CHECK(z.coeff_sin == 0.0);

    const auto d = solve_mode_bvp(bare_mode(1.0), 1.0, -1.0, oracle::pi);
    CHECK(d.classification == ModeClass::Degenerate);
    CHECK(d.free_parameter);
    CHECK(d.coeff_cos == 1.0);
    CHECK(d.coeff_sin == 0.0);
    CHECK(d.resonance_index == 1);

    const auto inf = solve_mode_bvp(bare_mode(1.0), 1.0, 1.0, oracle::pi);
    CHECK(inf.classification == ModeClass::Infeasible);
    CHECK(inf.mismatch == Approx(2.0));
    CHECK(!inf.free_parameter);

    const auto u = solve_mode_bvp(bare_mode(2.0), 1.0, 0.0, oracle::pi / 4);
    CHECK(u.classification == ModeClass::Unique);
    CHECK(u.coeff_cos == 1.0);
    CHECK(std::abs(u.coeff_sin) < 1e-15);
    CHECK(std::abs(u.amplitude(oracle::pi / 4)) < 1e-15);
    for (double t : {0.1, 0.4, 0.7})
        CHECK(u.amplitude(t) == Approx(std::cos(2.0 * t)).epsilon(1e-14));
}

TEST_CASE("unique solutions reproduce both endpoints and match the closed form")
{
    auto g = oracle::rng(22);
    for (int trial = 0; trial < 300; ++trial)
    {
        const double w = oracle::uniform(g, 0.1, 30.0), dt = oracle::uniform(g, 0.05, 3.0);
        const double a = oracle::uniform(g, -2.0, 2.0), b = oracle::uniform(g, -2.0, 2.0);
        if (std::abs(std::sin(w * dt)) < 1e-3)
            continue;
        const auto s = solve_mode_bvp(bare_mode(w), a, b, dt);
        REQUIRE(s.classification == ModeClass::Unique);
        CHECK(std::abs(s.amplitude(0.0) - a) <= 1e-10);
        CHECK(std::abs(s.amplitude(dt) - b) <= 1e-10);
        const double t = oracle::uniform(g, 0.0, dt);
        CHECK(std::abs(s.amplitude(t) - oracle::ho_path(w, dt, a, b, t)) <= 1e-9 * (1.0 + std::abs(a) + std::abs(b)));
    }
}

TEST_CASE("zero frequency is resonant at n_t = 0")
{
    const auto same = solve_mode_bvp(bare_mode(0.0), 0.5, 0.5, 1.0);
    CHECK(same.classification == ModeClass::Degenerate);
    CHECK(same.resonance_index == 0);
    CHECK(solve_mode_bvp(bare_mode(0.0), 0.5, 0.7, 1.0).classification == ModeClass::Infeasible);
}

TEST_CASE("field solve with zero boundaries gives a zero field")
{
    const CavityGrid grid(1.0, 1.0, 6, 5);
    const BoundarySlice zero{std::vector<double>(4, 0.0)};
    const auto sol = solve_field_bvp(FieldParams(1.0), grid, zero, zero);
    CHECK(sol.feasible);
    CHECK(sol.kge_residual_max == 0.0);
    for (double v : sol.field.values())
        CHECK(v == 0.0);
    CHECK(sol.mode_solutions.size() == 4);
}

TEST_CASE("single-mode field matches the sampled analytic solution")
{
    // omega = 2 for m = sqrt(4 - pi^2/L^2) with L = pi / sqrt(3): k = sqrt(3), m = 1.
    const double length = oracle::pi / std::sqrt(3.0);
    const FieldParams params(1.0);
    const double dt = oracle::pi / 4;
    const CavityGrid grid(length, dt, 20, 20);
    const BoundarySlice in{{1.0}}, out{{0.0}};
    const auto sol = solve_field_bvp(params, grid, in, out);
    CHECK(sol.feasible);
    const double k = std::sqrt(3.0);
    double err = 0.0;
    for (std::size_t j = 0; j < sol.field.rows(); ++j)
        for (std::size_t i = 0; i < sol.field.cols(); ++i)
            err = std::max(err, std::abs(sol.field(j, i) - std::cos(2.0 * grid.t(j)) * std::sin(k * grid.x(i))));
    CHECK(err < 1e-12);
    CHECK(sol.kge_residual_max > 0.0);
    CHECK(sol.kge_residual_max < 0.05);
}

TEST_CASE("infeasible modes are reported without aborting the solve")
{
    // Mode 1 massless on L = 1: omega = pi, dt = 1 is resonant with n_t = 1.
    const CavityGrid grid(1.0, 1.0, 8, 8);
    const BoundarySlice in{{1.0, 0.5}}, out{{1.0, 0.25}};
    const auto sol = solve_field_bvp(FieldParams(0.0), grid, in, out);
    CHECK(!sol.feasible);
    CHECK(sol.mode_solutions[0].classification == ModeClass::Infeasible);
    CHECK(sol.mode_solutions[0].mismatch == Approx(2.0));
    CHECK(sol.mode_solutions[1].classification != ModeClass::Unique);
    CHECK_THROWS_AS(solve_field_bvp(FieldParams(0.0), grid, BoundarySlice{{1.0}}, out), ShapeError);
}

TEST_CASE("kge residual of exact modes converges at second order")
{
    const FieldParams params(2.0);
    const double length = 1.0, k = oracle::pi;
    const double w = std::hypot(k, 2.0);
    std::vector<double> steps, res;
    for (int level = 0; level < 4; ++level)
    {
        const std::size_t n = (8u << level) - 1;
        const CavityGrid grid(length, 1.0, n, n);
        FieldGrid f(grid);
        for (std::size_t j = 0; j < f.rows(); ++j)
            for (std::size_t i = 1; i + 1 < f.cols(); ++i)
                f.set(j, i, std::cos(w * grid.t(j)) * std::sin(k * grid.x(i)));
        res.push_back(kge_residual(f, params));
        steps.push_back(grid.space_step());
    }
    CHECK(oracle::loglog_slope(steps, res) == Approx(2.0).epsilon(0.1));
    CHECK(kge_residual(FieldGrid(CavityGrid(1.0, 1.0, 3, 3)), params) == 0.0);
}

TEST_CASE("kge residual flags a noise field")
{
    const CavityGrid grid(1.0, 1.0, 5, 5);
    auto g = oracle::rng(23);
    FieldGrid f(grid);
    for (std::size_t j = 0; j < f.rows(); ++j)
        for (std::size_t i = 1; i + 1 < f.cols(); ++i)
            f.set(j, i, oracle::uniform(g, -1.0, 1.0));
    CHECK(kge_residual(f, FieldParams(1.0)) > 0.1);
}

TEST_CASE("field solutions are linear in the boundary data")
{
    const CavityGrid grid(1.0, 0.77, 9, 11);
    const FieldParams params(1.5);
    auto g = oracle::rng(24);
    auto random_slice = [&] {
        BoundarySlice s;
        for (int i = 0; i < 5; ++i)
            s.coefficients.push_back(oracle::uniform(g, -1.0, 1.0));
        return s;
    };
    const auto i1 = random_slice(), f1 = random_slice(), i2 = random_slice(), f2 = random_slice();
    const double c1 = 0.7, c2 = -1.3;
    BoundarySlice i3, f3;
    for (int i = 0; i < 5; ++i)
    {
        i3.coefficients.push_back(c1 * i1.coefficients[i] + c2 * i2.coefficients[i]);
        f3.coefficients.push_back(c1 * f1.coefficients[i] + c2 * f2.coefficients[i]);
    }
    const auto s1 = solve_field_bvp(params, grid, i1, f1);
    const auto s2 = solve_field_bvp(params, grid, i2, f2);
    const auto s3 = solve_field_bvp(params, grid, i3, f3);
    for (const auto* s : {&s1, &s2, &s3})
        for (const auto& m : s->mode_solutions)
            REQUIRE(m.classification == ModeClass::Unique);
    double err = 0.0;
    for (std::size_t n = 0; n < s3.field.values().size(); ++n)
        err = std::max(err, std::abs(s3.field.values()[n] - c1 * s1.field.values()[n] - c2 * s2.field.values()[n]));
    CHECK(err < 1e-9);
}

TEST_CASE("stencil frequency rejects unresolvable time steps")
{
    const CavityGrid coarse(1.0, 10.0, 20, 2);
    CHECK_THROWS_AS(stencil_frequency(FieldParams(0.0), coarse, 10), ResolutionError);
    const CavityGrid fine(1.0, 1.0, 50, 200);
    CHECK(stencil_frequency(FieldParams(0.0), fine, 1) == Approx(oracle::pi).epsilon(1e-3));
}
