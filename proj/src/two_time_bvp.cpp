#include "twobc/two_time_bvp.hpp"

#include "twobc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace twobc
{
    namespace
    {
        // sin(n pi i / (N + 1)), the sampled sine basis on interior node i.
        double basis(std::size_t n, std::size_t i, std::size_t n_space)
        {
            return std::sin(pi * static_cast<double>(n * i) / static_cast<double>(n_space + 1));
        }
    } // namespace

    void validate(const BoundarySlice& slice)
    {
        if (slice.coefficients.empty())
            throw std::invalid_argument("boundary slice has no modes");
        for (double c : slice.coefficients)
            if (!std::isfinite(c))
                throw std::invalid_argument("boundary slice has a non-finite coefficient");
    }

    const char* to_string(ModeClass c)
    {
        switch (c)
        {
        case ModeClass::Unique:
            return "unique";
        case ModeClass::Degenerate:
            return "degenerate";
        case ModeClass::Infeasible:
            return "infeasible";
        }
        return "?";
    }

    double ModeBvpSolution::amplitude(double t) const
    {
        const double phase = mode.frequency * t;
        return coeff_cos * std::cos(phase) + coeff_sin * std::sin(phase);
    }

    BoundarySlice decompose_profile(std::span<const double> samples, const CavityGrid& grid, std::size_t n_modes)
    {
        const std::size_t n = grid.n_space();
        if (samples.size() != n)
            throw ShapeError("profile has " + std::to_string(samples.size()) + " samples, grid has "
                             + std::to_string(n) + " interior points");
        if (n_modes == 0)
            throw std::invalid_argument("n_modes must be >= 1");
        if (n_modes > n)
            throw ResolutionError("cannot resolve " + std::to_string(n_modes) + " modes on "
                                  + std::to_string(n) + " interior points");

        BoundarySlice out;
        out.coefficients.resize(n_modes);
        const double scale = 2.0 / static_cast<double>(n + 1);
        for (std::size_t m = 1; m <= n_modes; ++m)
        {
            double acc = 0.0;
            for (std::size_t i = 1; i <= n; ++i)
                acc += samples[i - 1] * basis(m, i, n);
            out.coefficients[m - 1] = scale * acc;
        }
        return out;
    }

    std::vector<double> synthesize_profile(const BoundarySlice& slice, const CavityGrid& grid)
    {
        const std::size_t n = grid.n_space();
        std::vector<double> out(n, 0.0);
        for (std::size_t i = 1; i <= n; ++i)
        {
            double acc = 0.0;
            for (std::size_t m = 1; m <= slice.n_modes(); ++m)
                acc += slice.coefficients[m - 1] * basis(m, i, n);
            out[i - 1] = acc;
        }
        return out;
    }

    ModeBvpSolution solve_mode_bvp(const Mode& mode, double alpha, double beta, double delta_t,
                                   const BvpTolerances& tol)
    {
        if (!(mode.frequency >= 0.0))
            throw std::invalid_argument("mode frequency must be >= 0");
        if (!(delta_t > 0.0))
            throw std::invalid_argument("delta_t must be > 0");

        ModeBvpSolution sol;
        sol.mode = mode;
        sol.coeff_cos = alpha;

        const double phase = mode.frequency * delta_t;
        const double s = std::sin(phase);
        const double c = std::cos(phase);
        if (std::abs(s) > tol.resonance)
        {
            sol.classification = ModeClass::Unique;
            sol.coeff_sin = (beta - alpha * c) / s;
            return sol;
        }

        // omega dt sits on n_t pi: a(t_f) = (-1)^n_t alpha whatever B is.
        const int n_t = static_cast<int>(std::lround(phase / pi));
        const double expected = (n_t % 2 == 0) ? alpha : -alpha;
        sol.resonance_index = n_t;
        sol.mismatch = std::abs(beta - expected);
        sol.coeff_sin = 0.0;
        if (sol.mismatch <= tol.compatibility)
        {
            sol.classification = ModeClass::Degenerate;
            sol.free_parameter = true;
        }
        else
        {
            sol.classification = ModeClass::Infeasible;
        }
        return sol;
    }

    double stencil_frequency(const FieldParams& params, const CavityGrid& grid, int n_x)
    {
        if (n_x < 1)
            throw std::invalid_argument("mode index n_x must be >= 1");
        const double h = grid.space_step();
        const double dt = grid.time_step();
        const double c = params.speed_of_light();
        const double mu = params.compton_angular_frequency();
        const double half = std::sin(static_cast<double>(n_x) * pi * h / (2.0 * grid.length()));
        const double omega_sq = c * c * 4.0 * half * half / (h * h) + mu * mu;
        const double cos_theta = 1.0 - 0.5 * dt * dt * omega_sq;
        if (cos_theta <= -1.0)
            throw ResolutionError("time step too coarse for stencil frequency of mode " + std::to_string(n_x));
        return std::acos(cos_theta) / dt;
    }

    FieldSolution solve_field_bvp(const FieldParams& params, const CavityGrid& grid, const BoundarySlice& initial,
                                  const BoundarySlice& final, const BvpTolerances& tol, FrequencyModel model)
    {
        if (initial.n_modes() != final.n_modes())
            throw ShapeError("initial slice has " + std::to_string(initial.n_modes()) + " modes, final has "
                             + std::to_string(final.n_modes()));
        validate(initial);
        validate(final);

        const std::size_t n_modes = initial.n_modes();
        FieldSolution out{FieldGrid(grid), {}, true, 0.0};
        out.mode_solutions.reserve(n_modes);

        for (std::size_t j = 0; j < n_modes; ++j)
        {
            const int n_x = static_cast<int>(j + 1);
            Mode mode = make_mode(params, grid, n_x);
            if (model == FrequencyModel::DiscreteStencil)
                mode.frequency = stencil_frequency(params, grid, n_x);
            auto sol = solve_mode_bvp(mode, initial.coefficients[j], final.coefficients[j], grid.delta_t(), tol);
            if (sol.classification == ModeClass::Infeasible)
                out.feasible = false;
            out.mode_solutions.push_back(sol);
        }

        // Infeasible modes still contribute their A cos representative so the
        // t0 row matches the data; the report carries the mismatch.
        const std::size_t rows = grid.n_time() + 2;
        const std::size_t cols = grid.n_space() + 2;
        std::vector<double> values(rows * cols, 0.0);
        std::vector<double> shape(cols, 0.0);
        for (const auto& sol : out.mode_solutions)
        {
            const auto n = static_cast<std::size_t>(sol.mode.n_x);
            for (std::size_t i = 1; i + 1 < cols; ++i)
                shape[i] = basis(n, i, grid.n_space());
            for (std::size_t r = 0; r < rows; ++r)
            {
                const double a = sol.amplitude(grid.t(r));
                double* row = values.data() + r * cols;
                for (std::size_t i = 1; i + 1 < cols; ++i)
                    row[i] += a * shape[i];
            }
        }
        out.field = FieldGrid(grid, std::move(values));
        out.kge_residual_max = kge_residual(out.field, params);
        return out;
    }

    double kge_residual(const FieldGrid& field, const FieldParams& params)
    {
        if (field.rows() < 3 || field.cols() < 3)
            throw ShapeError("kge_residual needs at least one interior sample in each direction");
        const double dt = field.grid().time_step();
        const double h = field.grid().space_step();
        const double c2 = params.speed_of_light() * params.speed_of_light();
        const double mu = params.compton_angular_frequency();
        const double mu2 = mu * mu;

        double worst = 0.0;
        for (std::size_t j = 1; j + 1 < field.rows(); ++j)
        {
            for (std::size_t i = 1; i + 1 < field.cols(); ++i)
            {
                const double phi = field(j, i);
                const double tt = (field(j + 1, i) - 2.0 * phi + field(j - 1, i)) / (dt * dt);
                const double xx = (field(j, i + 1) - 2.0 * phi + field(j, i - 1)) / (h * h);
                worst = std::max(worst, std::abs(tt - c2 * xx + mu2 * phi));
            }
        }
        return worst;
    }
} // namespace twobc
