#include "twobc/quantization.hpp"

#include "twobc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace twobc
{
    namespace
    {
        // The constraint divided by L^2:  n_t^2 -/+ ratio_sq n_x^2 - mass_term
        // with ratio_sq = (c dt / L)^2 and mass_term = (m c^2 dt / pi hbar)^2.
        struct Reduced
        {
            double ratio_sq;
            double mass_term;
            double norm;
        };

        Reduced reduce(const FieldParams& params, double length, double delta_t)
        {
            const double ratio = params.speed_of_light() * delta_t / length;
            const double m = params.compton_angular_frequency() * delta_t / pi;
            const double mass_term = m * m;
            return Reduced{ratio * ratio, mass_term, std::max(1.0, mass_term)};
        }

        double reduced_residual(const Reduced& r, int n_x, int n_t, ConstraintForm form)
        {
            const double nt2 = static_cast<double>(n_t) * n_t;
            const double nx2 = r.ratio_sq * static_cast<double>(n_x) * n_x;
            const double lhs = (form == ConstraintForm::DispersionConsistent) ? nt2 - nx2 : nt2 + nx2;
            return std::abs(lhs - r.mass_term) / r.norm;
        }

        void check_inputs(double length, double delta_t, double tolerance)
        {
            if (!(length > 0.0) || !std::isfinite(length))
                throw std::invalid_argument("length must be finite and > 0");
            if (!(delta_t > 0.0) || !std::isfinite(delta_t))
                throw std::invalid_argument("delta_t must be finite and > 0");
            if (!(tolerance > 0.0) || !std::isfinite(tolerance))
                throw std::invalid_argument("tolerance must be finite and > 0");
        }

        // Integers n >= 1 with n^2 in [lo, hi], padded by one on each side;
        // callers re-check every candidate against the residual.
        std::pair<long long, long long> square_root_window(double lo, double hi)
        {
            const auto first = static_cast<long long>(std::floor(std::sqrt(std::max(lo, 0.0)))) - 1;
            const auto last = static_cast<long long>(std::ceil(std::sqrt(std::max(hi, 0.0)))) + 1;
            return {std::max(1LL, first), last};
        }
    } // namespace

    const char* to_string(ConstraintForm form)
    {
        return form == ConstraintForm::DispersionConsistent ? "dispersion" : "paper";
    }

    std::vector<double> quantized_frequencies(double delta_t, int n_max)
    {
        if (!(delta_t > 0.0))
            throw std::invalid_argument("delta_t must be > 0");
        if (n_max < 1)
            throw std::invalid_argument("n_max must be >= 1");
        std::vector<double> out(static_cast<std::size_t>(n_max));
        for (int n = 1; n <= n_max; ++n)
            out[static_cast<std::size_t>(n - 1)] = static_cast<double>(n) * pi / delta_t;
        return out;
    }

    std::optional<double> compton_bound(const FieldParams& params, int n_t)
    {
        if (n_t < 1)
            throw std::invalid_argument("n_t must be >= 1");
        const double rest = params.compton_angular_frequency();
        if (rest == 0.0)
            return std::nullopt;
        return static_cast<double>(n_t) * pi / rest;
    }

    double constraint_residual(const FieldParams& params, double length, double delta_t, int n_x, int n_t,
                               ConstraintForm form)
    {
        return reduced_residual(reduce(params, length, delta_t), n_x, n_t, form);
    }

    std::vector<AdmissiblePair> find_admissible_pairs(const FieldParams& params, double length, double delta_t,
                                                      double tolerance, ConstraintForm form,
                                                      const PairSearchOptions& options)
    {
        check_inputs(length, delta_t, tolerance);
        const Reduced r = reduce(params, length, delta_t);
        const double slack = tolerance * r.norm;

        long long nx_max = options.max_n_x;
        if (form == ConstraintForm::PaperLiteral)
        {
            // n_t >= 1 forces ratio_sq n_x^2 <= mass_term + slack - 1.
            const double room = r.mass_term + slack - 1.0;
            if (room < 0.0)
                return {};
            nx_max = static_cast<long long>(std::floor(std::sqrt(room / r.ratio_sq))) + 1;
        }

        std::vector<AdmissiblePair> out;
        std::size_t examined = 0;
        for (long long nx = 1; nx <= nx_max; ++nx)
        {
            const double nx2 = r.ratio_sq * static_cast<double>(nx) * static_cast<double>(nx);
            const double centre = (form == ConstraintForm::DispersionConsistent) ? r.mass_term + nx2
                                                                                 : r.mass_term - nx2;
            if (centre + slack < 1.0 && form == ConstraintForm::PaperLiteral)
                continue;
            const auto [first, last] = square_root_window(centre - slack, centre + slack);
            examined += static_cast<std::size_t>(last - first + 1);
            if (examined > options.max_candidates)
                throw ResolutionError("pair search exceeded " + std::to_string(options.max_candidates)
                                      + " candidates; tighten the tolerance or lower max_n_x");
            for (long long nt = first; nt <= last; ++nt)
            {
                const double res = reduced_residual(r, static_cast<int>(nx), static_cast<int>(nt), form);
                if (res <= tolerance)
                    out.push_back(AdmissiblePair{static_cast<int>(nx), static_cast<int>(nt), res});
            }
        }
        return out;
    }

    DtScanReport scan_delta_t(const FieldParams& params, double length, double dt_min, double dt_max,
                              std::size_t steps, double tolerance, ConstraintForm form,
                              const PairSearchOptions& options)
    {
        if (!(dt_min > 0.0) || !(dt_min < dt_max))
            throw std::invalid_argument("scan window needs 0 < dt_min < dt_max");
        if (steps < 2)
            throw std::invalid_argument("scan needs at least 2 steps");

        DtScanReport report;
        report.tolerance = tolerance;
        report.delta_t_values.resize(steps);
        report.solution_counts.resize(steps);
        const double span = dt_max - dt_min;
        std::size_t hits = 0;
        for (std::size_t i = 0; i < steps; ++i)
        {
            const double dt = (i + 1 == steps)
                                  ? dt_max
                                  : dt_min + span * static_cast<double>(i) / static_cast<double>(steps - 1);
            report.delta_t_values[i] = dt;
            report.solution_counts[i] = find_admissible_pairs(params, length, dt, tolerance, form, options).size();
            if (report.solution_counts[i] > 0)
                ++hits;
        }
        report.admissible_fraction = static_cast<double>(hits) / static_cast<double>(steps);
        return report;
    }
} // namespace twobc
