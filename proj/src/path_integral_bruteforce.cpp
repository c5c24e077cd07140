#include "twobc/errors.hpp"
#include "twobc/path_integral.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>
#include <stdexcept>

namespace twobc
{
    namespace
    {
        constexpr unsigned panel_order = 20;

        struct Rule
        {
            std::vector<double> nodes;
            std::vector<double> weights;
        };

        // Composite Gauss-Legendre on [-half_width, half_width].
        Rule composite_rule(double half_width, std::size_t panels)
        {
            using gauss = boost::math::quadrature::gauss<double, panel_order>;
            const auto& abscissa = gauss::abscissa();
            const auto& weight = gauss::weights();

            // Expand the symmetric half-rule into the full reference rule.
            std::vector<double> ref_x;
            std::vector<double> ref_w;
            for (std::size_t k = abscissa.size(); k-- > 0;)
            {
                if (abscissa[k] == 0.0)
                    continue;
                ref_x.push_back(-abscissa[k]);
                ref_w.push_back(weight[k]);
            }
            for (std::size_t k = 0; k < abscissa.size(); ++k)
            {
                ref_x.push_back(abscissa[k]);
                ref_w.push_back(weight[k]);
            }

            Rule rule;
            rule.nodes.reserve(panels * ref_x.size());
            rule.weights.reserve(panels * ref_x.size());
            const double width = 2.0 * half_width / static_cast<double>(panels);
            for (std::size_t p = 0; p < panels; ++p)
            {
                const double centre = -half_width + (static_cast<double>(p) + 0.5) * width;
                for (std::size_t k = 0; k < ref_x.size(); ++k)
                {
                    rule.nodes.push_back(centre + 0.5 * width * ref_x[k]);
                    rule.weights.push_back(0.5 * width * ref_w[k]);
                }
            }
            return rule;
        }

        std::complex<double> phase_factor(double action, double hbar)
        {
            const double arg = action / hbar;
            return {std::cos(arg), std::sin(arg)};
        }

        // Integral of exp(i S / hbar - eps |x|^2) over the box, evaluated as
        // nested 1D sums along the chain of time slices.
        std::complex<double> regulated_integral(const LatticeActionSpec& spec, double eps, const BruteForceOptions& opts,
                                                std::size_t& nodes_used)
        {
            const double half_width = std::sqrt(opts.box_decay / eps);
            const double w2 = spec.mode.frequency * spec.mode.frequency;
            const double ends = std::abs(spec.alpha) + std::abs(spec.beta);
            const double k_max =
                ((4.0 * half_width + ends) / spec.delta + 2.0 * spec.delta * w2 * half_width) / spec.hbar;
            const double wavelengths = 2.0 * half_width * k_max / (2.0 * pi);
            const auto panels = static_cast<std::size_t>(
                std::ceil(wavelengths * opts.points_per_wavelength / static_cast<double>(panel_order)));
            const Rule rule = composite_rule(half_width, std::max<std::size_t>(panels, 4));
            const std::size_t n = rule.nodes.size();
            nodes_used = n;

            std::vector<double> damp(n);
            for (std::size_t k = 0; k < n; ++k)
                damp[k] = rule.weights[k] * std::exp(-eps * rule.nodes[k] * rule.nodes[k]);

            std::vector<std::complex<double>> f(n);
            for (std::size_t k = 0; k < n; ++k)
                f[k] = damp[k] * phase_factor(step_action(spec, spec.alpha, rule.nodes[k]), spec.hbar);

            std::vector<std::complex<double>> g(n);
            for (int slice = 1; slice < spec.n_slices; ++slice)
            {
                for (std::size_t m = 0; m < n; ++m)
                {
                    std::complex<double> acc = 0.0;
                    const double y = rule.nodes[m];
                    for (std::size_t k = 0; k < n; ++k)
                        acc += f[k] * phase_factor(step_action(spec, rule.nodes[k], y), spec.hbar);
                    g[m] = damp[m] * acc;
                }
                f.swap(g);
            }

            std::complex<double> total = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                total += f[k] * phase_factor(step_action(spec, rule.nodes[k], spec.beta), spec.hbar);
            return total;
        }

        // Polynomial through (x_i, y_i) evaluated at zero, by Neville's scheme.
        double neville_at_zero(std::span<const double> x, std::span<const double> y)
        {
            std::vector<double> p(y.begin(), y.end());
            const std::size_t n = x.size();
            for (std::size_t j = 1; j < n; ++j)
                for (std::size_t i = n - 1; i >= j; --i)
                    p[i] = (x[i] * p[i - 1] - x[i - j] * p[i]) / (x[i] - x[i - j]);
            return p[n - 1];
        }

        // Extrapolant from every level, and from all but the weakest regulator.
        std::pair<double, double> extrapolate_to_zero(const std::vector<double>& x, const std::vector<double>& y)
        {
            const std::span<const double> xs(x);
            const std::span<const double> ys(y);
            return {neville_at_zero(xs, ys), neville_at_zero(xs.first(x.size() - 1), ys.first(y.size() - 1))};
        }
    } // namespace

    std::vector<double> BruteForceOptions::default_epsilons()
    {
        std::vector<double> eps(6);
        for (std::size_t k = 0; k < eps.size(); ++k)
            eps[k] = 0.2 * std::pow(2.0, -0.5 * static_cast<double>(k));
        return eps;
    }

    BruteForceResult joint_probability_bruteforce(const LatticeActionSpec& spec, const BruteForceOptions& opts)
    {
        validate(spec);
        if (spec.n_slices > 3)
            throw std::invalid_argument("brute-force quadrature is limited to n_slices <= 3 (cost grows as nodes^"
                                        + std::to_string(spec.n_slices - 1) + " per slice)");
        if (opts.epsilons.size() < 2)
            throw std::invalid_argument("brute-force extrapolation needs at least two regulator values");
        for (std::size_t i = 0; i < opts.epsilons.size(); ++i)
        {
            if (!(opts.epsilons[i] > 0.0))
                throw std::invalid_argument("regulator values must be > 0");
            if (i > 0 && !(opts.epsilons[i] < opts.epsilons[i - 1]))
                throw std::invalid_argument("regulator values must be strictly decreasing");
        }

        const int n = spec.n_slices;
        const double two_pi_hbar_delta = 2.0 * pi * spec.hbar * spec.delta;
        // Slicing measure (2 pi i hbar delta)^{-(N+1)/2}.
        const double log_norm = -0.5 * static_cast<double>(n + 1) * std::log(two_pi_hbar_delta);
        const double arg_norm = -0.25 * pi * static_cast<double>(n + 1);

        BruteForceResult out;
        out.epsilons = opts.epsilons;
        std::vector<double> log_mag;
        std::vector<double> phase;
        for (double eps : opts.epsilons)
        {
            std::size_t nodes = 0;
            const std::complex<double> raw = regulated_integral(spec, eps, opts, nodes);
            out.max_nodes = std::max(out.max_nodes, nodes);
            if (!(std::abs(raw) > 0.0) || !std::isfinite(std::abs(raw)))
                throw ConvergenceError("regulated integral vanished or overflowed at epsilon = " + std::to_string(eps));
            out.regulated.push_back(std::polar(std::exp(std::log(std::abs(raw)) + log_norm), std::arg(raw) + arg_norm));
            log_mag.push_back(std::log(std::abs(raw)));
            double ph = std::arg(raw);
            if (!phase.empty())
                ph = phase.back() + std::remainder(ph - phase.back(), 2.0 * pi);
            phase.push_back(ph);
        }

        const auto [mag_best, mag_prev] = extrapolate_to_zero(opts.epsilons, log_mag);
        const auto [ph_best, ph_prev] = extrapolate_to_zero(opts.epsilons, phase);
        out.log_magnitude_change = std::abs(mag_best - mag_prev);
        out.phase_change = std::abs(ph_best - ph_prev);
        out.magnitude = std::exp(mag_best + log_norm);
        double wrapped = std::remainder(ph_best + arg_norm, 2.0 * pi);
        if (wrapped <= -pi)
            wrapped += 2.0 * pi;
        out.phase = wrapped;

        if (out.log_magnitude_change > opts.tolerance || out.phase_change > opts.tolerance)
        {
            std::ostringstream msg;
            msg << "epsilon extrapolation did not settle: |d log magnitude| = " << out.log_magnitude_change
                << ", |d phase| = " << out.phase_change << " (tolerance " << opts.tolerance << ")";
            throw ConvergenceError(msg.str());
        }
        return out;
    }
} // namespace twobc
