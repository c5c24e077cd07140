#include "twobc/path_integral.hpp"

#include "twobc/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace twobc
{
    namespace
    {
        double wrap_phase(double phase)
        {
            double w = std::remainder(phase, 2.0 * pi);
            if (w <= -pi)
                w += 2.0 * pi;
            return w;
        }

        // Spectral picture of the quadratic form shared by the exact
        // evaluation and the stationary-phase report.
        struct Spectrum
        {
            QuadraticForm form;
            Eigen::VectorXd eigenvalues;
            Eigen::MatrixXd eigenvectors;
            Eigen::VectorXd projections; // v_k^T b
            std::vector<bool> null;
            int rank_deficiency = 0;
            int positive = 0;
            int negative = 0;
            double min_abs = 0.0;
            double max_abs = 0.0;
            bool ambiguous = false;
            double null_residual = 0.0;
            bool compatible = true;
        };

        Spectrum analyze(const LatticeActionSpec& spec, const JointProbabilityOptions& opts)
        {
            validate(spec);
            Spectrum sp;
            sp.form = quadratic_form(spec);
            const auto n = static_cast<Eigen::Index>(spec.n_slices);

            Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(sp.form.diagonal.data(), n);
            Eigen::VectorXd sub(std::max<Eigen::Index>(n - 1, 0));
            for (Eigen::Index k = 0; k + 1 < n; ++k)
                sub[k] = sp.form.off_diagonal[static_cast<std::size_t>(k)];

            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
            solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
            if (solver.info() != Eigen::Success)
                throw ConvergenceError("tridiagonal eigensolver did not converge");
            sp.eigenvalues = solver.eigenvalues();
            sp.eigenvectors = solver.eigenvectors();

            const Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(sp.form.linear.data(), n);
            sp.projections = sp.eigenvectors.transpose() * b;

            sp.max_abs = sp.eigenvalues.cwiseAbs().maxCoeff();
            sp.min_abs = sp.eigenvalues.cwiseAbs().minCoeff();
            // With one slice the largest eigenvalue is also the one that may
            // vanish, so the kinetic diagonal 2/delta sets the floor of the scale.
            const double threshold = opts.singularity * std::max(sp.max_abs, 2.0 / spec.delta);
            sp.null.assign(static_cast<std::size_t>(n), false);
            double null_sq = 0.0;
            for (Eigen::Index k = 0; k < n; ++k)
            {
                const double lambda = sp.eigenvalues[k];
                const double mag = std::abs(lambda);
                if (mag > threshold / 10.0 && mag <= threshold * 10.0)
                    sp.ambiguous = true;
                if (mag <= threshold)
                {
                    sp.null[static_cast<std::size_t>(k)] = true;
                    ++sp.rank_deficiency;
                    null_sq += sp.projections[k] * sp.projections[k];
                }
                else if (lambda > 0.0)
                {
                    ++sp.positive;
                }
                else
                {
                    ++sp.negative;
                }
            }
            sp.null_residual = std::sqrt(null_sq);
            sp.compatible = sp.null_residual <= opts.compatibility * b.norm();
            return sp;
        }

        double stationary_action(const Spectrum& sp)
        {
            double quad = 0.0;
            for (Eigen::Index k = 0; k < sp.eigenvalues.size(); ++k)
                if (!sp.null[static_cast<std::size_t>(k)])
                    quad += sp.projections[k] * sp.projections[k] / sp.eigenvalues[k];
            return sp.form.constant - 0.5 * quad;
        }
    } // namespace

    const char* to_string(PotentialScheme scheme)
    {
        return scheme == PotentialScheme::Trapezoid ? "trapezoid" : "midpoint";
    }

    LatticeActionSpec LatticeActionSpec::make(const Mode& mode, double delta_t, int n_slices, double alpha,
                                              double beta, PotentialScheme scheme, double hbar)
    {
        if (n_slices < 1)
            throw std::invalid_argument("n_slices must be >= 1");
        if (!(delta_t > 0.0))
            throw std::invalid_argument("delta_t must be > 0");
        LatticeActionSpec spec;
        spec.mode = mode;
        spec.n_slices = n_slices;
        spec.delta = delta_t / static_cast<double>(n_slices + 1);
        spec.alpha = alpha;
        spec.beta = beta;
        spec.scheme = scheme;
        spec.hbar = hbar;
        return spec;
    }

    void validate(const LatticeActionSpec& spec)
    {
        if (spec.n_slices < 1)
            throw std::invalid_argument("n_slices must be >= 1");
        if (!(spec.delta > 0.0) || !std::isfinite(spec.delta))
            throw std::invalid_argument("time step must be finite and > 0");
        if (!(spec.hbar > 0.0))
            throw std::invalid_argument("hbar must be > 0");
        if (!(spec.mode.frequency >= 0.0) || !std::isfinite(spec.mode.frequency))
            throw std::invalid_argument("mode frequency must be finite and >= 0");
        if (!std::isfinite(spec.alpha) || !std::isfinite(spec.beta))
            throw std::invalid_argument("endpoints must be finite");
    }

    double QuadraticForm::evaluate(std::span<const double> x) const
    {
        if (x.size() != diagonal.size())
            throw ShapeError("quadratic form expects " + std::to_string(diagonal.size()) + " values");
        double quad = 0.0;
        double lin = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            quad += diagonal[i] * x[i] * x[i];
            if (i + 1 < x.size())
                quad += 2.0 * off_diagonal[i] * x[i] * x[i + 1];
            lin += linear[i] * x[i];
        }
        return 0.5 * quad + lin + constant;
    }

    QuadraticForm quadratic_form(const LatticeActionSpec& spec)
    {
        validate(spec);
        const auto n = static_cast<std::size_t>(spec.n_slices);
        const double d = spec.delta;
        const double w2 = spec.mode.frequency * spec.mode.frequency;

        double diag = 0.0;
        double off = 0.0;
        double pot_end = 0.0; // potential weight of a fixed endpoint squared
        if (spec.scheme == PotentialScheme::Trapezoid)
        {
            diag = 2.0 / d - d * w2;
            off = -1.0 / d;
            pot_end = d * w2 / 4.0;
        }
        else
        {
            diag = 2.0 / d - d * w2 / 2.0;
            off = -1.0 / d - d * w2 / 4.0;
            pot_end = d * w2 / 8.0;
        }

        QuadraticForm q;
        q.diagonal.assign(n, diag);
        q.off_diagonal.assign(n - 1, off);
        q.linear.assign(n, 0.0);
        // Endpoints couple to their neighbours through the same off-diagonal
        // weight as interior pairs.
        q.linear.front() += off * spec.alpha;
        q.linear.back() += off * spec.beta;
        const double ends = spec.alpha * spec.alpha + spec.beta * spec.beta;
        q.constant = ends / (2.0 * d) - pot_end * ends;
        return q;
    }

    double step_action(const LatticeActionSpec& spec, double u, double v)
    {
        const double d = spec.delta;
        const double w2 = spec.mode.frequency * spec.mode.frequency;
        const double diff = v - u;
        double potential = 0.0;
        if (spec.scheme == PotentialScheme::Trapezoid)
        {
            potential = (u * u + v * v) / 4.0;
        }
        else
        {
            const double mid = 0.5 * (u + v);
            potential = 0.5 * mid * mid;
        }
        return diff * diff / (2.0 * d) - d * w2 * potential;
    }

    double lattice_action(const LatticeActionSpec& spec, std::span<const double> interior)
    {
        validate(spec);
        if (interior.size() != static_cast<std::size_t>(spec.n_slices))
            throw ShapeError("lattice_action expects " + std::to_string(spec.n_slices) + " interior values, got "
                             + std::to_string(interior.size()));
        double s = 0.0;
        double prev = spec.alpha;
        for (double a : interior)
        {
            s += step_action(spec, prev, a);
            prev = a;
        }
        s += step_action(spec, prev, spec.beta);
        return s;
    }

    JointProbability joint_probability_exact(const LatticeActionSpec& spec, const JointProbabilityOptions& opts)
    {
        const Spectrum sp = analyze(spec, opts);
        const int n = spec.n_slices;
        const int r = sp.rank_deficiency;
        const double two_pi_hbar = 2.0 * pi * spec.hbar;

        JointProbability out;
        out.kernel_rank_deficiency = r;
        out.compatibility_residual = (r > 0) ? sp.null_residual : 0.0;
        out.positive_eigenvalues = sp.positive;
        out.negative_eigenvalues = sp.negative;
        out.min_abs_eigenvalue = sp.min_abs;
        out.max_abs_eigenvalue = sp.max_abs;
        out.singularity_ambiguous = sp.ambiguous;

        if (r > 0 && !sp.compatible)
        {
            out.magnitude = 0.0;
            out.log_magnitude = -std::numeric_limits<double>::infinity();
            out.phase = 0.0;
            out.relative_weight = 0.0;
            return out;
        }

        double log_det = 0.0;
        for (Eigen::Index k = 0; k < sp.eigenvalues.size(); ++k)
            if (!sp.null[static_cast<std::size_t>(k)])
                log_det += std::log(std::abs(sp.eigenvalues[k]));

        // |C_N| (2 pi hbar)^{(N - r)/2} |det' M|^{-1/2}, times (2 pi hbar)^r
        // from each null direction's delta function.
        const double log_mag = -0.5 * static_cast<double>(n + 1) * std::log(two_pi_hbar * spec.delta)
                               + 0.5 * static_cast<double>(n - r) * std::log(two_pi_hbar)
                               + static_cast<double>(r) * std::log(two_pi_hbar) - 0.5 * log_det;

        const double action = stationary_action(sp);
        out.classical_action = action;
        out.log_magnitude = log_mag;
        out.magnitude = std::exp(log_mag);
        out.phase = wrap_phase(-0.25 * pi * static_cast<double>(n + 1)
                               + 0.25 * pi * static_cast<double>(sp.positive - sp.negative) + action / spec.hbar);
        out.relative_weight = 1.0;
        return out;
    }

    JointProbability combine_modes(std::span<const JointProbability> modes)
    {
        if (modes.empty())
            throw std::invalid_argument("combine_modes needs at least one mode");
        JointProbability out;
        out.log_magnitude = 0.0;
        out.phase = 0.0;
        out.relative_weight = 1.0;
        out.min_abs_eigenvalue = std::numeric_limits<double>::infinity();
        double action = 0.0;
        bool have_action = true;
        double residual_sq = 0.0;
        for (const auto& m : modes)
        {
            out.log_magnitude += m.log_magnitude;
            out.phase += m.phase;
            out.relative_weight *= m.relative_weight;
            out.kernel_rank_deficiency += m.kernel_rank_deficiency;
            residual_sq += m.compatibility_residual * m.compatibility_residual;
            out.positive_eigenvalues += m.positive_eigenvalues;
            out.negative_eigenvalues += m.negative_eigenvalues;
            out.min_abs_eigenvalue = std::min(out.min_abs_eigenvalue, m.min_abs_eigenvalue);
            out.max_abs_eigenvalue = std::max(out.max_abs_eigenvalue, m.max_abs_eigenvalue);
            out.singularity_ambiguous = out.singularity_ambiguous || m.singularity_ambiguous;
            if (m.classical_action)
                action += *m.classical_action;
            else
                have_action = false;
        }
        out.compatibility_residual = std::sqrt(residual_sq);
        if (out.relative_weight == 0.0)
        {
            out.magnitude = 0.0;
            out.log_magnitude = -std::numeric_limits<double>::infinity();
            out.phase = 0.0;
        }
        else
        {
            out.magnitude = std::exp(out.log_magnitude);
            out.phase = wrap_phase(out.phase);
        }
        if (have_action)
            out.classical_action = action;
        return out;
    }

    FieldJointProbability field_joint_probability(const FieldParams& params, double length, double delta_t,
                                                  const BoundarySlice& initial, const BoundarySlice& final,
                                                  int n_slices, PotentialScheme scheme,
                                                  const JointProbabilityOptions& opts)
    {
        if (initial.n_modes() != final.n_modes())
            throw ShapeError("initial slice has " + std::to_string(initial.n_modes()) + " modes, final has "
                             + std::to_string(final.n_modes()));
        validate(initial);
        validate(final);
        FieldJointProbability out;
        out.per_mode.reserve(initial.n_modes());
        for (std::size_t j = 0; j < initial.n_modes(); ++j)
        {
            const Mode mode = make_mode(params, length, static_cast<int>(j + 1));
            const auto spec = LatticeActionSpec::make(mode, delta_t, n_slices, initial.coefficients[j],
                                                      final.coefficients[j], scheme, params.hbar());
            out.per_mode.push_back(joint_probability_exact(spec, opts));
        }
        out.total = combine_modes(out.per_mode);
        return out;
    }

    StationaryPhaseReport stationary_phase_report(const LatticeActionSpec& spec, const JointProbabilityOptions& opts)
    {
        const Spectrum sp = analyze(spec, opts);
        StationaryPhaseReport out;
        out.family_dimension = sp.rank_deficiency;
        if (sp.rank_deficiency > 0 && !sp.compatible)
        {
            out.stationary_point_exists = false;
            out.weight_ratio = 0.0;
            return out;
        }
        out.stationary_point_exists = true;
        out.classical_action = stationary_action(sp);
        Eigen::VectorXd x = Eigen::VectorXd::Zero(sp.eigenvalues.size());
        for (Eigen::Index k = 0; k < sp.eigenvalues.size(); ++k)
            if (!sp.null[static_cast<std::size_t>(k)])
                x -= sp.eigenvectors.col(k) * (sp.projections[k] / sp.eigenvalues[k]);
        out.stationary_path.assign(x.data(), x.data() + x.size());
        // A quadratic action's |Z| does not depend on the endpoints once a
        // stationary configuration exists.
        out.weight_ratio = 1.0;
        return out;
    }

    double discrete_resonant_delta_t(double omega, int n_slices, int n_t, PotentialScheme scheme)
    {
        if (!(omega > 0.0))
            throw std::invalid_argument("omega must be > 0");
        if (n_slices < 1 || n_t < 1 || n_t > n_slices)
            throw std::invalid_argument("need 1 <= n_t <= n_slices");
        const double half = 0.5 * pi * static_cast<double>(n_t) / static_cast<double>(n_slices + 1);
        const double delta = (scheme == PotentialScheme::Trapezoid) ? 2.0 * std::sin(half) / omega
                                                                    : 2.0 * std::tan(half) / omega;
        return delta * static_cast<double>(n_slices + 1);
    }

    Mode lattice_matched_mode(const Mode& mode, double delta, PotentialScheme scheme)
    {
        if (!(delta > 0.0))
            throw std::invalid_argument("delta must be > 0");
        const double half = 0.5 * mode.frequency * delta;
        Mode out = mode;
        if (scheme == PotentialScheme::Trapezoid)
        {
            out.frequency = 2.0 * std::sin(half) / delta;
        }
        else
        {
            if (half >= 0.5 * pi)
                throw ResolutionError("time step too coarse to match mode frequency (omega delta >= pi)");
            out.frequency = 2.0 * std::tan(half) / delta;
        }
        return out;
    }
} // namespace twobc
