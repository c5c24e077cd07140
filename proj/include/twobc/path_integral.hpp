#pragma once

#include "twobc/core_model.hpp"
#include "twobc/two_time_bvp.hpp"

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace twobc
{
    /// Discretization of the potential term over one time step.
    enum class PotentialScheme
    {
        /// (a_j^2 + a_{j+1}^2) / 4
        Trapezoid,
        /// ((a_j + a_{j+1}) / 2)^2 / 2. Its step coupling is 1/delta + delta omega^2 / 4,
        /// so under the standard slicing measure |Z| carries an extra factor
        /// (1 + delta^2 omega^2 / 4)^{-(N+1)/2} and converges at first order.
        Midpoint,
    };

    const char* to_string(PotentialScheme scheme);

    /// Time-sliced action of one cavity mode amplitude with unit mass,
    ///   S = sum_{j=0}^{N} [ (a_{j+1} - a_j)^2 / (2 delta) - delta omega^2 V_j ],
    /// with a_0 = alpha and a_{N+1} = beta held fixed.
    struct LatticeActionSpec
    {
        Mode mode;
        int n_slices = 1;
        double delta = 1.0;
        double alpha = 0.0;
        double beta = 0.0;
        PotentialScheme scheme = PotentialScheme::Trapezoid;
        double hbar = 1.0;

        /// delta = delta_t / (n_slices + 1).
        static LatticeActionSpec make(const Mode& mode, double delta_t, int n_slices, double alpha, double beta,
                                      PotentialScheme scheme = PotentialScheme::Trapezoid, double hbar = 1.0);

        double delta_t() const { return delta * static_cast<double>(n_slices + 1); }
    };

    /// Throws std::invalid_argument when the spec breaks its invariants.
    void validate(const LatticeActionSpec& spec);

    /// S(x) = 1/2 x^T M x + b^T x + s0 over the interior values x, with M
    /// symmetric tridiagonal.
    struct QuadraticForm
    {
        std::vector<double> diagonal;
        std::vector<double> off_diagonal;
        std::vector<double> linear;
        double constant = 0.0;

        double evaluate(std::span<const double> x) const;
    };

    QuadraticForm quadratic_form(const LatticeActionSpec& spec);

    /// Contribution of the step between amplitudes u (earlier) and v (later).
    double step_action(const LatticeActionSpec& spec, double u, double v);

    /// Throws ShapeError unless interior.size() == n_slices.
    double lattice_action(const LatticeActionSpec& spec, std::span<const double> interior);

    struct JointProbabilityOptions
    {
        /// |eigenvalue| <= singularity * max(max |eigenvalue|, 2 / delta) counts as zero.
        double singularity = 1e-9;
        /// Null-space component of b within compatibility * |b| counts as zero.
        double compatibility = 1e-9;
    };

    /// Result of the time-sliced Gaussian integral of exp(i S / hbar).
    ///
    /// The slicing measure is prod (2 pi i hbar delta)^{-1/2} per step, which
    /// gives the free propagator (2 pi i hbar dt)^{-1/2} for omega = 0. For a
    /// singular kernel with a compatible linear term, `magnitude` is the
    /// coefficient of the delta function concentrated on the compatible
    /// surface; for an incompatible term the integral vanishes and both
    /// `magnitude` and `relative_weight` are 0.
    struct JointProbability
    {
        double magnitude = 0.0;
        double log_magnitude = 0.0;
        /// In (-pi, pi].
        double phase = 0.0;
        std::optional<double> classical_action;
        int kernel_rank_deficiency = 0;
        double compatibility_residual = 0.0;
        /// 1 when a stationary configuration exists, 0 when none does.
        double relative_weight = 1.0;

        int positive_eigenvalues = 0;
        int negative_eigenvalues = 0;
        double min_abs_eigenvalue = 0.0;
        double max_abs_eigenvalue = 0.0;
        /// Some eigenvalue lies within a factor of 10 of the singularity threshold.
        bool singularity_ambiguous = false;

        double probability() const { return magnitude * magnitude; }
        std::complex<double> value() const { return std::polar(magnitude, phase); }
    };

    JointProbability joint_probability_exact(const LatticeActionSpec& spec, const JointProbabilityOptions& opts = {});

    /// Free-field product over independent modes: magnitudes multiply, phases
    /// and actions add, rank deficiencies add.
    JointProbability combine_modes(std::span<const JointProbability> modes);

    struct FieldJointProbability
    {
        std::vector<JointProbability> per_mode;
        JointProbability total;
    };

    /// Per-mode evaluation of a cavity field between two boundary slices.
    FieldJointProbability field_joint_probability(const FieldParams& params, double length, double delta_t,
                                                  const BoundarySlice& initial, const BoundarySlice& final,
                                                  int n_slices, PotentialScheme scheme = PotentialScheme::Trapezoid,
                                                  const JointProbabilityOptions& opts = {});

    struct StationaryPhaseReport
    {
        bool stationary_point_exists = false;
        /// Dimension of the stationary family (kernel rank deficiency).
        int family_dimension = 0;
        std::optional<double> classical_action;
        /// Stationary interior values (minimum-norm member of a family).
        std::vector<double> stationary_path;
        /// |Z|^2 at these endpoints over |Z|^2 with endpoints on the
        /// classical shell.
        double weight_ratio = 0.0;
    };

    StationaryPhaseReport stationary_phase_report(const LatticeActionSpec& spec,
                                                  const JointProbabilityOptions& opts = {});

    /// Two-time separation at which the lattice kernel of (omega, n_slices)
    /// is exactly singular in its n_t-th eigenvalue, 1 <= n_t <= n_slices.
    double discrete_resonant_delta_t(double omega, int n_slices, int n_t, PotentialScheme scheme);

    /// Copy of `mode` whose frequency is renormalized so the lattice with step
    /// `delta` advances the classical phase by exactly omega * delta per step.
    /// The lattice kernel is then singular exactly where sin(omega dt) = 0.
    Mode lattice_matched_mode(const Mode& mode, double delta, PotentialScheme scheme);

    struct BruteForceOptions
    {
        /// 0.2 * 2^{-k/2}, k = 0..5.
        static std::vector<double> default_epsilons();

        /// Regulator strengths, largest first; extrapolated to zero. The
        /// default is geometric with ratio 1/sqrt(2) and suits kernels whose
        /// smallest |eigenvalue| is of order one (in units of hbar).
        std::vector<double> epsilons = default_epsilons();
        /// Box half-width X satisfies epsilon X^2 = box_decay.
        double box_decay = 14.0;
        double points_per_wavelength = 3.0;
        /// Largest change allowed between the last two extrapolants, in
        /// log-magnitude and in phase.
        double tolerance = 1e-3;
    };

    struct BruteForceResult
    {
        double magnitude = 0.0;
        double phase = 0.0;
        double log_magnitude_change = 0.0;
        double phase_change = 0.0;
        std::vector<double> epsilons;
        /// Normalized integral at each regulator strength.
        std::vector<std::complex<double>> regulated;
        std::size_t max_nodes = 0;
    };

    /// Direct nested quadrature of exp(i S / hbar - epsilon |x|^2) over a box,
    /// extrapolated epsilon -> 0. Only n_slices <= 3 is accepted. Throws
    /// ConvergenceError when the extrapolants disagree beyond the tolerance.
    BruteForceResult joint_probability_bruteforce(const LatticeActionSpec& spec, const BruteForceOptions& opts = {});
} // namespace twobc
