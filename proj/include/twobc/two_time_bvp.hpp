#pragma once

#include "twobc/core_model.hpp"

#include <optional>
#include <span>
#include <vector>

namespace twobc
{
    /// Sine-series coefficients of a spatial profile on the cavity:
    /// f(x) = sum_j coefficients[j] * sin((j + 1) pi x / L).
    struct BoundarySlice
    {
        std::vector<double> coefficients;

        std::size_t n_modes() const { return coefficients.size(); }
    };

    /// Throws std::invalid_argument on an empty or non-finite coefficient list.
    void validate(const BoundarySlice& slice);

    enum class ModeClass
    {
        Unique,
        Degenerate,
        Infeasible,
    };

    const char* to_string(ModeClass c);

    struct BvpTolerances
    {
        /// Unique iff |sin(omega dt)| exceeds this.
        double resonance = 1e-9;
        /// Degenerate iff |beta - (-1)^n_t alpha| is within this.
        double compatibility = 1e-9;
    };

    /// Two-time solution of one mode amplitude,
    /// a(t) = A cos(omega (t - t0)) + B sin(omega (t - t0)).
    struct ModeBvpSolution
    {
        Mode mode;
        ModeClass classification = ModeClass::Unique;
        double coeff_cos = 0.0;
        double coeff_sin = 0.0;
        /// Set for Degenerate: B is unconstrained and held at 0.
        bool free_parameter = false;
        /// |beta - (-1)^n_t alpha|; zero for Unique.
        double mismatch = 0.0;
        /// n_t with omega dt ~ n_t pi, for non-Unique modes.
        std::optional<int> resonance_index;

        double amplitude(double t) const;
    };

    /// Which frequency enters the per-mode solve.
    enum class FrequencyModel
    {
        /// omega from the continuum dispersion relation.
        Continuum,
        /// omega from the second-order space/time stencil, so the synthesized
        /// grid solves the discrete equation exactly.
        DiscreteStencil,
    };

    struct FieldSolution
    {
        FieldGrid field;
        std::vector<ModeBvpSolution> mode_solutions;
        bool feasible = true;
        double kge_residual_max = 0.0;
    };

    /// Discrete sine transform of interior samples (x_i = i h, i = 1..n_space).
    /// Throws ShapeError on a length mismatch and ResolutionError when
    /// n_modes > n_space.
    BoundarySlice decompose_profile(std::span<const double> samples, const CavityGrid& grid, std::size_t n_modes);

    /// Inverse of decompose_profile on the interior samples.
    std::vector<double> synthesize_profile(const BoundarySlice& slice, const CavityGrid& grid);

    ModeBvpSolution solve_mode_bvp(const Mode& mode, double alpha, double beta, double delta_t,
                                   const BvpTolerances& tol = {});

    /// Frequency of mode n_x seen by the stencil used in kge_residual.
    /// Throws ResolutionError when the time step cannot resolve it
    /// (time_step * Omega >= 2).
    double stencil_frequency(const FieldParams& params, const CavityGrid& grid, int n_x);

    /// Throws ShapeError when the slices carry different mode counts.
    FieldSolution solve_field_bvp(const FieldParams& params, const CavityGrid& grid, const BoundarySlice& initial,
                                  const BoundarySlice& final, const BvpTolerances& tol = {},
                                  FrequencyModel model = FrequencyModel::Continuum);

    /// max |d_tt phi - c^2 d_xx phi + (m c^2/hbar)^2 phi| over interior
    /// samples, central second differences.
    double kge_residual(const FieldGrid& field, const FieldParams& params);
} // namespace twobc
