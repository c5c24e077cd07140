#pragma once

#include "twobc/core_model.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace twobc
{
    /// Which reading of the joint (n_x, n_t) integer constraint to test.
    enum class ConstraintForm
    {
        /// n_t^2 L^2 - n_x^2 c^2 dt^2 = (m c^2 / pi hbar)^2 L^2 dt^2, the
        /// result of substituting k = n_x pi / L and omega = n_t pi / dt into
        /// the dispersion relation.
        DispersionConsistent,
        /// The same relation with a "+" joining the n_t^2 and n_x^2 terms.
        PaperLiteral,
    };

    const char* to_string(ConstraintForm form);

    struct AdmissiblePair
    {
        int n_x;
        int n_t;
        /// Normalized constraint violation, see constraint_residual.
        double residual;
    };

    struct PairSearchOptions
    {
        /// Largest spatial index tried for the DispersionConsistent form. That
        /// form is a hyperbola in (n_x, n_t) and has no finite bound of its
        /// own; the PaperLiteral form is an ellipse and is bounded exactly.
        int max_n_x = 1000;
        /// Hard cap on the number of (n_x, n_t) candidates examined.
        std::size_t max_candidates = 1'000'000;
    };

    struct DtScanReport
    {
        std::vector<double> delta_t_values;
        std::vector<std::size_t> solution_counts;
        double admissible_fraction = 0.0;
        double tolerance = 0.0;
    };

    /// n pi / dt for n = 1..n_max.
    std::vector<double> quantized_frequencies(double delta_t, int n_max);

    /// n_t pi hbar / (m c^2), the largest dt for which the n_t-th quantized
    /// frequency stays at or above the rest frequency. Empty when m = 0 (no
    /// bound). Throws std::invalid_argument for n_t < 1.
    std::optional<double> compton_bound(const FieldParams& params, int n_t);

    /// |n_t^2 L^2 -/+ n_x^2 c^2 dt^2 - (m c^2/pi hbar)^2 L^2 dt^2|
    ///   / (L^2 max(1, (m c^2 dt / pi hbar)^2)).
    double constraint_residual(const FieldParams& params, double length, double delta_t, int n_x, int n_t,
                               ConstraintForm form);

    /// Every pair with n_x, n_t >= 1 whose constraint_residual is within
    /// `tolerance`, sorted by (n_x, n_t). For each n_x the admissible n_t
    /// interval is solved for directly, so the search is exhaustive up to the
    /// n_x bound. Throws ResolutionError when the candidate cap is exceeded.
    std::vector<AdmissiblePair> find_admissible_pairs(const FieldParams& params, double length, double delta_t,
                                                      double tolerance,
                                                      ConstraintForm form = ConstraintForm::DispersionConsistent,
                                                      const PairSearchOptions& options = {});

    /// find_admissible_pairs at `steps` uniformly spaced dt in [dt_min, dt_max].
    DtScanReport scan_delta_t(const FieldParams& params, double length, double dt_min, double dt_max,
                              std::size_t steps, double tolerance,
                              ConstraintForm form = ConstraintForm::DispersionConsistent,
                              const PairSearchOptions& options = {});
} // namespace twobc
