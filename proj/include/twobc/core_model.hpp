#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace twobc
{
    inline constexpr double pi = std::numbers::pi;

    /// Physical constants of a scalar field with mass.
    ///
    /// The library works in natural units (c = hbar = 1); the two constants
    /// are stored explicitly so that every formula keeps its dimensional form
    /// and so callers can hold converted SI values side by side. `mass` is the
    /// mass parameter m; the associated Compton angular frequency is
    /// m c^2 / hbar.
    class FieldParams
    {
    public:
        /// Natural units, c = hbar = 1. Throws std::invalid_argument on a
        /// negative or non-finite mass.
        explicit FieldParams(double mass = 0.0, double speed_of_light = 1.0, double hbar = 1.0);

        /// SI mass in kilograms mapped onto natural units with the second as
        /// the time unit and the light-second as the length unit. The stored
        /// mass is then m c^2 / hbar in 1/s.
        static FieldParams from_si_mass(double mass_kg);

        double mass() const { return mass_; }
        double speed_of_light() const { return c_; }
        double hbar() const { return hbar_; }

        /// m c^2 / hbar.
        double compton_angular_frequency() const { return mass_ * c_ * c_ / hbar_; }

    private:
        double mass_;
        double c_;
        double hbar_;
    };

    /// CODATA 2018 values used by the SI input path.
    namespace si
    {
        inline constexpr double speed_of_light = 299792458.0;        // m/s, exact
        inline constexpr double hbar = 1.054571817e-34;              // J s
        inline constexpr double electron_mass = 9.1093837015e-31;    // kg

        /// Metres to light-seconds.
        inline constexpr double length_to_natural(double metres) { return metres / speed_of_light; }
    } // namespace si

    /// Box length, two-time separation and sample counts of a 1D cavity.
    ///
    /// `n_space` and `n_time` count interior samples; the walls x = 0, x = L
    /// and the boundary slices t0, t_f are added on top.
    class CavityGrid
    {
    public:
        CavityGrid(double length, double delta_t, std::size_t n_space, std::size_t n_time);

        double length() const { return length_; }
        double delta_t() const { return delta_t_; }
        std::size_t n_space() const { return n_space_; }
        std::size_t n_time() const { return n_time_; }

        double space_step() const { return length_ / static_cast<double>(n_space_ + 1); }
        double time_step() const { return delta_t_ / static_cast<double>(n_time_ + 1); }

        /// Position of column i, i in [0, n_space + 1].
        double x(std::size_t i) const;
        /// Time since t0 of row j, j in [0, n_time + 1]; the last row is
        /// exactly delta_t.
        double t(std::size_t j) const;

    private:
        double length_;
        double delta_t_;
        std::size_t n_space_;
        std::size_t n_time_;
    };

    /// One standing-wave mode sin(n_x pi x / L) of the cavity.
    struct Mode
    {
        int n_x;
        double wavenumber;
        double frequency;
    };

    /// omega(k) = sqrt(c^2 k^2 + m^2 c^4 / hbar^2).
    double dispersion(const FieldParams& params, double k);

    /// Throws std::invalid_argument for n_x < 1.
    Mode make_mode(const FieldParams& params, double length, int n_x);
    Mode make_mode(const FieldParams& params, const CavityGrid& grid, int n_x);

    /// Field samples phi(t_j, x_i) over the full grid, boundaries included.
    /// Row-major in time: row j holds every x sample at time t_j.
    class FieldGrid
    {
    public:
        /// Zero field.
        explicit FieldGrid(const CavityGrid& grid);
        /// Takes ownership of `values`; the wall columns are forced to zero.
        /// Throws ShapeError unless values.size() == rows() * cols().
        FieldGrid(const CavityGrid& grid, std::vector<double> values);

        const CavityGrid& grid() const { return grid_; }
        std::size_t rows() const { return grid_.n_time() + 2; }
        std::size_t cols() const { return grid_.n_space() + 2; }

        double operator()(std::size_t j, std::size_t i) const { return values_[j * cols() + i]; }
        /// Writes to a wall column are ignored.
        void set(std::size_t j, std::size_t i, double value);

        std::span<const double> row(std::size_t j) const;
        std::span<const double> values() const { return values_; }

        /// Same field with the time axis reversed (row j <-> row n_time+1-j).
        FieldGrid time_reversed() const;

    private:
        CavityGrid grid_;
        std::vector<double> values_;
    };

    /// Discrete T^{0x} at an interior sample, up to a positive constant:
    /// the product of the central time difference and the central space
    /// difference of phi. Throws std::out_of_range off the interior.
    double momentum_density(const FieldGrid& field, std::size_t j, std::size_t i);
} // namespace twobc
