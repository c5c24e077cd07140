#include "twobc/core_model.hpp"

#include "twobc/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace twobc
{
    FieldParams::FieldParams(double mass, double speed_of_light, double hbar)
        : mass_(mass), c_(speed_of_light), hbar_(hbar)
    {
        if (!std::isfinite(mass) || mass < 0.0)
            throw std::invalid_argument("mass must be finite and >= 0");
        if (!std::isfinite(speed_of_light) || speed_of_light <= 0.0)
            throw std::invalid_argument("speed_of_light must be finite and > 0");
        if (!std::isfinite(hbar) || hbar <= 0.0)
            throw std::invalid_argument("hbar must be finite and > 0");
        if (!std::isfinite(compton_angular_frequency()))
            throw std::invalid_argument("m c^2 / hbar overflows");
    }

    FieldParams FieldParams::from_si_mass(double mass_kg)
    {
        const double c = si::speed_of_light;
        return FieldParams(mass_kg * c * c / si::hbar);
    }

    CavityGrid::CavityGrid(double length, double delta_t, std::size_t n_space, std::size_t n_time)
        : length_(length), delta_t_(delta_t), n_space_(n_space), n_time_(n_time)
    {
        if (!std::isfinite(length) || length <= 0.0)
            throw std::invalid_argument("length must be finite and > 0");
        if (!std::isfinite(delta_t) || delta_t <= 0.0)
            throw std::invalid_argument("delta_t must be finite and > 0");
        if (n_space < 2)
            throw std::invalid_argument("n_space must be >= 2");
        if (n_time < 2)
            throw std::invalid_argument("n_time must be >= 2");
    }

    double CavityGrid::x(std::size_t i) const
    {
        if (i == n_space_ + 1)
            return length_;
        return length_ * static_cast<double>(i) / static_cast<double>(n_space_ + 1);
    }

    double CavityGrid::t(std::size_t j) const
    {
        if (j == n_time_ + 1)
            return delta_t_;
        return delta_t_ * static_cast<double>(j) / static_cast<double>(n_time_ + 1);
    }

    double dispersion(const FieldParams& params, double k)
    {
        return std::hypot(params.speed_of_light() * k, params.compton_angular_frequency());
    }

    Mode make_mode(const FieldParams& params, double length, int n_x)
    {
        if (n_x < 1)
            throw std::invalid_argument("mode index n_x must be >= 1, got " + std::to_string(n_x));
        if (!(length > 0.0))
            throw std::invalid_argument("length must be > 0");
        const double k = static_cast<double>(n_x) * pi / length;
        return Mode{n_x, k, dispersion(params, k)};
    }

    Mode make_mode(const FieldParams& params, const CavityGrid& grid, int n_x)
    {
        return make_mode(params, grid.length(), n_x);
    }

    FieldGrid::FieldGrid(const CavityGrid& grid)
        : grid_(grid), values_((grid.n_time() + 2) * (grid.n_space() + 2), 0.0)
    {
    }

    FieldGrid::FieldGrid(const CavityGrid& grid, std::vector<double> values)
        : grid_(grid), values_(std::move(values))
    {
        if (values_.size() != rows() * cols())
            throw ShapeError("field grid needs " + std::to_string(rows()) + " x " + std::to_string(cols())
                             + " values, got " + std::to_string(values_.size()));
        for (std::size_t j = 0; j < rows(); ++j)
        {
            values_[j * cols()] = 0.0;
            values_[j * cols() + cols() - 1] = 0.0;
        }
    }

    void FieldGrid::set(std::size_t j, std::size_t i, double value)
    {
        if (j >= rows() || i >= cols())
            throw std::out_of_range("field grid index out of range");
        if (i == 0 || i == cols() - 1)
            return;
        values_[j * cols() + i] = value;
    }

    std::span<const double> FieldGrid::row(std::size_t j) const
    {
        if (j >= rows())
            throw std::out_of_range("field grid row out of range");
        return std::span<const double>(values_).subspan(j * cols(), cols());
    }

    FieldGrid FieldGrid::time_reversed() const
    {
        std::vector<double> out(values_.size());
        const std::size_t n = rows();
        for (std::size_t j = 0; j < n; ++j)
        {
            auto src = row(n - 1 - j);
            std::copy(src.begin(), src.end(), out.begin() + static_cast<std::ptrdiff_t>(j * cols()));
        }
        return FieldGrid(grid_, std::move(out));
    }

    double momentum_density(const FieldGrid& field, std::size_t j, std::size_t i)
    {
        if (j < 1 || j + 1 >= field.rows() || i < 1 || i + 1 >= field.cols())
            throw std::out_of_range("momentum_density needs an interior sample");
        const double dt = field.grid().time_step();
        const double dx = field.grid().space_step();
        const double phi_t = (field(j + 1, i) - field(j - 1, i)) / (2.0 * dt);
        const double phi_x = (field(j, i + 1) - field(j, i - 1)) / (2.0 * dx);
        return phi_t * phi_x;
    }
} // namespace twobc
