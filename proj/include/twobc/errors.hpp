#pragma once

#include <stdexcept>
#include <string>

namespace twobc
{
    /// Array dimensions or counts that do not fit together.
    class ShapeError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// A request that asks for more resolution than the grid carries.
    class ResolutionError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// An iterative or extrapolated numerical estimate failed to settle.
    class ConvergenceError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
} // namespace twobc
