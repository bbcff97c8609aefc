#pragma once

#include <stdexcept>
#include <string>

namespace warpgeom {

// Thrown when an iterative routine (quadrature, bisection, ODE step control,
// shooting bracket) fails to reach its tolerance.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an evaluation cannot produce a finite result.
struct EvalError : std::runtime_error {
    explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on file write failures.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace warpgeom
