#pragma once

#include <functional>

#include "mapasym/real.hpp"

namespace mapasym {

using RealFunction = std::function<Real(const Real&)>;

struct RootOptions {
  int max_iterations = 4000;
  /// Bisection shrinks the bracket by this many bits before Newton/secant
  /// polishing starts.
  int bisection_bits = 24;
};

/// Root of a continuous f on [lo, hi] with f(lo) f(hi) < 0.
///
/// The bracket is kept as an invariant throughout: bisection first, then
/// Newton steps (when `derivative` is given) or secant steps, any step that
/// leaves the bracket falls back to bisection. The result is the midpoint of a
/// final bracket of width <= tol, so it lies within tol/2 of a sign change.
///
/// Throws BracketError when f does not change sign on the bracket and
/// ConvergenceError when the bracket cannot be shrunk below tol (iteration
/// budget exhausted or tol below the working precision).
Real find_root(const RealFunction& f, const Real& lo, const Real& hi, const Real& tol,
               const RealFunction& derivative = {}, RootOptions options = {});

}  // namespace mapasym
