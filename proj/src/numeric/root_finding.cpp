#include "mapasym/root_finding.hpp"

#include <string>
#include <utility>

#include "mapasym/errors.hpp"

namespace mapasym {

namespace {

struct Bracket {
  Real a, b;
  int sign_a;

  Real width() const { return b - a; }
  Real midpoint() const { return (a + b) / 2L; }

  // Replaces the endpoint whose sign matches `fx`.
  void update(const Real& x, int fx_sign) {
    if (fx_sign == sign_a) {
      a = x;
    } else {
      b = x;
    }
  }
  bool contains_open(const Real& x) const { return x > a && x < b; }
};

}  // namespace

Real find_root(const RealFunction& f, const Real& lo, const Real& hi, const Real& tol,
               const RealFunction& derivative, RootOptions options) {
  const Precision prec = min_precision(lo.precision(), hi.precision());
  Real a = lo.with_precision(prec);
  Real b = hi.with_precision(prec);
  if (a > b) std::swap(a, b);
  if (!(tol > 0L)) throw DomainError("find_root: tolerance must be positive");

  const Real fa = f(a);
  const Real fb = f(b);
  if (fa.is_zero()) return a;
  if (fb.is_zero()) return b;
  if (fa.sign() == fb.sign()) {
    throw BracketError("no sign change on [" + a.to_string(12) + ", " + b.to_string(12) + "]");
  }

  Bracket br{a, b, fa.sign()};
  const Real polish_width = max(tol, br.width() * exp2i(-options.bisection_bits, prec));
  int iterations = 0;

  auto bisect_once = [&]() {
    Real mid = br.midpoint();
    if (mid == br.a || mid == br.b) {
      throw ConvergenceError("find_root: tolerance " + tol.to_string(6) +
                             " is below the working precision");
    }
    const Real fm = f(mid);
    if (fm.is_zero()) return std::pair{true, mid};
    br.update(mid, fm.sign());
    return std::pair{false, mid};
  };

  while (br.width() > polish_width) {
    if (++iterations > options.max_iterations) {
      throw ConvergenceError("find_root: bisection budget exhausted");
    }
    if (auto [exact, mid] = bisect_once(); exact) return mid;
  }

  Real x = br.midpoint();
  Real fx = f(x);
  if (fx.is_zero()) return x;
  br.update(x, fx.sign());
  Real x_prev = br.a;
  Real f_prev = f(x_prev);
  const Real quarter_tol = tol / 4L;

  while (br.width() > tol) {
    if (++iterations > options.max_iterations) {
      throw ConvergenceError("find_root: polishing budget exhausted");
    }
    Real candidate(prec);
    bool have_candidate = false;
    if (derivative) {
      const Real dfx = derivative(x);
      if (!dfx.is_zero()) {
        candidate = x - fx / dfx;
        have_candidate = true;
      }
    } else if (!(fx == f_prev)) {
      candidate = x - fx * (x - x_prev) / (fx - f_prev);
      have_candidate = true;
    }
    if (!have_candidate || !candidate.is_finite() || !br.contains_open(candidate)) {
      if (auto [exact, mid] = bisect_once(); exact) return mid;
      x_prev = x;
      f_prev = fx;
      x = br.midpoint();
      fx = f(x);
      if (fx.is_zero()) return x;
      br.update(x, fx.sign());
      continue;
    }

    const Real step = abs(candidate - x);
    x_prev = std::move(x);
    f_prev = std::move(fx);
    x = std::move(candidate);
    fx = f(x);
    if (fx.is_zero()) return x;
    br.update(x, fx.sign());

    if (step <= quarter_tol) {
      // Certify: look for a sign change within +-tol/4 of the polished point.
      const Real left = max(br.a, x - quarter_tol);
      const Real right = min(br.b, x + quarter_tol);
      if (left < right) {
        const Real fl = f(left);
        const Real fr = f(right);
        if (fl.is_zero()) return left;
        if (fr.is_zero()) return right;
        if (fl.sign() != fr.sign()) {
          br.a = left;
          br.b = right;
          br.sign_a = fl.sign();
        }
      }
    }
  }
  return br.midpoint();
}

}  // namespace mapasym
