#pragma once

#include "fanogap/enclosure.hpp"
#include "fanogap/piecewise.hpp"

#include <functional>

namespace fanogap {

using ExactFn = std::function<Rational(const Rational&)>;

/// Exact-sign bisection for an increasing function. Requires f(lo) <= 0 <= f(hi)
/// (throws std::invalid_argument otherwise). Returns [a, b] inside [lo, hi] with
/// f(a) <= 0 <= f(b) and b - a <= width.
Enclosure isolate_increasing_root(const ExactFn& f, Rational lo, Rational hi, const Rational& width);

/// True when p >= 0 on [a, b], decided by Bernstein coefficients with
/// subdivision. Returns false when a negative value is found at a subdivision
/// point or the depth budget runs out.
bool nonnegative_on(const Poly& p, const Rational& a, const Rational& b, int max_depth = 40);

/// Same check for every piece of a piecewise polynomial over [0, end].
bool nonnegative_on(const PiecewisePoly& f, const Rational& end, int max_depth = 40);

/// Bernstein coefficients of p on [0, 1].
std::vector<Rational> bernstein_coefficients(const Poly& p);

}  // namespace fanogap
