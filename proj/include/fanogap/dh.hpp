#pragma once

#include "fanogap/piecewise.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fanogap {

/// Duistermaat-Heckman data of the circle action on the quadric Q^n with
/// moment map in [0, 2].
struct QuadricDH {
    int n = 0;
    Poly f;
    Poly g;
    PiecewisePoly rho;     // -f on [0,1], g on [1,2]
    PiecewisePoly vol_fn;  // vol(H - xi E) on [0,2]
    Poly sum_poly;         // sum_k (k+1)/((n-4-2k)!(2k+3)!) (1-xi)^(2k+3)
};

/// Builds and checks: rho = -(1/n!) vol_fn' piecewise, vol_fn(0) = 2,
/// vol_fn(2) = 0, agreement at xi = 1 (a single polynomial when n = 3), and
/// total mass 2/n!. Throws std::logic_error naming the failed identity.
QuadricDH build_quadric_dh(int n);

struct LocalizationReport {
    int n = 0;
    /// c with xi^(n-1) - (2-xi)^(n-1) = c sum_j C(n-1,2j+1)(1-xi)^(2j+1).
    std::optional<Rational> expansion_constant;
    /// c with f + g = c sum_poly (n >= 4).
    std::optional<Rational> fg_constant;
    bool fg_vanishes = false;  // n = 3
    bool ok = false;
};

LocalizationReport check_localization_identity(int n);

struct FNonnegReport {
    int n = 0;
    bool F_at_n_zero = false;
    bool F_prime_at_n_zero = false;
    bool F_second_closed_form = false;
    bool F_nonneg_on_n_2n = false;
    Rational F_at_2n;
    bool ok() const { return F_at_n_zero && F_prime_at_n_zero && F_second_closed_form && F_nonneg_on_n_2n; }
};

/// F(x) = (n^2/2)(2n-x)^(n-1) - ((n-2)/2)(2n-x)^n + (1/2) n^n (x+2-n) - 2n^n.
Poly quadric_F(int n);
FNonnegReport check_F_nonneg(int n);

struct IntersectionReport {
    int n = 0;
    bool first_piece_matches = false;
    bool difference_is_F = false;  // n^n vol_fn(x/n) - 2n^n + phi(x) == F on [n, 2n]
    long grid_points = 0;
    long violations = 0;
    long equalities_on_0_n = 0;
    bool ok() const { return first_piece_matches && difference_is_F && violations == 0; }
};

/// n^n vol_fn(x/n) >= 2n^n - phi(x) for the (n, n, 2) model on a grid of
/// step `step` over [0, 2n].
IntersectionReport check_intersection_expansion(int n, const Rational& step = Rational(1));

/// "xi,rho" rows for xi = 0, step, ..., 2.
void write_rho_csv(std::ostream& os, const QuadricDH& dh, const Rational& step, bool decimal = false);

}  // namespace fanogap
