#pragma once

#include "fanogap/piecewise.hpp"

#include <json.hpp>

#include <string>

namespace fanogap {

/// Volume lower-bound model vol(L - xE) >= V - phi(x) together with the log
/// discrepancy A of the valuation. Phi is the antiderivative of phi.
struct BlowupModel {
    std::string family;  // "weighted-blowup", "fujita", "singular-deg2"
    int n = 0;
    int d = 0;
    int ell = 0;
    Rational A;
    PiecewisePoly phi;
    PiecewisePoly Phi;
    bool exploratory = false;

    Rational v_target() const;  // 2 n^n
};

/// Weighted blowup (1^(d-2), ell^(n-d+1)) along a minimal rational curve of
/// degree d. Requires 2 <= d <= n+1 and ell in {1, 2}; larger ell only with
/// `exploratory`, and such models are refused by every certificate route.
/// Both representations of the x >= d piece are built and compared exactly.
BlowupModel build_model(int n, int d, int ell, bool exploratory = false);

/// phi = x^n, A = n.
BlowupModel fujita_model(int n);

/// phi on x >= d in the binomial form around x = d.
Poly phi_binomial_piece(int n, int d, int ell);
Poly Phi_binomial_piece(int n, int d, int ell);
/// phi and Phi on x >= d from the integral over z in [0, d], expanded with
/// exact Beta values. Requires d >= 3.
Poly phi_beta_piece(int n, int d, int ell);
Poly Phi_beta_piece(int n, int d, int ell);

/// Psi(x) = (x - A) phi(x) - Phi(x).
PiecewisePoly psi_fn(const BlowupModel& model);

struct SingularDeg2Model {
    int n = 0;
    Rational A;
    PiecewisePoly phi;
    Poly psi;
    /// b1 = 2n x^(n-1) - x^n on [0,2] and b1' = b1 + (x-2)^n on [2, inf).
    PiecewisePoly b1;

    BlowupModel as_model() const;
};

/// phi = 2n x^(n-1) on [0,2], (2n-1) x^(n-1) + 2^(n-1) after; psi = 2n x^(n-1);
/// A = n - 1. Requires n >= 3.
SingularDeg2Model build_singular_deg2(int n);

/// delta^(-r) (r+1)^r C(n,r) d_Z.
Rational trivial_normal_bound(int n, int r, const Integer& d_Z, const Rational& delta);

nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const PiecewisePoly& f);
nlohmann::json to_json(const BlowupModel& m);

}  // namespace fanogap
