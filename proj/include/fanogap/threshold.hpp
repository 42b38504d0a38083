#pragma once

#include "fanogap/blowup.hpp"
#include "fanogap/enclosure.hpp"

#include <json.hpp>

#include <string>

namespace fanogap {

/// 2^-40, the default bracket width for T.
Rational default_width();

struct ThresholdResult {
    Enclosure T;
    Enclosure phi_at_T;
    std::string method;  // "bisection", "closed-form-d-eq-n", "cardano-d-eq-n-minus-1"
    Rational width;
};

/// Unique root T > A of Psi = (x - A) phi - Phi, bracketed by exact-sign
/// bisection. Throws std::runtime_error("no-sign-change ...") when Psi stays
/// nonpositive up to 2^20 A.
ThresholdResult solve_T(const BlowupModel& model, const Rational& width = default_width());

enum class ClosedForm { DEqNEll1, DEqNEll2, DEqNMinus1Ell1, DEqNMinus1Ell2 };

ClosedForm parse_closed_form(const std::string& s);
std::string to_string(ClosedForm c);

/// T from the closed forms: A + sqrt(ell^2 + 2(n-2)/(n+1)) for d = n, and
/// tau + n - 1 for d = n - 1 with tau the root of the reduced cubic, isolated
/// by bisection to width 2^-bits.
Enclosure closed_form_T(int n, ClosedForm which, unsigned bits = kDefaultBits);

/// Reduced cubic for d = n - 1 (coefficients in tau, constant first), and the
/// bracket [lo, hi] that holds its unique admissible root.
Poly d_n_minus_1_cubic(int n, int ell);

/// F(V) = (1/V) int_0^{phi^{-1}(V)} (V - phi), enclosed with phi^{-1}(V)
/// bracketed to `width`. Exact when phi^{-1}(V) is hit exactly.
Enclosure F_phi(const BlowupModel& model, const Rational& V, const Rational& width);

/// V with F(V) = A, by monotone bisection on V. Width <= 2^-bits max(1, V)
/// unless the F enclosures stop separating A, in which case the wider
/// bracket is returned.
Enclosure volume_bound_F_inverse(const BlowupModel& model, const Rational& A, unsigned bits = 64);

nlohmann::json to_json(const Enclosure& e);
nlohmann::json to_json(const ThresholdResult& r);

}  // namespace fanogap
