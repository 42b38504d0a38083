#include "fanogap/threshold.hpp"

#include "fanogap/roots.hpp"

#include <stdexcept>

namespace fanogap {

namespace {

Rational dyadic(long e)
{
    return e >= 0 ? Rational(ipow(2, static_cast<unsigned long>(e)))
                  : Rational(Integer(1), ipow(2, static_cast<unsigned long>(-e)));
}

Enclosure phi_image(const BlowupModel& model, const Enclosure& t)
{
    return Enclosure(model.phi(t.lo()), model.phi(t.hi()));
}

}  // namespace

Rational default_width() { return dyadic(-40); }

ThresholdResult solve_T(const BlowupModel& model, const Rational& width)
{
    if (model.A.sign() <= 0) {
        throw std::invalid_argument("solve_T: A must be positive");
    }
    const PiecewisePoly psi = psi_fn(model);
    const Rational lo = model.A + dyadic(-10);
    const Rational limit = dyadic(20) * model.A;
    Rational hi = model.A + Rational(1);
    while (psi(hi).sign() < 0) {
        hi = model.A + Rational(2) * (hi - model.A);
        if (hi > limit) {
            throw std::runtime_error("no-sign-change: Psi stays negative up to 2^20 A for model " + model.family);
        }
    }
    const Enclosure T = isolate_increasing_root([&psi](const Rational& x) { return psi(x); }, lo, hi, width);
    return {T, phi_image(model, T), "bisection", width};
}

ClosedForm parse_closed_form(const std::string& s)
{
    if (s == "d=n,ell=1") return ClosedForm::DEqNEll1;
    if (s == "d=n,ell=2") return ClosedForm::DEqNEll2;
    if (s == "d=n-1,ell=1") return ClosedForm::DEqNMinus1Ell1;
    if (s == "d=n-1,ell=2") return ClosedForm::DEqNMinus1Ell2;
    throw std::invalid_argument("unknown closed form: " + s);
}

std::string to_string(ClosedForm c)
{
    switch (c) {
    case ClosedForm::DEqNEll1: return "d=n,ell=1";
    case ClosedForm::DEqNEll2: return "d=n,ell=2";
    case ClosedForm::DEqNMinus1Ell1: return "d=n-1,ell=1";
    case ClosedForm::DEqNMinus1Ell2: return "d=n-1,ell=2";
    }
    return "?";
}

Poly d_n_minus_1_cubic(int n, int ell)
{
    const Rational nn(n);
    if (ell == 2) {
        // tau^3 - 12 tau - 6(n-1)(5n+1)/(n(n+1))
        const Rational C = Rational(6) * (nn - 1) * (Rational(5) * nn + 1) / (nn * (nn + 1));
        return Poly{-C, Rational(-12), Rational(0), Rational(1)};
    }
    if (ell == 1) {
        // (tau+1)^3 - 3(tau+1) + 2 - q, q = 12(n-1)^2/(n(n+1))
        const Rational q = Rational(12) * (nn - 1) * (nn - 1) / (nn * (nn + 1));
        const Poly s = Poly{Rational(1), Rational(1)};
        return s * s * s - Rational(3) * s + Poly(Rational(2) - q);
    }
    throw std::invalid_argument("d_n_minus_1_cubic: ell must be 1 or 2");
}

Enclosure closed_form_T(int n, ClosedForm which, unsigned bits)
{
    const bool d_eq_n = which == ClosedForm::DEqNEll1 || which == ClosedForm::DEqNEll2;
    const int ell = (which == ClosedForm::DEqNEll1 || which == ClosedForm::DEqNMinus1Ell1) ? 1 : 2;
    if (d_eq_n) {
        if (n < 3) {
            throw std::invalid_argument("closed_form_T: d = n requires n >= 3");
        }
        const Rational A = Rational(n - 2) + Rational(ell);
        const Rational rad = Rational(ell * ell) + Rational(2 * (n - 2)) / Rational(n + 1);
        return (Enclosure(A) + enclose_sqrt(rad, bits)).with_bits(bits);
    }
    if (n < 4) {
        throw std::invalid_argument("closed_form_T: d = n - 1 requires n >= 4");
    }
    const Poly cubic = d_n_minus_1_cubic(n, ell);
    // Increasing past the admissible lower end: tau > 2 (ell = 2), tau > 0 (ell = 1).
    const Rational lo = ell == 2 ? Rational(2) : Rational(0);
    const Enclosure tau =
        isolate_increasing_root([&cubic](const Rational& t) { return cubic(t); }, lo, Rational(8), dyadic(-static_cast<long>(bits)));
    return (tau + Enclosure(Rational(n - 1))).with_bits(bits);
}

Enclosure F_phi(const BlowupModel& model, const Rational& V, const Rational& width)
{
    if (V.sign() <= 0) {
        throw std::invalid_argument("F_phi: V must be positive");
    }
    const PiecewisePoly& phi = model.phi;
    Rational hi(1);
    for (int i = 0; phi(hi) < V; ++i) {
        if (i > 256) {
            throw std::runtime_error("F_phi: phi does not reach V = " + V.str());
        }
        hi *= Rational(2);
    }
    const Enclosure t =
        isolate_increasing_root([&phi, &V](const Rational& x) { return phi(x) - V; }, Rational(0), hi, width);
    // G(t) = V t - Phi(t) is concave with maximum at phi^{-1}(V).
    const auto G = [&](const Rational& x) { return V * x - model.Phi(x); };
    const Rational g_lo = G(t.lo());
    const Rational g_hi = G(t.hi());
    const Rational lower = max(g_lo, g_hi);
    const Rational upper = g_lo + (t.hi() - t.lo()) * (V - phi(t.lo()));
    return Enclosure(lower / V, upper / V);
}

Enclosure volume_bound_F_inverse(const BlowupModel& model, const Rational& A, unsigned bits)
{
    if (A.sign() <= 0) {
        throw std::invalid_argument("volume_bound_F_inverse: A must be positive");
    }
    const Rational inner = dyadic(-static_cast<long>(bits) - 24);
    // F(V) <= phi^{-1}(V), so F(phi(A)) < A.
    Rational v_lo = model.phi(A);
    if (!(F_phi(model, v_lo, inner).hi() < A)) {
        throw std::logic_error("volume_bound_F_inverse: lower bracket fails");
    }
    Rational v_hi = Rational(2) * v_lo;
    for (;;) {
        const Enclosure f = F_phi(model, v_hi, inner);
        if (f.lo() > A) {
            break;
        }
        if (f.hi() < A) {
            v_lo = v_hi;
        }
        v_hi *= Rational(2);
    }
    const Rational target = dyadic(-static_cast<long>(bits));
    while (v_hi - v_lo > target * max(Rational(1), v_lo)) {
        const Rational mid = (v_lo + v_hi) / Rational(2);
        const Enclosure f = F_phi(model, mid, inner);
        if (f.hi() < A) {
            v_lo = mid;
        } else if (f.lo() > A) {
            v_hi = mid;
        } else if (f.is_exact()) {
            return Enclosure(mid, mid, bits);
        } else {
            break;
        }
    }
    return Enclosure(v_lo, v_hi, bits);
}

nlohmann::json to_json(const Enclosure& e)
{
    return {{"lo", e.lo().str()}, {"hi", e.hi().str()}, {"bits", e.bits()}};
}

nlohmann::json to_json(const ThresholdResult& r)
{
    return {{"T", to_json(r.T)}, {"phi_at_T", to_json(r.phi_at_T)}, {"method", r.method}, {"width", r.width.str()}};
}

}  // namespace fanogap
