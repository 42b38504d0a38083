#include "fanogap/blowup.hpp"

#include <stdexcept>

namespace fanogap {

namespace {

Rational ell_factor(int ell, int k)
{
    return pow(Rational(ell), -static_cast<long>(k));
}

// C * int_0^d z^(d-3) (d-z) (x-z)^k dz as a polynomial in x.
Poly beta_expansion(int d, int k, const Rational& C)
{
    Poly out;
    for (int j = 0; j <= k; ++j) {
        const Rational c = C * Rational(binomial(k, j)) * Rational(ipow(d, static_cast<unsigned long>(d + k - j - 1))) *
                           beta_int(d - 2, k - j + 2);
        out += c * Poly::shifted_power(Rational(d), static_cast<unsigned>(j));
    }
    return out;
}

void check_range(int n, int d, int ell, bool exploratory)
{
    if (n < 2) {
        throw std::invalid_argument("build_model: n must be >= 2, got " + std::to_string(n));
    }
    if (d < 2 || d > n + 1) {
        throw std::invalid_argument("build_model: d must lie in [2, n+1], got " + std::to_string(d));
    }
    if (ell < 1 || (ell > 2 && !exploratory)) {
        throw std::invalid_argument("build_model: ell must be 1 or 2, got " + std::to_string(ell));
    }
}

}  // namespace

Rational BlowupModel::v_target() const
{
    return Rational(2) * Rational(ipow(n, static_cast<unsigned long>(n)));
}

Poly phi_binomial_piece(int n, int d, int ell)
{
    const int k = n - d + 1;
    Poly out;
    for (int j = 0; j <= k; ++j) {
        const Rational c = Rational(binomial(n, j)) * Rational(n - d + 2 - j) *
                           Rational(ipow(d, static_cast<unsigned long>(n - j)));
        out += c * Poly::shifted_power(Rational(d), static_cast<unsigned>(j));
    }
    return out * ell_factor(ell, k);
}

Poly Phi_binomial_piece(int n, int d, int ell)
{
    const int k = n - d + 1;
    Poly out;
    for (int j = 0; j <= k + 1; ++j) {
        const Rational c = Rational(binomial(n + 1, j)) * Rational(n - d + 3 - j) / Rational(n + 1) *
                           Rational(ipow(d, static_cast<unsigned long>(n + 1 - j)));
        out += c * Poly::shifted_power(Rational(d), static_cast<unsigned>(j));
    }
    return out * ell_factor(ell, k);
}

Poly phi_beta_piece(int n, int d, int ell)
{
    if (d < 3) {
        throw std::invalid_argument("phi_beta_piece: requires d >= 3");
    }
    const int k = n - d + 1;
    const Rational C = ell_factor(ell, k) * Rational(factorial(static_cast<unsigned long>(n))) /
                       Rational(Integer(factorial(static_cast<unsigned long>(d - 3)) * factorial(static_cast<unsigned long>(k))));
    return beta_expansion(d, k, C);
}

Poly Phi_beta_piece(int n, int d, int ell)
{
    if (d < 3) {
        throw std::invalid_argument("Phi_beta_piece: requires d >= 3");
    }
    const int k = n - d + 1;
    const Rational C = ell_factor(ell, k) * Rational(factorial(static_cast<unsigned long>(n))) /
                       Rational(Integer(factorial(static_cast<unsigned long>(d - 3)) *
                                        factorial(static_cast<unsigned long>(k + 1))));
    return beta_expansion(d, k + 1, C);
}

BlowupModel build_model(int n, int d, int ell, bool exploratory)
{
    check_range(n, d, ell, exploratory);
    const int k = n - d + 1;
    const Rational lf = ell_factor(ell, k);

    BlowupModel m;
    m.family = "weighted-blowup";
    m.n = n;
    m.d = d;
    m.ell = ell;
    m.A = Rational(d - 2) + Rational(ell) * Rational(k);
    m.exploratory = ell > 2;

    // x <= d: lf x^(n-1) (dn - (d-2) x), antiderivative lf x^n (d - (d-2) x/(n+1)).
    const Poly first = lf * (Poly::monomial(Rational(d * n), static_cast<unsigned>(n - 1)) -
                             Poly::monomial(Rational(d - 2), static_cast<unsigned>(n)));
    const Poly first_anti = lf * (Poly::monomial(Rational(d), static_cast<unsigned>(n)) -
                                  Poly::monomial(Rational(d - 2) / Rational(n + 1), static_cast<unsigned>(n + 1)));
    if (first.antiderivative() != first_anti) {
        throw std::logic_error("build_model: first-piece antiderivative mismatch");
    }

    if (d == 2) {
        m.phi = PiecewisePoly(first);
        m.Phi = PiecewisePoly(first_anti);
        const Poly closed = Poly::monomial(Rational(2 * n) * pow(Rational(ell), 1 - n), static_cast<unsigned>(n - 1));
        if (first != closed || phi_binomial_piece(n, d, ell) != closed) {
            throw std::logic_error("build_model: d = 2 closed form mismatch");
        }
        return m;
    }

    const Poly second = phi_binomial_piece(n, d, ell);
    const Poly second_anti = Phi_binomial_piece(n, d, ell);
    if (second != phi_beta_piece(n, d, ell)) {
        throw std::logic_error("build_model: binomial and Beta forms of phi disagree for (n, d, ell) = (" +
                               std::to_string(n) + ", " + std::to_string(d) + ", " + std::to_string(ell) + ")");
    }
    if (second_anti != Phi_beta_piece(n, d, ell)) {
        throw std::logic_error("build_model: binomial and Beta forms of Phi disagree");
    }
    if (second_anti.derivative() != second) {
        throw std::logic_error("build_model: Phi' != phi on x >= d");
    }
    if (d == n + 1 && second != Poly(Rational(ipow(n + 1, static_cast<unsigned long>(n))))) {
        throw std::logic_error("build_model: d = n+1 tail is not (n+1)^n");
    }
    // Piecewise constructor enforces continuity at x = d.
    m.phi = PiecewisePoly({{Rational(0), first}, {Rational(d), second}});
    m.Phi = PiecewisePoly({{Rational(0), first_anti}, {Rational(d), second_anti}});
    return m;
}

BlowupModel fujita_model(int n)
{
    if (n < 1) {
        throw std::invalid_argument("fujita_model: n must be positive");
    }
    BlowupModel m;
    m.family = "fujita";
    m.n = n;
    m.A = Rational(n);
    m.phi = PiecewisePoly(Poly::monomial(Rational(1), static_cast<unsigned>(n)));
    m.Phi = PiecewisePoly(Poly::monomial(Rational(1) / Rational(n + 1), static_cast<unsigned>(n + 1)));
    return m;
}

PiecewisePoly psi_fn(const BlowupModel& model)
{
    return model.phi * Poly{-model.A, Rational(1)} - model.Phi;
}

BlowupModel SingularDeg2Model::as_model() const
{
    BlowupModel m;
    m.family = "singular-deg2";
    m.n = n;
    m.d = 2;
    m.ell = 1;
    m.A = A;
    m.phi = phi;
    m.Phi = phi.antiderivative();
    return m;
}

namespace {

// n(n-1) int_0^upper (2-z)(x-z)^(n-2) dz with upper = x (when `to_x`) or 2.
Poly b1_integral(int n, bool to_x)
{
    Poly out;
    const int m = n - 2;
    for (int k = 0; k <= m; ++k) {
        // (x-z)^m = sum_k C(m,k) (-z)^k x^(m-k)
        const Rational c = Rational(binomial(m, k)) * (k % 2 == 0 ? Rational(1) : Rational(-1));
        const Poly zpart = Poly{Rational(2), Rational(-1)} * Poly::monomial(Rational(1), static_cast<unsigned>(k));
        const Poly anti = zpart.antiderivative();
        const Poly xm = Poly::monomial(c, static_cast<unsigned>(m - k));
        if (to_x) {
            out += xm * anti;
        } else {
            out += xm * anti(Rational(2));
        }
    }
    return out * Rational(n * (n - 1));
}

}  // namespace

SingularDeg2Model build_singular_deg2(int n)
{
    if (n < 3) {
        throw std::invalid_argument("build_singular_deg2: n must be >= 3, got " + std::to_string(n));
    }
    const auto un = static_cast<unsigned>(n);
    SingularDeg2Model s;
    s.n = n;
    s.A = Rational(n - 1);
    s.psi = Poly::monomial(Rational(2 * n), un - 1);
    const Poly tail = Poly::monomial(Rational(2 * n - 1), un - 1) + Poly(Rational(ipow(2, un - 1)));
    s.phi = PiecewisePoly({{Rational(0), s.psi}, {Rational(2), tail}});

    const Poly b1_closed = s.psi - Poly::monomial(Rational(1), un);
    const Poly b1p_closed = b1_closed + Poly::shifted_power(Rational(2), un);
    if (b1_integral(n, true) != b1_closed) {
        throw std::logic_error("build_singular_deg2: b1 integral does not match 2n x^(n-1) - x^n");
    }
    if (b1_integral(n, false) != b1p_closed) {
        throw std::logic_error("build_singular_deg2: b1' integral does not match 2n x^(n-1) - x^n + (x-2)^n");
    }
    s.b1 = PiecewisePoly({{Rational(0), b1_closed}, {Rational(2), b1p_closed}});
    for (int i = 1; i <= 64; ++i) {
        const Rational x = Rational(i) / Rational(8);
        if (!(s.b1(x) < s.phi(x))) {
            throw std::logic_error("build_singular_deg2: b1 < phi fails at x = " + x.str());
        }
        if (x > Rational(2) && !(s.phi(x) < s.psi(x))) {
            throw std::logic_error("build_singular_deg2: phi < psi fails at x = " + x.str());
        }
    }
    // psi - tail = (x^(n-1) - 2^(n-1)) on x >= 2, zero only at x = 2.
    const Poly diff = s.psi - tail;
    if (diff != Poly::monomial(Rational(1), un - 1) - Poly(Rational(ipow(2, un - 1)))) {
        throw std::logic_error("build_singular_deg2: psi - phi has unexpected form");
    }
    return s;
}

Rational trivial_normal_bound(int n, int r, const Integer& d_Z, const Rational& delta)
{
    if (r < 1 || r > n - 1) {
        throw std::invalid_argument("trivial_normal_bound: r must lie in [1, n-1]");
    }
    if (d_Z < 1) {
        throw std::invalid_argument("trivial_normal_bound: d_Z must be >= 1");
    }
    if (delta.sign() <= 0) {
        throw std::invalid_argument("trivial_normal_bound: delta must be positive");
    }
    return pow(delta, -r) * Rational(ipow(r + 1, static_cast<unsigned long>(r))) * Rational(binomial(n, r)) *
           Rational(d_Z);
}

nlohmann::json to_json(const Poly& p)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) {
        arr.push_back(c.str());
    }
    return arr;
}

nlohmann::json to_json(const PiecewisePoly& f)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& piece : f.pieces()) {
        arr.push_back({{"start", piece.start.str()}, {"coeffs", to_json(piece.poly)}});
    }
    return arr;
}

nlohmann::json to_json(const BlowupModel& m)
{
    return {{"family", m.family}, {"n", m.n},          {"d", m.d},
            {"ell", m.ell},       {"A", m.A.str()},    {"phi", to_json(m.phi)},
            {"Phi", to_json(m.Phi)}, {"exploratory", m.exploratory}};
}

}  // namespace fanogap
