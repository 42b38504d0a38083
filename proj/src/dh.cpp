#include "fanogap/dh.hpp"

#include "fanogap/blowup.hpp"
#include "fanogap/roots.hpp"

#include <iomanip>
#include <stdexcept>

namespace fanogap {

namespace {

Rational fact(int k) { return Rational(factorial(static_cast<unsigned long>(k))); }

Poly mono(const Rational& c, int k) { return Poly::monomial(c, static_cast<unsigned>(k)); }

// p(2 - xi)
Poly reflect(const Poly& p) { return p.compose_affine(Rational(-1), Rational(2)); }

void require(bool cond, const std::string& what)
{
    if (!cond) {
        throw std::logic_error("build_quadric_dh: identity failed: " + what);
    }
}

// c with a == c * b, if one exists (b nonzero).
std::optional<Rational> proportionality(const Poly& a, const Poly& b)
{
    if (b.is_zero()) {
        return std::nullopt;
    }
    const Rational c = a.leading() / b.leading();
    if (a.degree() != b.degree() || a != c * b) {
        return std::nullopt;
    }
    return c;
}

}  // namespace

QuadricDH build_quadric_dh(int n)
{
    if (n < 3) {
        throw std::invalid_argument("build_quadric_dh: n must be >= 3");
    }
    const Rational N(n);
    QuadricDH q;
    q.n = n;
    q.f = (mono(N - 2, n - 1) - mono(N - 1, n - 2)) * (Rational(1) / (Rational(2) * fact(n - 1)));
    q.g = -reflect(q.f);
    q.rho = PiecewisePoly({{Rational(0), -q.f}, {Rational(1), q.g}});

    const Poly first = Poly(Rational(2)) - mono(N / 2, n - 1) + mono((N - 2) / 2, n);
    const Poly second = mono(N / 2, n - 1).compose_affine(Rational(-1), Rational(2)) -
                        mono((N - 2) / 2, n).compose_affine(Rational(-1), Rational(2));
    q.vol_fn = PiecewisePoly({{Rational(0), first}, {Rational(1), second}});

    const Poly one_minus{Rational(1), Rational(-1)};
    for (int k = 0; 2 * k <= n - 4; ++k) {
        q.sum_poly += Rational(k + 1) / (fact(n - 4 - 2 * k) * fact(2 * k + 3)) *
                      pow(one_minus, static_cast<unsigned>(2 * k + 3));
    }

    const Rational inv_nf = Rational(1) / fact(n);
    require(-inv_nf * first.derivative() == -q.f, "rho = -(1/n!) vol' on [0,1]");
    require(-inv_nf * second.derivative() == q.g, "rho = -(1/n!) vol' on [1,2]");
    require(first(Rational(0)) == Rational(2), "vol_fn(0) = 2");
    require(second(Rational(2)).is_zero(), "vol_fn(2) = 0");
    require(first(Rational(1)) == second(Rational(1)), "vol_fn pieces agree at 1");
    require((-q.f)(Rational(1)) == q.g(Rational(1)), "rho pieces agree at 1");
    if (n == 3) {
        require(first == second, "n = 3 pieces form one polynomial");
    }
    require(q.rho.integrate(Rational(0), Rational(2)) == Rational(2) * inv_nf, "total mass 2/n!");
    require(reflect(-q.f) == q.g, "symmetry rho(xi) = rho(2 - xi)");
    require((q.rho * Poly{Rational(0), Rational(1)}).integrate(Rational(0), Rational(2)) == Rational(2) * inv_nf,
            "moment int xi rho = 2/n!");
    require(nonnegative_on(-q.f, Rational(0), Rational(1)) && nonnegative_on(q.g, Rational(1), Rational(2)),
            "rho >= 0 on [0,2]");
    return q;
}

LocalizationReport check_localization_identity(int n)
{
    if (n < 3) {
        throw std::invalid_argument("check_localization_identity: n must be >= 3");
    }
    const QuadricDH q = build_quadric_dh(n);
    LocalizationReport rep;
    rep.n = n;

    const Poly lhs = mono(Rational(1), n - 1) - reflect(mono(Rational(1), n - 1));
    Poly odd_sum;
    const Poly one_minus{Rational(1), Rational(-1)};
    for (int j = 0; 2 * j + 1 <= n - 1; ++j) {
        odd_sum += Rational(binomial(n - 1, 2 * j + 1)) * pow(one_minus, static_cast<unsigned>(2 * j + 1));
    }
    rep.expansion_constant = proportionality(lhs, odd_sum);

    const Poly fg = q.f + q.g;
    if (n == 3) {
        rep.fg_vanishes = fg.is_zero();
        rep.ok = rep.fg_vanishes && rep.expansion_constant.has_value();
        return rep;
    }
    rep.fg_constant = proportionality(fg, q.sum_poly);
    if (!rep.expansion_constant || !rep.fg_constant) {
        throw std::logic_error("check_localization_identity: structural mismatch at n = " + std::to_string(n));
    }
    rep.ok = true;
    return rep;
}

Poly quadric_F(int n)
{
    const Rational N(n);
    const Rational nn(ipow(n, static_cast<unsigned long>(n)));
    const Poly w{Rational(2 * n), Rational(-1)};  // 2n - x
    return (N * N / 2) * pow(w, static_cast<unsigned>(n - 1)) - ((N - 2) / 2) * pow(w, static_cast<unsigned>(n)) +
           (nn / 2) * Poly{Rational(2 - n), Rational(1)} - Poly(Rational(2) * nn);
}

FNonnegReport check_F_nonneg(int n)
{
    if (n < 3) {
        throw std::invalid_argument("check_F_nonneg: n must be >= 3");
    }
    const Rational N(n);
    const Poly F = quadric_F(n);
    FNonnegReport rep;
    rep.n = n;
    rep.F_at_n_zero = F(N).is_zero();
    rep.F_prime_at_n_zero = F.derivative()(N).is_zero();
    const Poly closed = (N / 2) * (N - 1) * (N - 2) *
                        pow(Poly{Rational(2 * n), Rational(-1)}, static_cast<unsigned>(n - 3)) * Poly{-N, Rational(1)};
    rep.F_second_closed_form = F.derivative().derivative() == closed;
    rep.F_nonneg_on_n_2n = nonnegative_on(F, N, Rational(2 * n));
    rep.F_at_2n = F(Rational(2 * n));
    return rep;
}

IntersectionReport check_intersection_expansion(int n, const Rational& step)
{
    if (n < 3) {
        throw std::invalid_argument("check_intersection_expansion: n must be >= 3");
    }
    if (step.sign() <= 0) {
        throw std::invalid_argument("check_intersection_expansion: step must be positive");
    }
    const Rational N(n);
    const Rational nn(ipow(n, static_cast<unsigned long>(n)));
    const QuadricDH q = build_quadric_dh(n);
    const BlowupModel m = build_model(n, n, 2);
    IntersectionReport rep;
    rep.n = n;
    const Poly expected = Poly(Rational(2)) - mono(N / 2, n - 1) + mono((N - 2) / 2, n);
    rep.first_piece_matches = q.vol_fn.pieces().front().poly == expected;

    // vol(-K - xE) = n^n vol_fn(x/n)
    const Poly scaled_second = nn * q.vol_fn.pieces().back().poly.compose_affine(Rational(1) / N, Rational(0));
    const Poly phi_tail = m.phi.pieces().back().poly;
    rep.difference_is_F = scaled_second - Poly(Rational(2) * nn) + phi_tail == quadric_F(n);

    for (Rational x(0); x <= Rational(2 * n); x += step) {
        const Rational lhs = nn * q.vol_fn(x / N);
        const Rational rhs = Rational(2) * nn - m.phi(x);
        ++rep.grid_points;
        if (lhs < rhs) {
            ++rep.violations;
        }
        if (x <= N && lhs == rhs) {
            ++rep.equalities_on_0_n;
        }
    }
    return rep;
}

void write_rho_csv(std::ostream& os, const QuadricDH& dh, const Rational& step, bool decimal)
{
    if (step.sign() <= 0) {
        throw std::invalid_argument("write_rho_csv: step must be positive");
    }
    os << (decimal ? "xi,rho,rho_decimal\n" : "xi,rho\n");
    for (Rational x(0); x <= Rational(2); x += step) {
        const Rational v = dh.rho(x);
        os << x.str() << "," << v.str();
        if (decimal) {
            os << "," << std::setprecision(17) << v.to_double();
        }
        os << "\n";
    }
}

}  // namespace fanogap
