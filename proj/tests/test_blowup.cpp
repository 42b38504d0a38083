#include "fanogap/blowup.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fanogap;
using namespace testsupport;

namespace {

// phi for x >= d straight from the z-integral, expanded term by term.
Rational phi_integral_oracle(int n, int d, int ell, const Rational& x)
{
    const int m = n - d + 1;
    Poly integrand = pow(Poly::x(), static_cast<unsigned>(d - 3)) * Poly{Rational(d), Rational(-1)};
    integrand = integrand * pow(Poly{x, Rational(-1)}, static_cast<unsigned>(m));
    const Rational c = Rational(factorial(n)) / (Rational(factorial(d - 3)) * Rational(factorial(m))) *
                       pow(Rational(ell), -m);
    return c * integrand.integrate(0, d);
}

}  // namespace

TEST_SUITE("blowup") {

TEST_CASE("degree two model")
{
    const BlowupModel m = build_model(3, 2, 1);
    CHECK(m.A == Rational(2));
    CHECK(m.phi(1) == Rational(6));
    CHECK(m.phi(Rational(Integer(5), Integer(2))) == Rational(6) * Rational(Integer(25), Integer(4)));
    CHECK(psi_fn(m)(3).is_zero());
    CHECK(m.phi(3) == Rational(54));
}

TEST_CASE("log discrepancy")
{
    for (int n = 3; n <= 12; ++n) {
        for (int d = 2; d <= n + 1; ++d) {
            for (int ell = 1; ell <= 2; ++ell) {
                CHECK(build_model(n, d, ell).A == Rational((d - 2) + ell * (n - d + 1)));
            }
        }
    }
}

TEST_CASE("last family has a constant tail")
{
    for (int n = 3; n <= 9; ++n) {
        const BlowupModel m = build_model(n, n + 1, 1);
        const Rational N(n);
        const Poly first = (N + 1) * N * pow(Poly::x(), n - 1) - (N - 1) * pow(Poly::x(), n);
        CHECK(m.phi.pieces().front().poly == first);
        CHECK(m.phi(Rational(n + 5)) == Rational(ipow(n + 1, n)));
    }
}

TEST_CASE("value at the breakpoint")
{
    const BlowupModel m = build_model(7, 7, 2);
    CHECK(m.phi.pieces().front().poly == Rational(Integer(1), Integer(2)) * pow(Poly::x(), 6) * Poly{49, -5});
    for (int n = 3; n <= 12; ++n) {
        for (int d = 2; d <= n; ++d) {
            for (int ell = 1; ell <= 2; ++ell) {
                const BlowupModel b = build_model(n, d, ell);
                const Rational expect = pow(Rational(ell), -(n - d + 1)) * pow(Rational(d), n) * Rational(n - d + 2);
                CHECK(b.phi(d) == expect);
            }
        }
    }
}

TEST_CASE("tail matches the integral oracle")
{
    for (int n = 3; n <= 12; ++n) {
        for (int d = 3; d <= n; ++d) {
            for (int ell = 1; ell <= 2; ++ell) {
                const BlowupModel m = build_model(n, d, ell);
                CHECK(phi_binomial_piece(n, d, ell) == phi_beta_piece(n, d, ell));
                CHECK(Phi_binomial_piece(n, d, ell) == Phi_beta_piece(n, d, ell));
                for (int k : {0, 1, 3}) {
                    const Rational x = Rational(d) + Rational(Integer(k), Integer(2));
                    CHECK(m.phi(x) == phi_integral_oracle(n, d, ell, x));
                }
            }
        }
    }
}

TEST_CASE("numeric values agree with quadrature")
{
    CHECK(build_model(5, 3, 2).phi(9) == dec("5892.75"));
    CHECK(build_model(5, 3, 2).Phi(9) == dec("12043.6875"));
    CHECK(build_model(6, 4, 2).phi(5) == Rational(5472));
    CHECK(close(build_model(6, 4, 2).Phi(5), "5022.857142857142857142857", tenpow(20)));
    CHECK(build_model(7, 7, 2).Phi(7) == dec("1080900.1875"));
    CHECK(close(build_model(8, 5, 1).Phi(11), "333960833.3333333333333333", tenpow(20)));
}

TEST_CASE("antiderivative and psi identities")
{
    for (int n = 3; n <= 10; ++n) {
        for (int d = 2; d <= n + 1; ++d) {
            for (int ell = 1; ell <= 2; ++ell) {
                const BlowupModel m = build_model(n, d, ell);
                CHECK(m.phi(0).is_zero());
                CHECK(m.Phi(0).is_zero());
                const PiecewisePoly psi = psi_fn(m);
                CHECK(psi(0).is_zero());
                CHECK(psi(m.A) == -m.Phi(m.A));
                const auto dphi = m.phi.derivative_pieces();
                const auto dPhi = m.Phi.derivative_pieces();
                const auto dpsi = psi.derivative_pieces();
                REQUIRE(dPhi.size() == m.phi.size());
                for (std::size_t i = 0; i < dPhi.size(); ++i) {
                    CHECK(dPhi[i].poly == m.phi.pieces()[i].poly);
                    CHECK(dpsi[i].poly == Poly{-m.A, Rational(1)} * dphi[i].poly);
                }
            }
        }
    }
}

TEST_CASE("d equal to n closed form tail")
{
    for (int n = 3; n <= 12; ++n) {
        for (int ell = 1; ell <= 2; ++ell) {
            const BlowupModel m = build_model(n, n, ell);
            const Poly expect = pow(Rational(ell), -1) * Rational(ipow(n, n)) * Poly{Rational(2 - n), Rational(1)};
            CHECK(m.phi.pieces().back().poly == expect);
        }
    }
}

TEST_CASE("psi sign at x1")
{
    const BlowupModel m = build_model(5, 3, 2);
    CHECK(psi_fn(m)(9) == Rational(2) * m.phi(9) - m.Phi(9));
    CHECK(psi_fn(m)(9).sign() < 0);
    CHECK(psi_fn(fujita_model(4))(5).is_zero());
}

TEST_CASE("range checks")
{
    CHECK_THROWS_AS(build_model(5, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_model(5, 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_model(5, 3, 3), std::invalid_argument);
    CHECK(build_model(5, 3, 3, true).exploratory);
    CHECK_THROWS_AS(build_singular_deg2(2), std::invalid_argument);
}

TEST_CASE("singular degree two model")
{
    const SingularDeg2Model s3 = build_singular_deg2(3);
    CHECK(s3.A == Rational(2));
    CHECK(s3.phi.pieces().front().poly == Poly{0, 0, 6});
    CHECK(s3.phi.pieces().back().poly == Poly{4, 0, 5});
    CHECK(s3.phi(2) == Rational(24));
    CHECK(build_singular_deg2(4).b1(2) == Rational(48));
    for (int n = 3; n <= 10; ++n) {
        const SingularDeg2Model s = build_singular_deg2(n);
        const Poly diff = s.psi - s.phi.pieces().back().poly;
        CHECK(s.phi.pieces().front().poly == s.psi);
        for (int k = 1; k <= 20; ++k) {
            const Rational x = Rational(2) + Rational(Integer(k), Integer(4));
            CHECK(diff(x).sign() > 0);
        }
    }
}

TEST_CASE("normal bundle bound")
{
    CHECK(trivial_normal_bound(3, 1, Integer(9), Rational(1)) == Rational(54));
    CHECK(trivial_normal_bound(4, 2, Integer(5), Rational(1)) == Rational(270));
    CHECK(trivial_normal_bound(2, 1, Integer(2), Rational(2)) == Rational(4));
    CHECK_THROWS(trivial_normal_bound(3, 3, Integer(1), Rational(1)));
}

TEST_CASE("model serialization")
{
    const auto j = to_json(build_model(5, 3, 2));
    CHECK(j.at("n") == 5);
    CHECK(j.at("A") == "7");
}

}  // TEST_SUITE
