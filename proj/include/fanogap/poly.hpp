#pragma once

#include "fanogap/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace fanogap {

/// Univariate polynomial with exact rational coefficients; coeffs()[i] is the
/// coefficient of x^i. The zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs);
    explicit Poly(std::vector<Rational> coeffs);
    Poly(const Rational& c) : Poly(std::vector<Rational>{c}) {}  // NOLINT(google-explicit-constructor)

    static Poly monomial(const Rational& c, unsigned degree);
    /// (x - a)^k expanded.
    static Poly shifted_power(const Rational& a, unsigned k);
    static Poly x() { return Poly{0, 1}; }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const;

    Poly derivative() const;
    /// Antiderivative vanishing at 0.
    Poly antiderivative() const;
    /// Exact definite integral over [a, b].
    Rational integrate(const Rational& a, const Rational& b) const;

    /// p(x) -> p(s*x + t).
    Poly compose_affine(const Rational& s, const Rational& t) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

Poly pow(const Poly& p, unsigned e);

}  // namespace fanogap
