#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers and integer combinatorics.
 *
 * Rational wraps a GMP mpq_t. Values are always in lowest terms with a
 * positive denominator; no operation ever rounds.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace fanogap {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    Rational(const Integer& n) : v_(n) {}  // NOLINT(google-explicit-constructor)

    Rational(const Integer& num, const Integer& den);

    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" (decimal integers). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;

    /// Largest integer <= value.
    Integer floor() const;
    /// Smallest integer >= value.
    Integer ceil() const;

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;
    /// Nearest double; display only.
    double to_double() const { return v_.get_d(); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    mpq_class v_{0};
};

/// q^e for integer e (negative exponents invert; 0^negative throws).
Rational pow(const Rational& q, long e);

Integer factorial(unsigned long n);
Integer binomial(long n, long k);
Integer ipow(long base, unsigned long e);

/// Exact Beta function at positive integers: (a-1)!(b-1)!/(a+b-1)!.
Rational beta_int(long a, long b);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace fanogap
