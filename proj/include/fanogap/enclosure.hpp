#pragma once

/**
 * @file enclosure.hpp
 * @brief Rigorous interval enclosures with exact rational endpoints.
 *
 * An Enclosure [lo, hi] provably contains the real it stands for. Endpoints
 * are Rationals, so comparisons between enclosures are decided exactly; the
 * only source of width is truncation of a series, and every truncation adds
 * an explicit remainder bound to both endpoints.
 */

#include "fanogap/rational.hpp"

#include <optional>
#include <type_traits>
#include <string>
#include <utility>

namespace fanogap {

inline constexpr unsigned kDefaultBits = 256;
inline constexpr unsigned kMaxBits = 4096;

class Enclosure {
public:
    Enclosure() = default;
    Enclosure(const Rational& point) : lo_(point), hi_(point) {}  // NOLINT(google-explicit-constructor)
    Enclosure(Rational lo, Rational hi, unsigned bits = 0);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    /// Precision the enclosure was requested at (0 when exact by construction).
    unsigned bits() const { return bits_; }
    Enclosure with_bits(unsigned bits) const;

    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
    bool is_exact() const { return lo_ == hi_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Enclosure& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool intersects(const Enclosure& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }

    /// Every point of *this is < every point of o.
    bool certainly_less(const Enclosure& o) const { return hi_ < o.lo_; }
    bool certainly_greater(const Enclosure& o) const { return o.hi_ < lo_; }

    /// Outward rounding of both endpoints to dyadics with about `bits`
    /// significant bits. Keeps rational sizes bounded in long computations.
    Enclosure rounded(unsigned bits) const;

    Enclosure& operator+=(const Enclosure& o);
    Enclosure& operator-=(const Enclosure& o);
    Enclosure& operator*=(const Enclosure& o);
    Enclosure& operator/=(const Enclosure& o);

    friend Enclosure operator+(Enclosure a, const Enclosure& b) { return a += b; }
    friend Enclosure operator-(Enclosure a, const Enclosure& b) { return a -= b; }
    friend Enclosure operator*(Enclosure a, const Enclosure& b) { return a *= b; }
    friend Enclosure operator/(Enclosure a, const Enclosure& b) { return a /= b; }
    Enclosure operator-() const;

    std::string str() const;

private:
    Rational lo_;
    Rational hi_;
    unsigned bits_ = 0;
};

Enclosure pow(const Enclosure& e, unsigned k);

/// Floor/ceiling to a dyadic with about `bits` significant bits.
Rational round_down(const Rational& q, unsigned bits);
Rational round_up(const Rational& q, unsigned bits);

/// e^x. Width <= 2^-bits * max(1, e^x). Argument halving to |y| <= 1/2, a
/// truncated Taylor sum with geometric remainder bound, then repeated squaring.
Enclosure enclose_exp(const Rational& x, unsigned bits = kDefaultBits);

/// log x for x > 0 via 2 atanh((m-1)/(m+1)) after scaling by a power of two.
/// Width <= 2^-bits * max(1, |log x|). Throws std::domain_error for x <= 0.
Enclosure enclose_log(const Rational& x, unsigned bits = kDefaultBits);
/// Monotone extension: encloses log over the whole argument interval.
Enclosure enclose_log(const Enclosure& x, unsigned bits = kDefaultBits);

/// Square root, exact when x is a rational square. Throws for x < 0.
Enclosure enclose_sqrt(const Rational& x, unsigned bits = kDefaultBits);
Enclosure enclose_sqrt(const Enclosure& x, unsigned bits = kDefaultBits);

/// pi via Machin's formula with alternating-series remainders.
Enclosure enclose_pi(unsigned bits = kDefaultBits);

/// Runs attempt(bits) for bits = start, 2*start, ... up to cap until it
/// returns a value. Returns the value and the precision that produced it.
template <typename F>
auto with_adaptive_precision(F&& attempt, unsigned start = kDefaultBits, unsigned cap = kMaxBits)
    -> std::optional<std::pair<typename std::invoke_result_t<F, unsigned>::value_type, unsigned>>
{
    for (unsigned bits = start; bits <= cap; bits *= 2) {
        if (auto v = attempt(bits)) {
            return std::make_pair(std::move(*v), bits);
        }
    }
    return std::nullopt;
}

}  // namespace fanogap
