#pragma once

#include "fanogap/enclosure.hpp"

#include <doctest.h>

#include <random>
#include <string>

namespace testsupport {

using fanogap::Enclosure;
using fanogap::Integer;
using fanogap::Rational;

// Exact value of a decimal literal such as "-0.1199".
inline Rational dec(const std::string& s)
{
    const bool neg = !s.empty() && s[0] == '-';
    const std::string body = neg ? s.substr(1) : s;
    const auto dot = body.find('.');
    std::string digits = body;
    unsigned long frac = 0;
    if (dot != std::string::npos) {
        digits = body.substr(0, dot) + body.substr(dot + 1);
        frac = body.size() - dot - 1;
    }
    Rational q(Integer(digits, 10), fanogap::ipow(10, frac));
    return neg ? -q : q;
}

// The reference value, known to +-tol, is compatible with the enclosure.
inline bool consistent(const Enclosure& e, const std::string& ref, const Rational& tol)
{
    const Rational r = dec(ref);
    return e.lo() <= r + tol && r - tol <= e.hi();
}

inline bool close(const Rational& a, const std::string& ref, const Rational& rel)
{
    const Rational r = dec(ref);
    return (a - r).abs() <= rel * fanogap::max(Rational(1), r.abs());
}

inline Rational tenpow(int k) { return Rational(Integer(1), fanogap::ipow(10, static_cast<unsigned long>(k))); }

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long den_max = 97)
{
    std::uniform_int_distribution<long> den(1, den_max);
    const long q = den(rng);
    std::uniform_int_distribution<long> num(lo * q, hi * q);
    return Rational(Integer(num(rng)), Integer(q));
}

}  // namespace testsupport
