#include "fanogap/poly.hpp"

#include <sstream>

namespace fanogap {

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

Poly Poly::monomial(const Rational& c, unsigned degree)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::shifted_power(const Rational& a, unsigned k)
{
    // (x - a)^k = sum_j C(k, j) (-a)^(k-j) x^j
    std::vector<Rational> v(k + 1);
    const Rational neg = -a;
    Rational p = 1;
    for (unsigned i = 0; i <= k; ++i) {
        const unsigned j = k - i;  // power of x
        v[j] = Rational(binomial(k, j)) * p;
        p *= neg;
    }
    return Poly(std::move(v));
}

Rational Poly::operator()(const Rational& x) const
{
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1) {
        return {};
    }
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    }
    return Poly(std::move(v));
}

Poly Poly::antiderivative() const
{
    if (c_.empty()) {
        return {};
    }
    std::vector<Rational> v(c_.size() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        v[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
    }
    return Poly(std::move(v));
}

Rational Poly::integrate(const Rational& a, const Rational& b) const
{
    const Poly anti = antiderivative();
    return anti(b) - anti(a);
}

Poly Poly::compose_affine(const Rational& s, const Rational& t) const
{
    Poly result;
    const Poly inner{t, s};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        result = result * inner;
        result += Poly(*it);
    }
    return result;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.c_.empty() || b.c_.empty()) {
        return {};
    }
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            v[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rational& s)
{
    for (auto& c : c_) {
        c *= s;
    }
    trim();
    return *this;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& c : r.c_) {
        c = -c;
    }
    return r;
}

std::string Poly::str(const std::string& var) const
{
    if (c_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i].str() << ")";
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Poly pow(const Poly& p, unsigned e)
{
    Poly result{1};
    Poly base = p;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

}  // namespace fanogap
