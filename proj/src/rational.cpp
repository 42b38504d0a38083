#include "fanogap/rational.hpp"

#include <stdexcept>

namespace fanogap {

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.pop_back();
    }
    std::size_t start = 0;
    while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) {
        ++start;
    }
    s = s.substr(start);
    if (s.empty()) {
        throw std::invalid_argument("Rational::parse: empty string");
    }
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') return false;
        }
        return true;
    };
    auto to_int = [](std::string t) {
        if (!t.empty() && t[0] == '+') t = t.substr(1);
        return Integer(t, 10);
    };
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw std::invalid_argument("Rational::parse: bad integer '" + s + "'");
        return Rational(to_int(s));
    }
    const std::string n = s.substr(0, slash);
    const std::string d = s.substr(slash + 1);
    if (!valid_int(n) || !valid_int(d) || d[0] == '-' || d[0] == '+') {
        throw std::invalid_argument("Rational::parse: bad fraction '" + s + "'");
    }
    const Integer den = to_int(d);
    if (den == 0) {
        throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    }
    return Rational(to_int(n), den);
}

Rational Rational::abs() const
{
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("Rational: inverse of zero");
    }
    Rational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

Integer Rational::floor() const
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

std::string Rational::str() const
{
    if (v_.get_den() == 1) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rational Rational::operator-() const
{
    Rational r;
    mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

Rational pow(const Rational& q, long e)
{
    if (e < 0) {
        return pow(q.inverse(), -e);
    }
    Integer n;
    Integer d;
    mpz_pow_ui(n.get_mpz_t(), q.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer ipow(long base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), Integer(base).get_mpz_t(), e);
    return r;
}

Rational beta_int(long a, long b)
{
    if (a < 1 || b < 1) {
        throw std::invalid_argument("beta_int: arguments must be positive integers");
    }
    return Rational(factorial(a - 1) * factorial(b - 1), factorial(a + b - 1));
}

}  // namespace fanogap
