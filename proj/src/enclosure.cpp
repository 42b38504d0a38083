#include "fanogap/enclosure.hpp"

#include <algorithm>
#include <stdexcept>

namespace fanogap {

namespace {

Rational two_pow(long e)
{
    if (e >= 0) {
        return Rational(ipow(2, static_cast<unsigned long>(e)));
    }
    return Rational(Integer(1), ipow(2, static_cast<unsigned long>(-e)));
}

// Approximate binary exponent: |q| lies within a factor 4 of 2^e.
long exponent_estimate(const Rational& q)
{
    const long nb = static_cast<long>(mpz_sizeinbase(q.raw().get_num_mpz_t(), 2));
    const long db = static_cast<long>(mpz_sizeinbase(q.raw().get_den_mpz_t(), 2));
    return nb - db;
}

Rational scaled_round(const Rational& q, unsigned bits, bool up)
{
    if (q.is_zero()) {
        return q;
    }
    const long shift = static_cast<long>(bits) - exponent_estimate(q);
    const Rational scale = two_pow(shift);
    const Rational s = q * scale;
    const Integer k = up ? s.ceil() : s.floor();
    return Rational(k) / scale;
}

Rational max_abs(const Enclosure& e) { return max(e.lo().abs(), e.hi().abs()); }

// Taylor enclosure of e^y for |y| <= 1/2, internal width about 2^-wp.
Enclosure exp_small(const Rational& y, unsigned wp)
{
    const Rational tol = two_pow(-static_cast<long>(wp) - 4);
    Rational sum = 1;
    Rational term = 1;
    for (long i = 1;; ++i) {
        term *= y;
        term /= Rational(i);
        if (term.abs() <= tol) {
            // |sum_{j>=i} y^j/j!| <= |t_i| / (1 - |y|/(i+1)) <= 2 |t_i|
            const Rational bound = Rational(2) * term.abs();
            return Enclosure(round_down(sum - bound, wp), round_up(sum + bound, wp));
        }
        sum += term;
    }
}

// atanh(u) for |u| <= 1/3, width about 2^-wp.
Enclosure atanh_small(const Rational& u, unsigned wp)
{
    const Rational tol = two_pow(-static_cast<long>(wp) - 4);
    const Rational u2 = u * u;
    const Rational tail_factor = (Rational(1) - u2).inverse();
    Rational power = u;  // u^(2i+1)
    Rational sum;
    for (long i = 0;; ++i) {
        const Rational term = power / Rational(2 * i + 1);
        if (term.abs() <= tol) {
            // sum_{j>=i} |u|^(2j+1)/(2j+1) <= |term| / (1 - u^2)
            const Rational bound = term.abs() * tail_factor;
            return Enclosure(round_down(sum - bound, wp), round_up(sum + bound, wp));
        }
        sum += term;
        power *= u2;
    }
}

// atan(1/m) for integer m >= 2: alternating series with decreasing terms.
Enclosure atan_inv(long m, unsigned wp)
{
    const Rational tol = two_pow(-static_cast<long>(wp) - 4);
    const Rational inv = Rational(Integer(1), Integer(m));
    const Rational inv2 = inv * inv;
    Rational power = inv;
    Rational sum;
    for (long i = 0;; ++i) {
        const Rational term = power / Rational(2 * i + 1);
        if (term <= tol) {
            return Enclosure(round_down(sum - term, wp), round_up(sum + term, wp));
        }
        sum += (i % 2 == 0) ? term : -term;
        power *= inv2;
    }
}

bool width_ok(const Enclosure& e, unsigned bits, const Rational& magnitude)
{
    return e.width() <= two_pow(-static_cast<long>(bits)) * max(Rational(1), magnitude);
}

}  // namespace

Enclosure::Enclosure(Rational lo, Rational hi, unsigned bits)
    : lo_(std::move(lo)), hi_(std::move(hi)), bits_(bits)
{
    if (hi_ < lo_) {
        throw std::invalid_argument("Enclosure: lo > hi");
    }
}

Enclosure Enclosure::with_bits(unsigned bits) const
{
    Enclosure r = *this;
    r.bits_ = bits;
    return r;
}

Enclosure Enclosure::rounded(unsigned bits) const
{
    return Enclosure(round_down(lo_, bits), round_up(hi_, bits), bits_);
}

Enclosure& Enclosure::operator+=(const Enclosure& o)
{
    lo_ += o.lo_;
    hi_ += o.hi_;
    bits_ = std::max(bits_, o.bits_);
    return *this;
}

Enclosure& Enclosure::operator-=(const Enclosure& o)
{
    lo_ -= o.hi_;
    hi_ -= o.lo_;
    bits_ = std::max(bits_, o.bits_);
    return *this;
}

Enclosure& Enclosure::operator*=(const Enclosure& o)
{
    const Rational a = lo_ * o.lo_;
    const Rational b = lo_ * o.hi_;
    const Rational c = hi_ * o.lo_;
    const Rational d = hi_ * o.hi_;
    lo_ = min(min(a, b), min(c, d));
    hi_ = max(max(a, b), max(c, d));
    bits_ = std::max(bits_, o.bits_);
    return *this;
}

Enclosure& Enclosure::operator/=(const Enclosure& o)
{
    if (o.lo_.sign() <= 0 && o.hi_.sign() >= 0) {
        throw std::domain_error("Enclosure: division by an enclosure containing 0");
    }
    return *this *= Enclosure(o.hi_.inverse(), o.lo_.inverse(), o.bits_);
}

Enclosure Enclosure::operator-() const { return Enclosure(-hi_, -lo_, bits_); }

std::string Enclosure::str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

Enclosure pow(const Enclosure& e, unsigned k)
{
    Enclosure r(Rational(1));
    for (unsigned i = 0; i < k; ++i) {
        r *= e;
    }
    if (k % 2 == 0 && k > 0 && e.lo().sign() < 0 && e.hi().sign() > 0) {
        return Enclosure(Rational(0), r.hi(), r.bits());
    }
    return r;
}

Rational round_down(const Rational& q, unsigned bits) { return scaled_round(q, bits, false); }
Rational round_up(const Rational& q, unsigned bits) { return scaled_round(q, bits, true); }

Enclosure enclose_exp(const Rational& x, unsigned bits)
{
    if (x.is_zero()) {
        return Enclosure(Rational(1), Rational(1), bits);
    }
    // Smallest k with |x| / 2^k <= 1/2.
    long k = 0;
    const Rational half(Integer(1), Integer(2));
    Rational y = x;
    while (y.abs() > half) {
        y /= Rational(2);
        ++k;
    }
    for (unsigned guard = 24;; guard *= 2) {
        const unsigned wp = bits + static_cast<unsigned>(k) + guard;
        Enclosure r = exp_small(y, wp);
        for (long i = 0; i < k; ++i) {
            r = (r * r).rounded(wp);
        }
        if (width_ok(r, bits, r.hi())) {
            return r.with_bits(bits);
        }
    }
}

Enclosure enclose_log(const Rational& x, unsigned bits)
{
    if (x.sign() <= 0) {
        throw std::domain_error("enclose_log: argument must be positive, got " + x.str());
    }
    if (x == Rational(1)) {
        return Enclosure(Rational(0), Rational(0), bits);
    }
    // x = 2^k m with m in [2/3, 4/3], so |(m-1)/(m+1)| <= 1/7.
    long k = exponent_estimate(x);
    Rational m = x / two_pow(k);
    const Rational lo_m(Integer(2), Integer(3));
    const Rational hi_m(Integer(4), Integer(3));
    while (m > hi_m) {
        m /= Rational(2);
        ++k;
    }
    while (m < lo_m) {
        m *= Rational(2);
        --k;
    }
    const Rational u = (m - Rational(1)) / (m + Rational(1));
    const Rational third(Integer(1), Integer(3));
    const long kabs = k < 0 ? -k : k;
    unsigned kbits = 0;
    while ((1L << kbits) <= kabs) {
        ++kbits;
    }
    for (unsigned guard = 24;; guard *= 2) {
        const unsigned wp = bits + kbits + guard;
        const Enclosure log_m = Rational(2) * atanh_small(u, wp);
        const Enclosure log2 = Rational(2) * atanh_small(third, wp);
        Enclosure r = (Rational(k) * log2 + log_m).rounded(wp);
        if (width_ok(r, bits, max_abs(r))) {
            return r.with_bits(bits);
        }
    }
}

Enclosure enclose_log(const Enclosure& x, unsigned bits)
{
    if (x.lo().sign() <= 0) {
        throw std::domain_error("enclose_log: enclosure " + x.str() + " not strictly positive");
    }
    const Enclosure a = enclose_log(x.lo(), bits);
    const Enclosure b = enclose_log(x.hi(), bits);
    return Enclosure(a.lo(), b.hi(), bits);
}

Enclosure enclose_sqrt(const Rational& x, unsigned bits)
{
    if (x.sign() < 0) {
        throw std::domain_error("enclose_sqrt: negative argument " + x.str());
    }
    if (x.is_zero()) {
        return Enclosure(Rational(0), Rational(0), bits);
    }
    const Integer p = x.num();
    const Integer q = x.den();
    if (mpz_perfect_square_p(p.get_mpz_t()) != 0 && mpz_perfect_square_p(q.get_mpz_t()) != 0) {
        Integer sp;
        Integer sq;
        mpz_sqrt(sp.get_mpz_t(), p.get_mpz_t());
        mpz_sqrt(sq.get_mpz_t(), q.get_mpz_t());
        const Rational s(sp, sq);
        return Enclosure(s, s, bits);
    }
    // sqrt(p/q) = sqrt(p q 4^b) / (q 2^b); floor and floor+1 bracket it.
    const Integer scale = ipow(2, bits);
    const Integer n = p * q * scale * scale;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    const Integer den = q * scale;
    return Enclosure(Rational(r, den), Rational(r + 1, den), bits);
}

Enclosure enclose_sqrt(const Enclosure& x, unsigned bits)
{
    if (x.lo().sign() < 0) {
        throw std::domain_error("enclose_sqrt: enclosure " + x.str() + " has negative part");
    }
    const Enclosure a = enclose_sqrt(x.lo(), bits);
    const Enclosure b = enclose_sqrt(x.hi(), bits);
    return Enclosure(a.lo(), b.hi(), bits);
}

Enclosure enclose_pi(unsigned bits)
{
    for (unsigned guard = 16;; guard *= 2) {
        const unsigned wp = bits + guard;
        Enclosure r = Rational(16) * atan_inv(5, wp) - Rational(4) * atan_inv(239, wp);
        r = r.rounded(wp);
        if (width_ok(r, bits, Rational(1))) {
            return r.with_bits(bits);
        }
    }
}

}  // namespace fanogap
