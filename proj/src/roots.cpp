#include "fanogap/roots.hpp"

#include <stdexcept>

namespace fanogap {

Enclosure isolate_increasing_root(const ExactFn& f, Rational lo, Rational hi, const Rational& width)
{
    if (!(lo < hi)) {
        throw std::invalid_argument("isolate_increasing_root: empty bracket");
    }
    if (width.sign() <= 0) {
        throw std::invalid_argument("isolate_increasing_root: width must be positive");
    }
    const Rational flo = f(lo);
    const Rational fhi = f(hi);
    if (flo.sign() > 0 || fhi.sign() < 0) {
        throw std::invalid_argument("isolate_increasing_root: no sign change on [" + lo.str() + ", " +
                                    hi.str() + "]");
    }
    if (flo.is_zero()) {
        return Enclosure(lo, lo);
    }
    if (fhi.is_zero()) {
        return Enclosure(hi, hi);
    }
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / Rational(2);
        const int s = f(mid).sign();
        if (s == 0) {
            return Enclosure(mid, mid);
        }
        if (s < 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return Enclosure(lo, hi);
}

std::vector<Rational> bernstein_coefficients(const Poly& p)
{
    // b_k = sum_{i<=k} C(k,i)/C(m,i) a_i
    const int m = std::max(p.degree(), 0);
    std::vector<Rational> b(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        Rational s;
        for (int i = 0; i <= k; ++i) {
            s += Rational(binomial(k, i)) / Rational(binomial(m, i)) * p.coeff(static_cast<std::size_t>(i));
        }
        b[static_cast<std::size_t>(k)] = s;
    }
    return b;
}

namespace {

bool nonneg_unit(const Poly& q, int depth)
{
    if (q.is_zero()) {
        return true;
    }
    const auto b = bernstein_coefficients(q);
    if (b.front().sign() < 0 || b.back().sign() < 0) {
        return false;
    }
    bool all_nonneg = true;
    for (const auto& c : b) {
        if (c.sign() < 0) {
            all_nonneg = false;
            break;
        }
    }
    if (all_nonneg) {
        return true;
    }
    if (depth == 0) {
        return false;
    }
    const Rational half(Integer(1), Integer(2));
    return nonneg_unit(q.compose_affine(half, Rational(0)), depth - 1) &&
           nonneg_unit(q.compose_affine(half, half), depth - 1);
}

}  // namespace

bool nonnegative_on(const Poly& p, const Rational& a, const Rational& b, int max_depth)
{
    if (b < a) {
        throw std::invalid_argument("nonnegative_on: b < a");
    }
    if (a == b) {
        return p(a).sign() >= 0;
    }
    return nonneg_unit(p.compose_affine(b - a, a), max_depth);
}

bool nonnegative_on(const PiecewisePoly& f, const Rational& end, int max_depth)
{
    const auto& pieces = f.pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Rational& a = pieces[i].start;
        if (!(a < end)) {
            break;
        }
        const Rational b = (i + 1 < pieces.size()) ? min(pieces[i + 1].start, end) : end;
        if (!nonnegative_on(pieces[i].poly, a, b, max_depth)) {
            return false;
        }
    }
    return true;
}

}  // namespace fanogap
