#include "fanogap/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace fanogap {

PiecewisePoly::PiecewisePoly(std::vector<Piece> pieces) : pieces_(std::move(pieces))
{
    if (pieces_.empty()) {
        throw std::invalid_argument("PiecewisePoly: no pieces");
    }
    if (!pieces_.front().start.is_zero()) {
        throw std::invalid_argument("PiecewisePoly: first breakpoint must be 0");
    }
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        const Rational& b = pieces_[i].start;
        if (!(pieces_[i - 1].start < b)) {
            throw std::invalid_argument("PiecewisePoly: breakpoints not strictly increasing");
        }
        if (pieces_[i - 1].poly(b) != pieces_[i].poly(b)) {
            throw std::invalid_argument("PiecewisePoly: discontinuity at breakpoint " + b.str());
        }
    }
}

std::vector<Rational> PiecewisePoly::breakpoints() const
{
    std::vector<Rational> b;
    b.reserve(pieces_.size());
    for (const auto& p : pieces_) {
        b.push_back(p.start);
    }
    return b;
}

std::size_t PiecewisePoly::piece_index(const Rational& x) const
{
    if (x.sign() < 0) {
        throw std::domain_error("PiecewisePoly: argument " + x.str() + " outside [0, inf)");
    }
    std::size_t i = pieces_.size() - 1;
    while (i > 0 && x < pieces_[i].start) {
        --i;
    }
    return i;
}

std::vector<Piece> PiecewisePoly::derivative_pieces() const
{
    std::vector<Piece> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_) {
        out.push_back({p.start, p.poly.derivative()});
    }
    return out;
}

PiecewisePoly PiecewisePoly::antiderivative() const
{
    std::vector<Piece> out;
    out.reserve(pieces_.size());
    Rational carry;  // value of the antiderivative at the current piece start
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const Poly anti = pieces_[i].poly.antiderivative();
        const Rational& s = pieces_[i].start;
        out.push_back({s, anti + Poly(carry - anti(s))});
        if (i + 1 < pieces_.size()) {
            carry = out.back().poly(pieces_[i + 1].start);
        }
    }
    return PiecewisePoly(std::move(out));
}

Rational PiecewisePoly::integrate(const Rational& a, const Rational& b) const
{
    const PiecewisePoly anti = antiderivative();
    return anti(b) - anti(a);
}

PiecewisePoly PiecewisePoly::refined(const std::vector<Rational>& breakpoints) const
{
    std::vector<Piece> out;
    out.reserve(breakpoints.size());
    for (const auto& b : breakpoints) {
        out.push_back({b, piece_at(b)});
    }
    for (const auto& p : pieces_) {
        if (std::find(breakpoints.begin(), breakpoints.end(), p.start) == breakpoints.end()) {
            throw std::invalid_argument("PiecewisePoly::refined: breakpoint set must contain " + p.start.str());
        }
    }
    return PiecewisePoly(std::move(out));
}

PiecewisePoly& PiecewisePoly::operator*=(const Poly& p)
{
    for (auto& piece : pieces_) {
        piece.poly *= p;
    }
    return *this;
}

namespace {

std::vector<Rational> merged_breakpoints(const PiecewisePoly& a, const PiecewisePoly& b)
{
    std::vector<Rational> all = a.breakpoints();
    const auto other = b.breakpoints();
    all.insert(all.end(), other.begin(), other.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

}  // namespace

PiecewisePoly operator+(const PiecewisePoly& a, const PiecewisePoly& b)
{
    std::vector<Piece> out;
    for (const auto& bp : merged_breakpoints(a, b)) {
        out.push_back({bp, a.piece_at(bp) + b.piece_at(bp)});
    }
    return PiecewisePoly(std::move(out));
}

PiecewisePoly operator-(const PiecewisePoly& a, const PiecewisePoly& b)
{
    std::vector<Piece> out;
    for (const auto& bp : merged_breakpoints(a, b)) {
        out.push_back({bp, a.piece_at(bp) - b.piece_at(bp)});
    }
    return PiecewisePoly(std::move(out));
}

bool operator==(const PiecewisePoly& a, const PiecewisePoly& b)
{
    for (const auto& bp : merged_breakpoints(a, b)) {
        if (a.piece_at(bp) != b.piece_at(bp)) {
            return false;
        }
    }
    return true;
}

}  // namespace fanogap
