#pragma once

#include "fanogap/poly.hpp"

#include <vector>

namespace fanogap {

struct Piece {
    Rational start;
    Poly poly;
};

/// Continuous piecewise polynomial on [0, inf). Piece i is active on
/// [start_i, start_{i+1}); the last piece extends to infinity. Breakpoints are
/// strictly increasing, the first is 0, and neighbouring pieces agree at every
/// shared breakpoint (checked exactly by the constructor).
class PiecewisePoly {
public:
    PiecewisePoly() : PiecewisePoly(std::vector<Piece>{{Rational(0), Poly()}}) {}
    explicit PiecewisePoly(std::vector<Piece> pieces);
    PiecewisePoly(const Poly& p) : PiecewisePoly(std::vector<Piece>{{Rational(0), p}}) {}  // NOLINT

    const std::vector<Piece>& pieces() const { return pieces_; }
    std::size_t size() const { return pieces_.size(); }
    std::vector<Rational> breakpoints() const;

    /// Index of the piece used at x; a breakpoint belongs to the piece on its right.
    std::size_t piece_index(const Rational& x) const;
    const Poly& piece_at(const Rational& x) const { return pieces_[piece_index(x)].poly; }

    Rational operator()(const Rational& x) const { return piece_at(x)(x); }
    /// Right derivative at x.
    Rational derivative_at(const Rational& x) const { return piece_at(x).derivative()(x); }

    /// Piecewise derivative. Not necessarily continuous, so returned as raw pieces.
    std::vector<Piece> derivative_pieces() const;
    /// Continuous antiderivative with value 0 at x = 0.
    PiecewisePoly antiderivative() const;
    Rational integrate(const Rational& a, const Rational& b) const;

    /// Restates this function on a refined breakpoint set (must contain ours).
    PiecewisePoly refined(const std::vector<Rational>& breakpoints) const;

    PiecewisePoly& operator*=(const Poly& p);
    friend PiecewisePoly operator*(PiecewisePoly f, const Poly& p) { return f *= p; }
    friend PiecewisePoly operator*(const Poly& p, PiecewisePoly f) { return f *= p; }
    friend PiecewisePoly operator+(const PiecewisePoly& a, const PiecewisePoly& b);
    friend PiecewisePoly operator-(const PiecewisePoly& a, const PiecewisePoly& b);

    friend bool operator==(const PiecewisePoly& a, const PiecewisePoly& b);

private:
    std::vector<Piece> pieces_;
};

}  // namespace fanogap
