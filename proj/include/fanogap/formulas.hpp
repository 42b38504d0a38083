#pragma once

#include "fanogap/rational.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace fanogap {

struct Comparison {
    std::string bound_name;
    Rational bound;
    bool strictly_less = false;
};

struct VolumeReport {
    std::string family;
    std::map<std::string, std::string> parameters;
    int n = 0;
    Rational volume;
    std::vector<Comparison> comparisons;

    /// Odd dimension forces an even volume for smooth X; false flags bad input.
    bool parity_ok() const;
};

/// Comparisons are evaluated exactly here.
VolumeReport make_report(std::string family, int n, std::map<std::string, std::string> parameters,
                         const Rational& volume, const std::vector<std::pair<std::string, Rational>>& bounds);

struct CSequence {
    std::vector<Integer> c;  // c_0 .. c_n
    bool symmetric = false;
    bool strict_chain = false;  // c_0 > c_1 > ... > c_floor(n/2)
};

/// c_r = C(n,r) (r+1)^r (n-r+1)^(n-r).
CSequence c_sequence(int n);

/// Volume of the blowup of P^n along Y of degree d_Y in a hyperplane.
Rational vol_blowup_hyperplane_subvariety(int n, int d_Y);
/// Same volume from the Segre-class expansion.
Rational vol_blowup_segre(int n, int d_Y);

/// S(-K_X; E) for the blowup of P^n along P^(n-2), by exact integration.
Rational s_invariant_bl(int n);
/// A - S with A = 1.
Rational beta_bl(int n);

/// Degree-b hypersurface in P^(n+1): b (n+2-b)^n.
Rational vol_hypersurface(int n, int b);
/// degree (sum w - degree)^m / prod w with m = #weights - 2.
Rational vol_weighted_hypersurface(const std::vector<long>& weights, long degree);
/// Double cover of P^n branched along a divisor of degree deg_D: 2 (n+1 - deg_D/2)^n.
Rational vol_double_cover(int n, long deg_D);

/// r * vol.
Rational cone_normalized_volume(int fano_index, const Rational& vol);
/// ((n+1)/n)^n nvol.
Rational fujita_liu_bound(int n, const Rational& nvol);
/// (16/27)(n+1)^n.
Rational singular_toric_bound(int n);

/// (r+1)^r C(n,r) d_Z.
Rational vol_product(int n, int r, const Integer& d_Z);

Rational two_n_pow_n(int n);

nlohmann::json to_json(const VolumeReport& r);

}  // namespace fanogap
