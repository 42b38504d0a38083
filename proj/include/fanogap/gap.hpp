#pragma once

/**
 * @file gap.hpp
 * @brief Certification of phi(T) < 2n^n for minimal rational curves of degree
 *        3 <= d <= n-1, and of the singular degree-2 family.
 *
 * Pairs (n, d) are written with r = n + 1 - d. The finite sweep uses exact
 * rational arithmetic only; the asymptotic bounds (Cramer tilt, R-infinity
 * thresholds) are evaluated with enclosures.
 */

#include "fanogap/blowup.hpp"
#include "fanogap/enclosure.hpp"
#include "fanogap/threshold.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fanogap {

inline constexpr const char* kSchema = "fano-gap/1";

enum class Verdict { Certified, Refuted, Undecided };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

/// One recorded strict inequality lhs < rhs. An exact witness is a point
/// enclosure.
struct Condition {
    std::string name;
    Enclosure lhs;
    Rational rhs;

    bool holds() const { return lhs.hi() < rhs; }
    bool fails() const { return !(lhs.lo() < rhs); }
};

struct Certificate {
    int n = 0;
    int d = 0;
    Verdict verdict = Verdict::Undecided;
    std::string route;
    std::vector<Condition> conditions;
    unsigned bits = 0;
};

/// Verdict implied by the conditions alone: certified when all hold,
/// refuted when one fails outright, undecided otherwise.
Verdict judge(const std::vector<Condition>& conditions);

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);
/// Re-checks every condition from its serialized witness and confirms the
/// stored verdict. No heavy recomputation.
bool revalidate(const nlohmann::json& j);

// ---- S(r, d) = Phi(x1) - phi(x1), x1 = 2n - d + 2 ----------------------

/// Closed binomial sum for S.
Rational s_exact(int r, int d);
/// Phi(x1) - phi(x1) from the (n, d, 2) model.
Rational s_from_model(int r, int d);
/// Exact expansion of the z-integral representation.
Rational s_from_integral(int r, int d);

struct X1Check {
    Rational psi_x1;
    bool negative;
};

/// Psi(2n - d + 2) for the (n, d, 2) model.
X1Check check_x1_below_T(int n, int d);

/// Exact pair Psi(x1) < 0 and S < 2n^n. Requires 3 <= d <= n-2.
Certificate certify_pair(int n, int d);

// ---- Asymptotic thresholds ----------------------------------------------

/// Rational part of R-infinity(r): sum_k (k+1)(k+r+1) r^(r-k) / (2^k (r-k)!) / (2(r+1)).
Rational r_infty_r_coefficient(int r);
Enclosure r_infty_r(int r, unsigned bits = kDefaultBits);

struct TableEntry {
    int key = 0;
    Enclosure value;
    std::optional<int> integer;  // smallest integer strictly above value
    unsigned bits = 0;
    bool cited = false;
};

/// r(r+2) / (2(-log R-infinity(r))). Requires r >= 4.
TableEntry d_threshold(int r, unsigned start_bits = 64, unsigned cap = kMaxBits);

/// Integral of z^(d-3)(d-z) e^(-z/2) over [0, d] is A + B e^(-d/2).
std::pair<Rational, Rational> r_infty_d_parts(int d);
Enclosure r_infty_d(int d, unsigned bits = kDefaultBits);
/// (d-1)^2 / (2(-log R-infinity(d))). Requires d >= 3.
TableEntry r_threshold(int d, unsigned start_bits = 64, unsigned cap = kMaxBits);

/// d(3) = 68 row, taken as given and backed by the r = 3 chain below.
TableEntry d_threshold_r3();

/// (115 e^-2 / 16)(1 + (1/115)(m/(m+3))(219/m + 810/m^2 + 324/m^3)).
Enclosure r3_chain_bound(int m, unsigned bits = kDefaultBits);
/// S(3, d) / (2 n^n) == (n-2)^(n-2) (115n^3 - 126n^2 - 66n + 40) / (16 n^n (n+1)).
bool r3_identity_holds(int d);

struct CaseIBundle {
    int r = 0;
    int d = 0;
    Rational q, p, Delta, beta, eta, theta1, theta2, alpha1, tau1, alpha2, tau2;
};

CaseIBundle case1_bundle(int r, int d);
/// a_k = C(n+1, r-k) (1-q)^(n+1-r+k) q^(r-k).
Rational case1_a(const CaseIBundle& b, int k);

enum class Case1Side { DLarge, RLarge };
/// Final Case I bound as an enclosure; below 1 means the case is closed.
Enclosure case1_margin(Case1Side side, int value, unsigned bits = kDefaultBits);

/// e^(1/(12m+1)) < m! / (m^m e^-m sqrt(2 pi m)) < e^(1/(12m)) under enclosures.
bool robbins_holds(int m, unsigned bits = kDefaultBits);

// ---- d = n - 1 and singular degree 2 ------------------------------------

/// Root of tau^3 - 12 tau - 30 = 0 above 2.
Enclosure tau_infinity(unsigned bits);

Certificate certify_d_n_minus_1(int n, unsigned start_bits = kDefaultBits, unsigned cap = kMaxBits);
Certificate certify_singular_deg2(int n, const Rational& width = default_width());

// ---- sweeps --------------------------------------------------------------

/// Certificates for 5 <= n <= n_max: certify_pair for 3 <= d <= n-2 and
/// certify_d_n_minus_1 for d = n-1, ordered by (n, d). `d_filter` keeps a
/// single d. Work is split across `jobs` threads; output order is fixed.
std::vector<Certificate> sweep(int n_max, std::optional<int> d_filter = std::nullopt, unsigned jobs = 1);

struct GridReplay {
    std::string name;
    long cases = 0;
    long passed = 0;
    std::vector<std::pair<int, int>> failures;  // (r, d)
};

/// S / (2n^n) < 1 via the integral route over d in [3,8] x r in [3,52] and
/// r in [3,10] x d in [3,128].
std::vector<GridReplay> replay_case_iv(unsigned jobs = 1);

}  // namespace fanogap
