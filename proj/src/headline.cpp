#include "fanogap/headline.hpp"

#include "fanogap/blowup.hpp"
#include "fanogap/formulas.hpp"
#include "fanogap/threshold.hpp"

#include <stdexcept>

namespace fanogap {

namespace {

std::string tag(const std::string& name, int k) { return name + "(" + std::to_string(k) + ")"; }

}  // namespace

HeadlineReport headline_check(int n)
{
    if (n < 3) {
        throw std::invalid_argument("headline_check: n must be >= 3");
    }
    const Rational target = two_n_pow_n(n);
    HeadlineReport rep;
    rep.n = n;
    rep.largest = Rational(ipow(n + 1, static_cast<unsigned long>(n)));

    std::vector<Candidate> all;
    all.push_back({"P^n", rep.largest, false});
    const ThresholdResult fuj = solve_T(fujita_model(n));
    if (!fuj.phi_at_T.is_exact()) {
        throw std::logic_error("headline_check: d = 1 threshold not exact");
    }
    all.push_back({"blowup model d=1", fuj.phi_at_T.lo(), false});

    all.push_back({"product P^(n-1) x P^1", vol_product(n, n - 1, Integer(2)), false});
    all.push_back({"quadric", vol_hypersurface(n, 2), false});
    const ThresholdResult t2 = solve_T(build_model(n, 2, 1));
    if (!t2.phi_at_T.is_exact()) {
        throw std::logic_error("headline_check: d = 2 threshold not exact");
    }
    all.push_back({"blowup model d=2", t2.phi_at_T.lo(), false});

    const CSequence cs = c_sequence(n);
    for (int r = 1; r + 1 <= n; ++r) {
        all.push_back({tag("product c", r), Rational(cs.c[static_cast<std::size_t>(r)]), false});
    }
    for (int dy = 1; dy <= n; ++dy) {
        all.push_back({tag("Bl_Y P^n, deg Y", dy), vol_blowup_hyperplane_subvariety(n, dy), false});
    }
    for (int b = 3; b <= n; ++b) {
        all.push_back({tag("hypersurface b", b), vol_hypersurface(n, b), false});
    }
    all.push_back({"singular toric bound", singular_toric_bound(n), true});

    for (int d = 3; d <= n - 1; ++d) {
        rep.certificates.push_back(d == n - 1 ? certify_d_n_minus_1(n) : certify_pair(n, d));
    }
    rep.certificates.push_back(certify_singular_deg2(n));

    bool ok = true;
    for (const Certificate& c : rep.certificates) {
        if (c.verdict != Verdict::Certified) {
            ok = false;
        }
        for (const Condition& k : c.conditions) {
            if (k.rhs == target) {
                all.push_back({"certified " + c.route + " d=" + std::to_string(c.d) + ": " + k.name, k.lhs.hi(), true});
            }
        }
    }

    Rational second;
    bool have_second = false;
    for (const Candidate& c : all) {
        if (c.value > rep.largest) {
            ok = false;
        }
        if (c.value == rep.largest) {
            continue;
        }
        if (c.value == target) {
            rep.at_two_n_n.push_back(c);
        } else if (c.value < target) {
            rep.strictly_below.push_back(c);
        } else {
            ok = false;
        }
        if (!have_second || second < c.value) {
            second = c.value;
            have_second = true;
        }
    }
    rep.second_largest = second;
    rep.ok = ok && have_second && second == target && rep.largest > target && !rep.at_two_n_n.empty();
    return rep;
}

nlohmann::json to_json(const HeadlineReport& r)
{
    auto list = [](const std::vector<Candidate>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const Candidate& c : v) {
            a.push_back({{"family", c.family}, {"value", c.value.str()}, {"upper_bound", c.is_upper_bound}});
        }
        return a;
    };
    nlohmann::json certs = nlohmann::json::array();
    for (const Certificate& c : r.certificates) {
        certs.push_back(to_json(c));
    }
    return {{"schema", kSchema},
            {"n", r.n},
            {"largest", r.largest.str()},
            {"second_largest", r.second_largest.str()},
            {"at_two_n_n", list(r.at_two_n_n)},
            {"strictly_below", list(r.strictly_below)},
            {"certificates", certs},
            {"ok", r.ok}};
}

}  // namespace fanogap
