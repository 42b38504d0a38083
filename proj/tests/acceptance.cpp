// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "fanogap/blowup.hpp"
#include "fanogap/dh.hpp"
#include "fanogap/formulas.hpp"
#include "fanogap/gap.hpp"
#include "fanogap/headline.hpp"
#include "fanogap/threshold.hpp"
#include "fanogap/toric.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

using namespace fanogap;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what)
{
    if (!cond && o.pass) {
        o.pass = false;
        o.detail = what;
    }
}

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Rational two_nn(int n) { return two_n_pow_n(n); }

Outcome criterion1()
{
    Outcome o;
    for (int n = 3; n <= 10; ++n) {
        const ThresholdResult f = solve_T(fujita_model(n));
        require(o, f.T.contains(Rational(n + 1)) && f.phi_at_T.contains(Rational(ipow(n + 1, n))),
                "projective space n=" + std::to_string(n));
        require(o, f.T.width() <= default_width(), "width n=" + std::to_string(n));
        const ThresholdResult t = solve_T(build_model(n, 2, 1));
        require(o, t.T.contains(Rational(n)) && t.phi_at_T.contains(two_nn(n)), "degree two n=" + std::to_string(n));
        require(o, t.T.width() <= default_width(), "width n=" + std::to_string(n));
    }
    return o;
}

Outcome criterion2()
{
    Outcome o;
    const int dr[] = {101, 89, 91, 97, 106, 117, 128};
    const int rd[] = {16, 20, 27, 34, 43, 52};
    std::ostringstream got;
    for (int r = 4; r <= 10; ++r) {
        const TableEntry e = d_threshold(r);
        got << (e.integer ? *e.integer : -1) << " ";
        require(o, e.integer && *e.integer == dr[r - 4], "d(" + std::to_string(r) + ")");
    }
    for (int d = 3; d <= 8; ++d) {
        const TableEntry e = r_threshold(d);
        got << (e.integer ? *e.integer : -1) << " ";
        require(o, e.integer && *e.integer == rd[d - 3], "r(" + std::to_string(d) + ")");
    }
    if (o.pass) {
        o.detail = got.str();
    }
    return o;
}

Outcome criterion3()
{
    Outcome o;
    const auto certs = sweep(40, std::nullopt, jobs());
    long pairs = 0;
    for (const Certificate& c : certs) {
        if (c.d <= c.n - 2) {
            ++pairs;
            require(o, c.route == "exact-S-and-psi", "route (" + std::to_string(c.n) + "," + std::to_string(c.d) + ")");
        }
        require(o, c.verdict == Verdict::Certified, "(" + std::to_string(c.n) + "," + std::to_string(c.d) + ")");
        require(o, revalidate(to_json(c)), "revalidate");
    }
    long expected = 0;
    for (int n = 5; n <= 40; ++n) {
        expected += n - 4;
    }
    require(o, pairs == expected, "pair count");
    for (const GridReplay& g : replay_case_iv(jobs())) {
        require(o, g.passed == g.cases && g.cases > 0, "grid " + g.name);
    }
    if (o.pass) {
        o.detail = std::to_string(pairs) + " pairs, " + std::to_string(certs.size()) + " certificates";
    }
    return o;
}

Outcome criterion4()
{
    Outcome o;
    for (int r = 2; r <= 30; ++r) {
        for (int d = 3; d <= 30; ++d) {
            const Rational s = s_exact(r, d);
            require(o, s == s_from_model(r, d) && s == s_from_integral(r, d),
                    "(r,d)=(" + std::to_string(r) + "," + std::to_string(d) + ")");
        }
    }
    return o;
}

Outcome criterion5()
{
    Outcome o;
    for (int n = 4; n <= 40; ++n) {
        const Certificate c = certify_d_n_minus_1(n);
        require(o, c.verdict == Verdict::Certified, "n=" + std::to_string(n));
        const std::string want = n <= 18 ? "F(n) < 2n^n" : "gamma(n) < 1";
        bool found = false;
        for (const Condition& k : c.conditions) {
            found = found || k.name == want;
        }
        require(o, found, "route at n=" + std::to_string(n));
    }
    return o;
}

Outcome criterion6()
{
    Outcome o;
    for (int n = 3; n <= 12; ++n) {
        const Certificate c = certify_singular_deg2(n);
        require(o, c.verdict == Verdict::Certified, "n=" + std::to_string(n));
        const Enclosure& f = c.conditions.at(1).lhs;
        require(o, f.is_exact() && f.lo() == Rational(2 * (n - 1)) / Rational(n) && f.lo() < Rational(n - 1),
                "hand-off n=" + std::to_string(n));
    }
    return o;
}

Outcome criterion7()
{
    Outcome o;
    for (int n = 3; n <= 7; ++n) {
        const HalfspaceRep H = builtin("BlPn-2Pn", n);
        const PolytopeGeometry g = volume_barycenter(H);
        const Rational a = Rational(n - 1) / Rational(4 * (n + 1));
        const Rational b = -Rational(1) / Rational(2 * (n + 1));
        bool bc = g.barycenter[0] == a && g.barycenter[1] == a;
        for (int i = 2; i < n; ++i) {
            bc = bc && g.barycenter[static_cast<std::size_t>(i)] == b;
        }
        require(o, bc, "barycenter n=" + std::to_string(n));
        require(o, delta_toric(H).delta == Rational(2 * n + 2) / Rational(3 * n + 1), "delta n=" + std::to_string(n));
        const PolytopeGeometry p = volume_barycenter(builtin("P1xPn-1", n));
        require(o, p.volume == two_nn(n) / Rational(factorial(n)), "product volume n=" + std::to_string(n));
        bool zero = true;
        for (const Rational& c : p.barycenter) {
            zero = zero && c.is_zero();
        }
        require(o, zero, "product barycenter n=" + std::to_string(n));
    }
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> entry(-3, 3);
    const std::vector<std::string> names = {"Pn", "P1xPn-1", "BlPn-2Pn"};
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + trial % 2;
        IMat M;
        for (;;) {
            M.assign(n, IVec(n));
            std::vector<RVec> rows(n, RVec(n));
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    const long v = entry(rng);
                    M[i][j] = v;
                    rows[i][j] = Rational(v);
                }
            }
            const Rational det = determinant(rows);
            if (det == Rational(1) || det == Rational(-1)) {
                break;
            }
        }
        const HalfspaceRep H = builtin(names[static_cast<std::size_t>(trial) % names.size()], n);
        const HalfspaceRep T = transform(H, M);
        require(o, volume_barycenter(H).volume == volume_barycenter(T).volume, "volume invariance");
        require(o, delta_toric(H).delta == delta_toric(T).delta, "delta invariance");
    }
    return o;
}

Outcome criterion8()
{
    Outcome o;
    for (int n = 3; n <= 15; ++n) {
        for (int dy = 1; dy <= n; ++dy) {
            require(o, vol_blowup_hyperplane_subvariety(n, dy) == vol_blowup_segre(n, dy),
                    "blowup n=" + std::to_string(n) + " dY=" + std::to_string(dy));
        }
        require(o, s_invariant_bl(n) == Rational(1) + Rational(n - 1) / Rational(2 * (n + 1)),
                "S n=" + std::to_string(n));
    }
    for (int n = 2; n <= 20; ++n) {
        const CSequence c = c_sequence(n);
        require(o, c.strict_chain && c.symmetric, "c-sequence n=" + std::to_string(n));
    }
    for (int n = 2; n <= 20; n += 2) {
        std::vector<long> w(static_cast<std::size_t>(n), 1);
        w.push_back(2);
        w.push_back(n + 1);
        require(o, vol_weighted_hypersurface(w, 2 * n + 2) == Rational(1), "weighted n=" + std::to_string(n));
    }
    return o;
}

Outcome criterion9()
{
    Outcome o;
    std::optional<Rational> constant;
    for (int n = 3; n <= 10; ++n) {
        QuadricDH q;
        try {
            q = build_quadric_dh(n);
        } catch (const std::exception& e) {
            require(o, false, e.what());
            continue;
        }
        const Rational nf(factorial(n));
        const auto dv = q.vol_fn.derivative_pieces();
        for (std::size_t i = 0; i < dv.size(); ++i) {
            require(o, -(Rational(1) / nf) * dv[i].poly == q.rho.pieces()[i].poly, "rho n=" + std::to_string(n));
        }
        require(o, q.rho.integrate(0, 2) == Rational(2) / nf, "mass n=" + std::to_string(n));
        require(o, q.rho.pieces()[0].poly.compose_affine(-1, 2) == q.rho.pieces()[1].poly,
                "symmetry n=" + std::to_string(n));
        const FNonnegReport F = check_F_nonneg(n);
        require(o, F.F_at_n_zero && F.F_prime_at_n_zero && F.F_second_closed_form, "F n=" + std::to_string(n));
        const LocalizationReport L = check_localization_identity(n);
        require(o, L.ok && L.expansion_constant.has_value(), "localization n=" + std::to_string(n));
        if (L.expansion_constant) {
            if (!constant) {
                constant = L.expansion_constant;
            }
            require(o, *constant == *L.expansion_constant, "constant unstable at n=" + std::to_string(n));
            if (L.fg_constant) {
                require(o, *L.fg_constant == *constant, "f+g constant at n=" + std::to_string(n));
            }
        }
    }
    if (o.pass && constant) {
        o.detail = "sign constant " + constant->str();
    }
    return o;
}

Outcome criterion10()
{
    Outcome o;
    for (int n = 3; n <= 40; ++n) {
        const HeadlineReport r = headline_check(n);
        require(o, r.ok && r.second_largest == two_nn(n), "n=" + std::to_string(n));
    }
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                             criterion5, criterion6, criterion7, criterion8,
                                                             criterion9, criterion10};
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) {
            ++failed;
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << " (" << secs << " s)";
        if (!o.detail.empty()) {
            std::cout << ": " << o.detail;
        }
        std::cout << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
