#include "fanogap/gap.hpp"

#include "fanogap/parallel.hpp"
#include "fanogap/roots.hpp"

#include <stdexcept>

namespace fanogap {

namespace {

Rational two_n_n(int n) { return Rational(2) * Rational(ipow(n, static_cast<unsigned long>(n))); }

Rational dyadic(long e)
{
    return e >= 0 ? Rational(ipow(2, static_cast<unsigned long>(e)))
                  : Rational(Integer(1), ipow(2, static_cast<unsigned long>(-e)));
}

Rational fact(int k) { return Rational(factorial(static_cast<unsigned long>(k))); }

void require_rd(int r, int d, const char* who)
{
    if (r < 2 || d < 3) {
        throw std::invalid_argument(std::string(who) + ": requires r >= 2 and d >= 3");
    }
}

// Smallest integer strictly above every point of e, if e does not straddle one.
std::optional<int> integer_above(const Enclosure& e)
{
    const Integer a = e.lo().floor();
    const Integer b = e.hi().floor();
    if (a != b || e.hi().is_integer()) {
        return std::nullopt;
    }
    return static_cast<int>(a.get_si()) + 1;
}

Enclosure threshold_value(const Rational& numerator, const Enclosure& R, unsigned bits)
{
    if (!(R.hi() < Rational(1)) || R.lo().sign() <= 0) {
        throw std::domain_error("threshold: R-infinity not enclosed in (0, 1)");
    }
    const Enclosure neg_log = -enclose_log(R, bits);
    return (Enclosure(numerator) / (Rational(2) * neg_log)).rounded(bits).with_bits(bits);
}

}  // namespace

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Refuted: return "refuted";
    case Verdict::Undecided: return "undecided";
    }
    return "?";
}

Verdict parse_verdict(const std::string& s)
{
    if (s == "certified") return Verdict::Certified;
    if (s == "refuted") return Verdict::Refuted;
    if (s == "undecided") return Verdict::Undecided;
    throw std::invalid_argument("unknown verdict: " + s);
}

Verdict judge(const std::vector<Condition>& conditions)
{
    bool all = true;
    for (const auto& c : conditions) {
        if (c.fails()) {
            return Verdict::Refuted;
        }
        all = all && c.holds();
    }
    return all ? Verdict::Certified : Verdict::Undecided;
}

nlohmann::json to_json(const Certificate& c)
{
    nlohmann::json conds = nlohmann::json::array();
    for (const auto& k : c.conditions) {
        conds.push_back({{"name", k.name},
                         {"relation", "<"},
                         {"lhs", {{"lo", k.lhs.lo().str()}, {"hi", k.lhs.hi().str()}}},
                         {"rhs", k.rhs.str()},
                         {"exact", k.lhs.is_exact()}});
    }
    return {{"schema", kSchema},
            {"n", c.n},
            {"d", c.d},
            {"verdict", to_string(c.verdict)},
            {"route", c.route},
            {"bits", c.bits},
            {"conditions", conds}};
}

Certificate certificate_from_json(const nlohmann::json& j)
{
    Certificate c;
    c.n = j.at("n").get<int>();
    c.d = j.at("d").get<int>();
    c.verdict = parse_verdict(j.at("verdict").get<std::string>());
    c.route = j.at("route").get<std::string>();
    c.bits = j.at("bits").get<unsigned>();
    for (const auto& k : j.at("conditions")) {
        if (k.at("relation").get<std::string>() != "<") {
            throw std::invalid_argument("certificate: unsupported relation");
        }
        Condition cond;
        cond.name = k.at("name").get<std::string>();
        cond.lhs = Enclosure(Rational::parse(k.at("lhs").at("lo").get<std::string>()),
                             Rational::parse(k.at("lhs").at("hi").get<std::string>()));
        cond.rhs = Rational::parse(k.at("rhs").get<std::string>());
        c.conditions.push_back(std::move(cond));
    }
    return c;
}

bool revalidate(const nlohmann::json& j)
{
    const Certificate c = certificate_from_json(j);
    if (c.conditions.empty()) {
        return false;
    }
    return judge(c.conditions) == c.verdict;
}

// ---- S ---------------------------------------------------------------------

Rational s_exact(int r, int d)
{
    require_rd(r, d, "s_exact");
    const int n = r + d - 1;
    const Rational nf = fact(n);
    Rational sum;
    for (int j = 0; j <= r; ++j) {
        const Rational bracket = Rational(n) * Rational(n - j + 1) - Rational(d) * Rational(d - 2);
        sum += Rational(r + 1 - j) * bracket * nf / (fact(j) * fact(n + 1 - j)) *
               Rational(ipow(d, static_cast<unsigned long>(n - j))) *
               Rational(ipow(2 * r, static_cast<unsigned long>(j)));
    }
    return sum / (Rational(ipow(2, static_cast<unsigned long>(r))) * Rational(r + 1));
}

Rational s_from_model(int r, int d)
{
    require_rd(r, d, "s_from_model");
    const int n = r + d - 1;
    const BlowupModel m = build_model(n, d, 2);
    const Rational x1(2 * n - d + 2);
    return m.Phi(x1) - m.phi(x1);
}

Rational s_from_integral(int r, int d)
{
    require_rd(r, d, "s_from_integral");
    const int n = r + d - 1;
    const Rational x1(2 * r + d);
    const Poly z_pow = Poly::monomial(Rational(1), static_cast<unsigned>(d - 3));
    const Poly d_minus_z{Rational(d), Rational(-1)};
    Poly x1_minus_z = Poly::shifted_power(x1, static_cast<unsigned>(r));
    if (r % 2 == 1) {
        x1_minus_z = -x1_minus_z;
    }
    const Poly n_minus_z{Rational(n), Rational(-1)};
    const Rational integral = (z_pow * d_minus_z * x1_minus_z * n_minus_z).integrate(Rational(0), Rational(d));
    return fact(n) / (Rational(ipow(2, static_cast<unsigned long>(r))) * fact(d - 3) * fact(r + 1)) * integral;
}

X1Check check_x1_below_T(int n, int d)
{
    if (d < 3 || d > n - 1) {
        throw std::invalid_argument("check_x1_below_T: requires 3 <= d <= n-1");
    }
    const BlowupModel m = build_model(n, d, 2);
    const Rational x1(2 * n - d + 2);
    const Rational v = psi_fn(m)(x1);
    return {v, v.sign() < 0};
}

Certificate certify_pair(int n, int d)
{
    if (d < 3 || d > n - 2) {
        throw std::invalid_argument("certify_pair: requires 3 <= d <= n-2");
    }
    const BlowupModel m = build_model(n, d, 2);
    const Rational x1(2 * n - d + 2);
    const Rational phi_x1 = m.phi(x1);
    const Rational Phi_x1 = m.Phi(x1);
    const Rational psi_x1 = (x1 - m.A) * phi_x1 - Phi_x1;

    Certificate c;
    c.n = n;
    c.d = d;
    c.route = "exact-S-and-psi";
    c.conditions.push_back({"Psi(x1) < 0", Enclosure(psi_x1), Rational(0)});
    c.conditions.push_back({"S = Phi(x1) - phi(x1) < 2n^n", Enclosure(Phi_x1 - phi_x1), two_n_n(n)});
    c.verdict = judge(c.conditions);
    return c;
}

// ---- thresholds ------------------------------------------------------------

Rational r_infty_r_coefficient(int r)
{
    if (r < 1) {
        throw std::invalid_argument("r_infty_r: r must be positive");
    }
    Rational sum;
    for (int k = 0; k <= r; ++k) {
        sum += Rational(k + 1) * Rational(k + r + 1) * Rational(ipow(r, static_cast<unsigned long>(r - k))) /
               (Rational(ipow(2, static_cast<unsigned long>(k))) * fact(r - k));
    }
    return sum / (Rational(2) * Rational(r + 1));
}

Enclosure r_infty_r(int r, unsigned bits)
{
    return (Enclosure(r_infty_r_coefficient(r)) * enclose_exp(Rational(1 - r), bits + 8)).rounded(bits + 8).with_bits(bits);
}

TableEntry d_threshold(int r, unsigned start_bits, unsigned cap)
{
    if (r < 4) {
        throw std::invalid_argument("d_threshold: requires r >= 4");
    }
    TableEntry t;
    t.key = r;
    for (unsigned bits = start_bits; bits <= cap; bits *= 2) {
        t.value = threshold_value(Rational(r * (r + 2)), r_infty_r(r, bits), bits);
        t.bits = bits;
        t.integer = integer_above(t.value);
        if (t.integer) {
            break;
        }
    }
    return t;
}

std::pair<Rational, Rational> r_infty_d_parts(int d)
{
    if (d < 3) {
        throw std::invalid_argument("r_infty_d: requires d >= 3");
    }
    // int p(z) e^(-z/2) dz = -e^(-z/2) sum_k 2^(k+1) p^(k)(z)
    Poly p = Poly::monomial(Rational(1), static_cast<unsigned>(d - 3)) * Poly{Rational(d), Rational(-1)};
    Rational A;
    Rational B;
    Rational scale(2);
    while (!p.is_zero()) {
        A += scale * p(Rational(0));
        B -= scale * p(Rational(d));
        p = p.derivative();
        scale *= Rational(2);
    }
    return {A, B};
}

Enclosure r_infty_d(int d, unsigned bits)
{
    const auto [A, B] = r_infty_d_parts(d);
    const unsigned wp = bits + 8;
    const Rational half_d = Rational(d) / Rational(2);
    const Enclosure sum = Enclosure(A) * enclose_exp(Rational(1) - half_d, wp) +
                          Enclosure(B) * enclose_exp(Rational(1 - d), wp);
    return (sum / Enclosure(Rational(2) * fact(d - 3))).rounded(wp).with_bits(bits);
}

TableEntry r_threshold(int d, unsigned start_bits, unsigned cap)
{
    if (d < 3) {
        throw std::invalid_argument("r_threshold: requires d >= 3");
    }
    TableEntry t;
    t.key = d;
    for (unsigned bits = start_bits; bits <= cap; bits *= 2) {
        t.value = threshold_value(Rational((d - 1) * (d - 1)), r_infty_d(d, bits), bits);
        t.bits = bits;
        t.integer = integer_above(t.value);
        if (t.integer) {
            break;
        }
    }
    return t;
}

TableEntry d_threshold_r3()
{
    TableEntry t;
    t.key = 3;
    t.value = Enclosure(Rational(68));
    t.integer = 68;
    t.cited = true;
    return t;
}

Enclosure r3_chain_bound(int m, unsigned bits)
{
    if (m < 1) {
        throw std::invalid_argument("r3_chain_bound: m must be positive");
    }
    const Rational mm(m);
    const Rational inner = mm / (mm + 3) * (Rational(219) / mm + Rational(810) / (mm * mm) + Rational(324) / (mm * mm * mm));
    const Rational factor = Rational(115) / Rational(16) * (Rational(1) + inner / Rational(115));
    return (Enclosure(factor) * enclose_exp(Rational(-2), bits)).rounded(bits).with_bits(bits);
}

bool r3_identity_holds(int d)
{
    const int n = d + 2;
    const Rational nn(n);
    const Rational poly = Rational(115) * nn * nn * nn - Rational(126) * nn * nn - Rational(66) * nn + Rational(40);
    const Rational rhs = Rational(ipow(n - 2, static_cast<unsigned long>(n - 2))) * poly /
                         (Rational(16) * Rational(ipow(n, static_cast<unsigned long>(n))) * (nn + 1));
    if (s_exact(3, d) / two_n_n(n) != rhs) {
        return false;
    }
    // (115n^3 - 126n^2 - 66n + 40) / ((n-2)^2 (n+1)) in the m = n - 2 form.
    const Rational m(n - 2);
    const Rational lhs = poly / ((nn - 2) * (nn - 2) * (nn + 1));
    const Rational form = Rational(115) * (Rational(1) + m / (m + 3) *
                                                            (Rational(219) / m + Rational(810) / (m * m) +
                                                             Rational(324) / (m * m * m)) /
                                                            Rational(115));
    return lhs == form;
}

CaseIBundle case1_bundle(int r, int d)
{
    require_rd(r, d, "case1_bundle");
    const int n = r + d - 1;
    const Rational R(r);
    const Rational D(d);
    const Rational N(n);
    const Rational one(1);
    CaseIBundle b;
    b.r = r;
    b.d = d;
    b.q = R / (N + 1);
    b.p = Rational(2) * R / (D + Rational(2) * R);
    b.Delta = D * (R + 1) / N;
    b.beta = (N + 1) / (D * R);
    b.eta = b.q * (one - b.p) / (b.p * (one - b.q));
    b.theta1 = D / (Rational(2) * (D + 3));
    b.theta2 = (R - 2) / (Rational(2) * R);
    const Rational& t1 = b.theta1;
    const Rational& t2 = b.theta2;
    b.alpha1 = one + D / (D + 1) +
               D * D / (Rational(4) * (D + 1) * (D + 2)) * (Rational(3) - Rational(2) * t1) / pow(one - t1, 2);
    b.tau1 = D / (D + 1) +
             D * D / (Rational(2) * (D + 1) * (D + 2)) * (t1 * t1 - Rational(3) * t1 + Rational(3)) / pow(one - t1, 3);
    b.alpha2 = Rational(2) + (R - 1) / (Rational(4) * R) * (Rational(3) - Rational(2) * t2) / pow(one - t2, 2);
    b.tau2 = one + (R - 1) / (Rational(2) * R) * (t2 * t2 - Rational(3) * t2 + Rational(3)) / pow(one - t2, 3);
    return b;
}

Rational case1_a(const CaseIBundle& b, int k)
{
    const int n = b.r + b.d - 1;
    if (k < 0 || k > b.r) {
        return Rational(0);
    }
    return Rational(binomial(n + 1, b.r - k)) * pow(Rational(1) - b.q, n + 1 - b.r + k) * pow(b.q, b.r - k);
}

Enclosure case1_margin(Case1Side side, int value, unsigned bits)
{
    if (value < 3) {
        throw std::invalid_argument("case1_margin: value must be >= 3");
    }
    const unsigned wp = bits + 16;
    const Rational v(value);
    const Rational beta = Rational(2) / v;
    // e / (2 sqrt(2 pi)) sqrt(beta)
    const Enclosure two_pi = Enclosure(Rational(2)) * enclose_pi(wp);
    const Enclosure front = enclose_exp(Rational(1), wp) / (Enclosure(Rational(2)) * enclose_sqrt(two_pi, wp)) *
                            enclose_sqrt(beta, wp);
    Rational bracket;
    if (side == Case1Side::DLarge) {
        const CaseIBundle b = case1_bundle(3, value);
        bracket = b.alpha1 + b.tau1 * beta;
    } else {
        const CaseIBundle b = case1_bundle(value, 3);
        bracket = b.alpha2 + v / (v + 1) * b.tau2 * beta;
    }
    return (front * Enclosure(bracket)).rounded(wp).with_bits(bits);
}

bool robbins_holds(int m, unsigned bits)
{
    if (m < 1) {
        throw std::invalid_argument("robbins_holds: m must be positive");
    }
    const unsigned wp = bits + 16;
    const Rational M(m);
    const Enclosure denom = Enclosure(Rational(ipow(m, static_cast<unsigned long>(m)))) * enclose_exp(-M, wp) *
                            enclose_sqrt(Enclosure(Rational(2) * M) * enclose_pi(wp), wp);
    const Enclosure ratio = Enclosure(fact(m)) / denom;
    const Enclosure lower = enclose_exp(Rational(1) / Rational(12 * m + 1), wp);
    const Enclosure upper = enclose_exp(Rational(1) / Rational(12 * m), wp);
    return lower.certainly_less(ratio) && ratio.certainly_less(upper);
}

// ---- d = n - 1 and singular degree 2 -------------------------------------------

Enclosure tau_infinity(unsigned bits)
{
    const Poly cubic{Rational(-30), Rational(-12), Rational(0), Rational(1)};
    return isolate_increasing_root([&cubic](const Rational& t) { return cubic(t); }, Rational(2), Rational(8),
                                   dyadic(-static_cast<long>(bits)))
        .with_bits(bits);
}

Certificate certify_d_n_minus_1(int n, unsigned start_bits, unsigned cap)
{
    if (n < 4) {
        throw std::invalid_argument("certify_d_n_minus_1: requires n >= 4");
    }
    const Rational N(n);
    Certificate c;
    c.n = n;
    c.d = n - 1;
    c.route = "cubic-d-eq-n-minus-1";
    for (unsigned bits = start_bits; bits <= cap; bits *= 2) {
        c.bits = bits;
        c.conditions.clear();
        if (n <= 18) {
            const Poly cubic = d_n_minus_1_cubic(n, 2);
            const Enclosure tau = isolate_increasing_root([&cubic](const Rational& t) { return cubic(t); },
                                                          Rational(2), Rational(8), dyadic(-static_cast<long>(bits)));
            const Enclosure t2 = tau + Enclosure(Rational(2));
            const Enclosure F = Enclosure(N * Rational(ipow(n - 1, static_cast<unsigned long>(n - 1))) / Rational(8)) *
                                (t2 * t2 + Enclosure(Rational(2) - Rational(6) / N));
            c.conditions.push_back({"F(n) < 2n^n", F, two_n_n(n)});
        } else {
            const Rational C = Rational(6) * (N - 1) * (Rational(5) * N + 1) / (N * (N + 1));
            c.conditions.push_back({"C(n) < 30 (tau <= tau_inf)", Enclosure(C), Rational(30)});
            const Enclosure ti = tau_infinity(bits) + Enclosure(Rational(2));
            const Rational e_n = pow(Rational(1) + Rational(1) / (N - 1), n - 1);
            const Enclosure gamma = (ti * ti + Enclosure(Rational(2))) / Enclosure(Rational(16) * e_n);
            c.conditions.push_back({"gamma(n) < 1", gamma, Rational(1)});
        }
        c.verdict = judge(c.conditions);
        if (c.verdict != Verdict::Undecided) {
            break;
        }
    }
    return c;
}

Certificate certify_singular_deg2(int n, const Rational& width)
{
    const SingularDeg2Model s = build_singular_deg2(n);
    const BlowupModel m = s.as_model();
    const ThresholdResult t = solve_T(m, width);

    // F^psi(n 2^n): psi^{-1}(n 2^n) = 2 exactly, so the value is exact.
    BlowupModel psi_model = build_model(n, 2, 1);
    const Rational V = Rational(n) * Rational(ipow(2, static_cast<unsigned long>(n)));
    const Enclosure f_psi = F_phi(psi_model, V, width);
    const Rational expected = Rational(2) * Rational(n - 1) / Rational(n);
    if (!f_psi.is_exact() || f_psi.lo() != expected) {
        throw std::logic_error("certify_singular_deg2: F^psi(n 2^n) != 2(n-1)/n");
    }

    Certificate c;
    c.n = n;
    c.d = 2;
    c.route = "singular-deg2";
    c.conditions.push_back({"phi_sing(T) < 2n^n", t.phi_at_T, two_n_n(n)});
    c.conditions.push_back({"F^psi(n 2^n) < n - 1", f_psi, Rational(n - 1)});
    c.verdict = judge(c.conditions);
    return c;
}

// ---- sweeps ----------------------------------------------------------------------

std::vector<Certificate> sweep(int n_max, std::optional<int> d_filter, unsigned jobs)
{
    if (n_max < 5) {
        throw std::invalid_argument("sweep: n_max must be >= 5");
    }
    std::vector<std::pair<int, int>> cases;
    for (int n = 5; n <= n_max; ++n) {
        for (int d = 3; d <= n - 1; ++d) {
            if (!d_filter || *d_filter == d) {
                cases.emplace_back(n, d);
            }
        }
    }
    return parallel_map<Certificate>(cases.size(), jobs, [&cases](std::size_t i) {
        const auto [n, d] = cases[i];
        return d == n - 1 ? certify_d_n_minus_1(n) : certify_pair(n, d);
    });
}

std::vector<GridReplay> replay_case_iv(unsigned jobs)
{
    struct Grid {
        std::string name;
        std::vector<std::pair<int, int>> cells;  // (r, d)
    };
    Grid a{"d 3..8 x r 3..52", {}};
    for (int d = 3; d <= 8; ++d) {
        for (int r = 3; r <= 52; ++r) {
            a.cells.emplace_back(r, d);
        }
    }
    Grid b{"r 3..10 x d 3..128", {}};
    for (int r = 3; r <= 10; ++r) {
        for (int d = 3; d <= 128; ++d) {
            b.cells.emplace_back(r, d);
        }
    }
    std::vector<GridReplay> out;
    for (const Grid& g : {a, b}) {
        const auto ok = parallel_map<char>(g.cells.size(), jobs, [&g](std::size_t i) {
            const auto [r, d] = g.cells[i];
            return static_cast<char>(s_from_integral(r, d) < two_n_n(r + d - 1));
        });
        GridReplay rep{g.name, static_cast<long>(g.cells.size()), 0, {}};
        for (std::size_t i = 0; i < ok.size(); ++i) {
            if (ok[i] != 0) {
                ++rep.passed;
            } else {
                rep.failures.push_back(g.cells[i]);
            }
        }
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace fanogap
