#include "fanogap/formulas.hpp"

#include "fanogap/poly.hpp"

#include <stdexcept>

namespace fanogap {

namespace {

Rational ipow_r(long base, long e) { return Rational(ipow(base, static_cast<unsigned long>(e))); }

}  // namespace

Rational two_n_pow_n(int n) { return Rational(2) * ipow_r(n, n); }

bool VolumeReport::parity_ok() const
{
    if (n % 2 == 0 || !volume.is_integer()) {
        return true;
    }
    return mpz_even_p(volume.num().get_mpz_t()) != 0;
}

VolumeReport make_report(std::string family, int n, std::map<std::string, std::string> parameters,
                         const Rational& volume, const std::vector<std::pair<std::string, Rational>>& bounds)
{
    VolumeReport r;
    r.family = std::move(family);
    r.n = n;
    r.parameters = std::move(parameters);
    r.volume = volume;
    for (const auto& [name, b] : bounds) {
        r.comparisons.push_back({name, b, volume < b});
    }
    return r;
}

CSequence c_sequence(int n)
{
    if (n < 2) {
        throw std::invalid_argument("c_sequence: n must be >= 2");
    }
    CSequence s;
    for (int r = 0; r <= n; ++r) {
        s.c.push_back(binomial(n, r) * ipow(r + 1, static_cast<unsigned long>(r)) *
                      ipow(n - r + 1, static_cast<unsigned long>(n - r)));
    }
    s.symmetric = true;
    for (int r = 0; r <= n; ++r) {
        s.symmetric = s.symmetric && s.c[static_cast<std::size_t>(r)] == s.c[static_cast<std::size_t>(n - r)];
    }
    s.strict_chain = true;
    for (int r = 1; r <= n / 2; ++r) {
        s.strict_chain = s.strict_chain && s.c[static_cast<std::size_t>(r)] < s.c[static_cast<std::size_t>(r - 1)];
    }
    return s;
}

Rational vol_blowup_hyperplane_subvariety(int n, int d_Y)
{
    if (n < 3 || d_Y < 1 || d_Y > n) {
        throw std::invalid_argument("vol_blowup_hyperplane_subvariety: requires n >= 3 and 1 <= d_Y <= n");
    }
    if (d_Y == 1) {
        return two_n_pow_n(n);
    }
    return (Rational(d_Y) * ipow_r(n, n) - ipow_r(n + 1 - d_Y, n)) / Rational(d_Y - 1);
}

Rational vol_blowup_segre(int n, int d_Y)
{
    if (n < 2 || d_Y < 1) {
        throw std::invalid_argument("vol_blowup_segre: requires n >= 2 and d_Y >= 1");
    }
    Rational sum;
    for (int k = 2; k <= n; ++k) {
        Rational geometric;
        for (int i = 0; i <= k - 2; ++i) {
            geometric += ipow_r(d_Y, i);
        }
        const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
        sum += Rational(binomial(n, k)) * ipow_r(n + 1, n - k) * sign * geometric * Rational(d_Y);
    }
    return ipow_r(n + 1, n) - sum;
}

Rational s_invariant_bl(int n)
{
    if (n < 2) {
        throw std::invalid_argument("s_invariant_bl: n must be >= 2");
    }
    const Poly n_minus_t{Rational(n), Rational(-1)};
    const Poly vol = pow(n_minus_t, static_cast<unsigned>(n - 1)) * Poly{Rational(2 * n), Rational(n - 1)};
    if (vol(Rational(0)) != two_n_pow_n(n)) {
        throw std::logic_error("s_invariant_bl: vol at t = 0 is not 2n^n");
    }
    const Rational S = vol.integrate(Rational(0), Rational(n)) / two_n_pow_n(n);
    if (S != Rational(1) + Rational(n - 1) / Rational(2 * (n + 1))) {
        throw std::logic_error("s_invariant_bl: S differs from 1 + (n-1)/(2(n+1))");
    }
    return S;
}

Rational beta_bl(int n) { return Rational(1) - s_invariant_bl(n); }

Rational vol_hypersurface(int n, int b)
{
    if (n < 1 || b < 1 || b > n) {
        throw std::invalid_argument("vol_hypersurface: requires 1 <= b <= n (Fano)");
    }
    return Rational(b) * ipow_r(n + 2 - b, n);
}

Rational vol_weighted_hypersurface(const std::vector<long>& weights, long degree)
{
    if (weights.size() < 3) {
        throw std::invalid_argument("vol_weighted_hypersurface: need at least 3 weights");
    }
    long sum = 0;
    Rational prod(1);
    for (long w : weights) {
        if (w < 1) {
            throw std::invalid_argument("vol_weighted_hypersurface: weights must be positive");
        }
        sum += w;
        prod *= Rational(w);
    }
    if (degree < 1 || degree >= sum) {
        throw std::invalid_argument("vol_weighted_hypersurface: non-Fano degree");
    }
    const long m = static_cast<long>(weights.size()) - 2;
    return Rational(degree) * ipow_r(sum - degree, m) / prod;
}

Rational vol_double_cover(int n, long deg_D)
{
    const Rational index = Rational(n + 1) - Rational(deg_D) / Rational(2);
    if (index.sign() <= 0) {
        throw std::invalid_argument("vol_double_cover: branch divisor too large for a Fano cover");
    }
    return Rational(2) * pow(index, n);
}

Rational cone_normalized_volume(int fano_index, const Rational& vol)
{
    if (fano_index < 1 || vol.sign() <= 0) {
        throw std::invalid_argument("cone_normalized_volume: requires r >= 1 and vol > 0");
    }
    return Rational(fano_index) * vol;
}

Rational fujita_liu_bound(int n, const Rational& nvol)
{
    if (n < 1 || nvol.sign() <= 0) {
        throw std::invalid_argument("fujita_liu_bound: requires n >= 1 and nvol > 0");
    }
    return pow(Rational(n + 1) / Rational(n), n) * nvol;
}

Rational singular_toric_bound(int n) { return Rational(16) / Rational(27) * ipow_r(n + 1, n); }

Rational vol_product(int n, int r, const Integer& d_Z)
{
    if (r < 1 || r > n - 1) {
        throw std::invalid_argument("vol_product: requires 1 <= r <= n-1");
    }
    return ipow_r(r + 1, r) * Rational(binomial(n, r)) * Rational(d_Z);
}

nlohmann::json to_json(const VolumeReport& r)
{
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : r.comparisons) {
        comps.push_back({{"bound", c.bound_name}, {"value", c.bound.str()}, {"strictly_less", c.strictly_less}});
    }
    return {{"family", r.family},   {"n", r.n},           {"parameters", r.parameters},
            {"volume", r.volume.str()}, {"comparisons", comps}, {"parity_ok", r.parity_ok()}};
}

}  // namespace fanogap
