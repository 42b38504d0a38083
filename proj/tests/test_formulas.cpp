#include "fanogap/formulas.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fanogap;
using namespace testsupport;

namespace {

// (n+1)^n - sum_{k=2}^n C(n,k)(n+1)^(n-k)(-1)^(k-2)(sum_{i<=k-2} d^i) d
Rational segre_oracle(int n, int dy)
{
    Integer total = ipow(n + 1, n);
    for (int k = 2; k <= n; ++k) {
        Integer geo = 0;
        for (int i = 0; i <= k - 2; ++i) {
            geo += ipow(dy, i);
        }
        Integer term = binomial(n, k) * ipow(n + 1, n - k) * geo * dy;
        total -= (k % 2 == 0) ? term : Integer(-term);
    }
    return Rational(total);
}

}  // namespace

TEST_SUITE("formulas") {

TEST_CASE("product sequence")
{
    const CSequence four = c_sequence(4);
    const std::vector<Integer> expect = {625, 512, 486, 512, 625};
    CHECK(four.c == expect);
    CHECK(c_sequence(2).c[0] == 9);
    CHECK(c_sequence(2).c[1] == 8);
    for (int n = 2; n <= 20; ++n) {
        const CSequence s = c_sequence(n);
        CHECK(s.symmetric);
        CHECK(s.strict_chain);
        CHECK(Rational(s.c[1]) == two_n_pow_n(n));
        CHECK(Rational(s.c[0]) == Rational(ipow(n + 1, n)));
    }
}

TEST_CASE("products of projective spaces")
{
    for (int n = 2; n <= 10; ++n) {
        const CSequence s = c_sequence(n);
        for (int r = 1; r <= n - 1; ++r) {
            CHECK(vol_product(n, r, ipow(n - r + 1, n - r)) == Rational(s.c[r]));
        }
    }
    CHECK(vol_product(3, 1, Integer(9)) == Rational(54));
    CHECK(vol_product(4, 2, Integer(9)) == Rational(486));
    CHECK(vol_product(5, 4, Integer(2)) == Rational(6250));
    CHECK_THROWS(vol_product(3, 3, Integer(1)));
}

TEST_CASE("blowup volumes against the Segre sum")
{
    CHECK(vol_blowup_hyperplane_subvariety(3, 1) == Rational(54));
    CHECK(vol_blowup_hyperplane_subvariety(3, 2) == Rational(46));
    CHECK(vol_blowup_hyperplane_subvariety(5, 5) == Rational(3906));
    for (int n = 3; n <= 15; ++n) {
        for (int dy = 1; dy <= n; ++dy) {
            const Rational v = vol_blowup_hyperplane_subvariety(n, dy);
            CHECK(v == segre_oracle(n, dy));
            CHECK(v == vol_blowup_segre(n, dy));
            if (dy >= 2) {
                CHECK(v < two_n_pow_n(n));
            }
        }
    }
    CHECK_THROWS(vol_blowup_hyperplane_subvariety(3, 4));
}

TEST_CASE("S invariant of the blowup along a codimension two space")
{
    CHECK(s_invariant_bl(3) == Rational(Integer(5), Integer(4)));
    CHECK(beta_bl(3) == Rational(Integer(-1), Integer(4)));
    CHECK(s_invariant_bl(2) == Rational(Integer(7), Integer(6)));
    for (int n = 2; n <= 15; ++n) {
        CHECK(s_invariant_bl(n) == Rational(1) + Rational(n - 1) / Rational(2 * (n + 1)));
        CHECK(beta_bl(n) == -Rational(n - 1) / Rational(2 * (n + 1)));
    }
}

TEST_CASE("hypersurfaces")
{
    CHECK(vol_hypersurface(4, 2) == Rational(512));
    for (int n = 3; n <= 20; ++n) {
        CHECK(vol_hypersurface(n, 2) == two_n_pow_n(n));
        CHECK(vol_hypersurface(n, 1) == Rational(ipow(n + 1, n)));
        for (int b = 3; b <= n; ++b) {
            CHECK(vol_hypersurface(n, b) < two_n_pow_n(n));
        }
    }
    CHECK_THROWS(vol_hypersurface(4, 5));
}

TEST_CASE("weighted hypersurfaces and covers")
{
    CHECK(vol_weighted_hypersurface({1, 1, 1, 1, 2, 5}, 10) == Rational(1));
    for (int n = 2; n <= 16; n += 2) {
        std::vector<long> w(static_cast<std::size_t>(n), 1);
        w.push_back(2);
        w.push_back(n + 1);
        CHECK(vol_weighted_hypersurface(w, 2 * n + 2) == Rational(1));
    }
    CHECK(vol_weighted_hypersurface({1, 1, 1, 1, 1}, 2) == Rational(54));
    CHECK(vol_double_cover(4, 8) == Rational(2));
    CHECK(vol_double_cover(3, 6) == Rational(2));
    CHECK_THROWS(vol_weighted_hypersurface({1, 1, 1}, 3));
}

TEST_CASE("local volume bounds")
{
    for (int n = 2; n <= 10; ++n) {
        CHECK(cone_normalized_volume(n, two_n_pow_n(n)) == Rational(2) * Rational(ipow(n, n + 1)));
        CHECK(cone_normalized_volume(n + 1, Rational(ipow(n + 1, n))) == Rational(ipow(n + 1, n + 1)));
    }
    CHECK(fujita_liu_bound(2, Rational(2)) == Rational(Integer(9), Integer(2)));
    for (int n = 3; n <= 30; ++n) {
        CHECK(singular_toric_bound(n) < two_n_pow_n(n));
    }
}

TEST_CASE("volume reports")
{
    const VolumeReport r = make_report("quadric", 3, {{"b", "2"}}, Rational(54),
                                       {{"2n^n", two_n_pow_n(3)}, {"(n+1)^n", Rational(64)}});
    REQUIRE(r.comparisons.size() == 2);
    CHECK_FALSE(r.comparisons[0].strictly_less);
    CHECK(r.comparisons[1].strictly_less);
    CHECK(r.parity_ok());
    const VolumeReport odd = make_report("bad", 3, {}, Rational(53), {});
    CHECK_FALSE(odd.parity_ok());
    CHECK(to_json(r).at("volume") == "54");
}

}  // TEST_SUITE
