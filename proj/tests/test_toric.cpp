#include "fanogap/toric.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace fanogap;
using namespace testsupport;

namespace {

Facet facet(std::initializer_list<long> u, const Rational& c)
{
    Facet f;
    for (long v : u) {
        f.normal.emplace_back(v);
    }
    f.offset = c;
    return f;
}

Rational fact_r(int n) { return Rational(factorial(n)); }

// Rejection sampling of integer matrices with entries in [-3, 3] and det = +-1.
IMat random_unimodular(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<long> entry(-3, 3);
    for (;;) {
        IMat M(n, IVec(n));
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
            return M;
        }
    }
}

}  // namespace

TEST_SUITE("toric") {

TEST_CASE("square and triangle vertices")
{
    HalfspaceRep cube;
    cube.n = 2;
    cube.facets = {facet({1, 0}, 1), facet({-1, 0}, 1), facet({0, 1}, 1), facet({0, -1}, 1)};
    CHECK(enumerate_vertices(cube).size() == 4);
    CHECK(volume_barycenter(cube).volume == Rational(4));

    const HalfspaceRep p2 = builtin("Pn", 2);
    const auto v = enumerate_vertices(p2);
    REQUIRE(v.size() == 3);
    const std::vector<RVec> expect = {{-1, -1}, {-1, 2}, {2, -1}};
    CHECK(v == expect);
}

TEST_CASE("unbounded input is rejected")
{
    HalfspaceRep half;
    half.n = 2;
    half.facets = {facet({1, 0}, 1), facet({0, 1}, 1)};
    CHECK_THROWS_WITH(enumerate_vertices(half), doctest::Contains("unbounded-or-degenerate"));
}

TEST_CASE("blowup polytope")
{
    for (int n = 3; n <= 7; ++n) {
        const HalfspaceRep H = builtin("BlPn-2Pn", n);
        CHECK(H.facets.size() == static_cast<std::size_t>(n + 2));
        CHECK(H.is_reflexive());
        const PolytopeGeometry g = volume_barycenter(H);
        const Rational a = Rational(n - 1) / Rational(4 * (n + 1));
        const Rational b = -Rational(1) / Rational(2 * (n + 1));
        CHECK(g.barycenter[0] == a);
        CHECK(g.barycenter[1] == a);
        for (int i = 2; i < n; ++i) {
            CHECK(g.barycenter[static_cast<std::size_t>(i)] == b);
        }
        CHECK(g.volume * fact_r(n) == Rational(2) * Rational(ipow(n, n)));
        const DeltaResult d = delta_toric(H);
        CHECK(d.delta == Rational(2 * n + 2) / Rational(3 * n + 1));
        CHECK(d.minimizer[0] == 1);
        CHECK(d.minimizer[1] == 1);
    }
    CHECK(enumerate_vertices(builtin("BlPn-2Pn", 3)).size() == 6);
}

TEST_CASE("projective space and product")
{
    for (int n = 2; n <= 7; ++n) {
        const PolytopeGeometry p = volume_barycenter(builtin("Pn", n));
        CHECK(p.volume == Rational(ipow(n + 1, n)) / fact_r(n));
        CHECK(delta_toric(builtin("Pn", n)).delta == Rational(1));
        const PolytopeGeometry q = volume_barycenter(builtin("P1xPn-1", n));
        CHECK(q.volume == Rational(2) * Rational(ipow(n, n)) / fact_r(n));
        CHECK(q.volume < p.volume);
        for (const Rational& c : q.barycenter) {
            CHECK(c.is_zero());
        }
    }
    CHECK(volume_barycenter(builtin("P1xPn-1", 3)).volume == Rational(9));
    CHECK(volume_barycenter(builtin("P1xPn-1", 4)).volume == Rational(Integer(64), Integer(3)));
    CHECK(builtin("Pn", 3).facets.size() == 4);
}

TEST_CASE("scaled simplex")
{
    const HalfspaceRep s = builtin("scaled-simplex", 3);
    CHECK_FALSE(s.is_reflexive());
    CHECK(volume_barycenter(s).volume == Rational(Integer(32), Integer(3)));
    CHECK_THROWS(delta_toric(s));
}

TEST_CASE("coordinate simplex oracle")
{
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> nd(2, 5);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(nd(rng));
        HalfspaceRep H;
        H.n = n;
        Rational prod(1);
        std::vector<Rational> a;
        for (int i = 0; i < n; ++i) {
            a.push_back(random_rational(rng, 1, 5, 7) + Rational(Integer(1), Integer(8)));
            prod *= a.back();
        }
        // x_i >= 0 and sum x_i / a_i <= 1, scaled to integer normals
        Integer L = 1;
        for (const Rational& ai : a) {
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), ai.num().get_mpz_t());
        }
        for (int i = 0; i < n; ++i) {
            Facet f;
            f.normal.assign(n, Integer(0));
            f.normal[i] = 1;
            f.offset = 0;
            H.facets.push_back(f);
        }
        Facet top;
        for (const Rational& ai : a) {
            const Rational c = Rational(L) / ai;
            REQUIRE(c.is_integer());
            top.normal.push_back(-c.num());
        }
        top.offset = Rational(L);
        H.facets.push_back(top);
        CHECK(volume_barycenter(H).volume == prod / fact_r(n));
    }
}

TEST_CASE("unimodular invariance")
{
    std::mt19937_64 rng(2024);
    const std::vector<std::pair<std::string, int>> cases = {{"Pn", 3}, {"P1xPn-1", 3}, {"BlPn-2Pn", 3},
                                                            {"BlPn-2Pn", 4}, {"scaled-simplex", 3}};
    int done = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto& [name, n] = cases[static_cast<std::size_t>(trial) % cases.size()];
        const HalfspaceRep H = builtin(name, n);
        const IMat M = random_unimodular(rng, n);
        const HalfspaceRep T = transform(H, M);
        const PolytopeGeometry g0 = volume_barycenter(H);
        const PolytopeGeometry g1 = volume_barycenter(T);
        CHECK(g0.volume == g1.volume);
        // barycenter moves by M
        for (int i = 0; i < n; ++i) {
            Rational y;
            for (int k = 0; k < n; ++k) {
                y += Rational(M[i][k]) * g0.barycenter[k];
            }
            CHECK(g1.barycenter[i] == y);
        }
        if (H.is_reflexive()) {
            CHECK(T.is_reflexive());
            CHECK(delta_toric(H).delta == delta_toric(T).delta);
        }
        ++done;
    }
    CHECK(done == 50);
}

TEST_CASE("builtin invariants")
{
    for (const std::string& name : builtin_names()) {
        for (int n = 2; n <= 5; ++n) {
            const HalfspaceRep H = builtin(name, n);
            const PolytopeGeometry g = volume_barycenter(H);
            CHECK(g.volume.sign() > 0);
            for (const Facet& f : H.facets) {
                Rational s = f.offset;
                for (int i = 0; i < n; ++i) {
                    s += g.barycenter[i] * Rational(f.normal[i]);
                }
                CHECK(s.sign() > 0);
            }
            if (H.is_reflexive()) {
                CHECK((g.volume * fact_r(n)).is_integer());
            }
        }
    }
    CHECK_THROWS(builtin("nonsense", 3));
}

TEST_CASE("text format")
{
    std::istringstream in("H 2 3\n1 0 1\n0 1 1\n-1 -1 1\n");
    const HalfspaceRep H = parse_halfspace(in);
    CHECK(H.n == 2);
    CHECK(H.facets.size() == 3);
    CHECK(volume_barycenter(H).volume == Rational(Integer(9), Integer(2)));
    std::istringstream bad("H 2 3\n1 0 1\n");
    CHECK_THROWS_AS(parse_halfspace(bad), std::invalid_argument);
    std::istringstream frac("H 1 2\n1/2 1\n-1 1\n");
    CHECK_THROWS_AS(parse_halfspace(frac), std::invalid_argument);
}

}  // TEST_SUITE
