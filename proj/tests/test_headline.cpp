#include "fanogap/formulas.hpp"
#include "fanogap/headline.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fanogap;

TEST_SUITE("headline") {

TEST_CASE("second largest volume is 2n^n")
{
    for (int n = 3; n <= 40; ++n) {
        const HeadlineReport r = headline_check(n);
        CHECK(r.ok);
        CHECK(r.second_largest == two_n_pow_n(n));
        CHECK(r.largest == Rational(ipow(n + 1, n)));
        bool quadric = false;
        bool degree_two = false;
        for (const Candidate& c : r.at_two_n_n) {
            quadric = quadric || c.family == "quadric";
            degree_two = degree_two || c.family == "blowup model d=2";
        }
        CHECK(quadric);
        CHECK(degree_two);
        for (const Candidate& c : r.strictly_below) {
            CHECK(c.value < two_n_pow_n(n));
        }
        CHECK(r.certificates.size() == static_cast<std::size_t>(std::max(0, n - 3) + 1));
    }
}

TEST_CASE("report serialization")
{
    const auto j = to_json(headline_check(6));
    CHECK(j.at("ok") == true);
    CHECK(j.at("second_largest") == "93312");
    CHECK_THROWS(headline_check(2));
}

}  // TEST_SUITE
