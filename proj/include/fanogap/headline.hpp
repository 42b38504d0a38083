#pragma once

#include "fanogap/gap.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fanogap {

struct Candidate {
    std::string family;
    Rational value;          // exact volume, or the certified upper bound
    bool is_upper_bound = false;
};

struct HeadlineReport {
    int n = 0;
    Rational largest;                      // (n+1)^n from P^n
    std::vector<Candidate> at_two_n_n;     // attain 2n^n exactly
    std::vector<Candidate> strictly_below; // strictly below 2n^n, exact
    std::vector<Certificate> certificates; // 3 <= d <= n-1 and singular d = 2
    Rational second_largest;
    bool ok = false;
};

/// Collects every implemented family at dimension n and checks exactly that
/// the largest value is (n+1)^n and the next one is 2n^n. Requires n >= 3.
HeadlineReport headline_check(int n);

nlohmann::json to_json(const HeadlineReport& r);

}  // namespace fanogap
