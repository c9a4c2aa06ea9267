#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "permclass/series.hpp"

using namespace permclass;

namespace {

// Brute-force partition counting: parts at most `max_part` summing to k.
long partitions_oracle(long k, long max_part) {
    if (k == 0) return 1;
    if (k < 0 || max_part == 0) return 0;
    return partitions_oracle(k - max_part, max_part) + partitions_oracle(k, max_part - 1);
}

}  // namespace

TEST_CASE("pentagonal recurrence equals brute-force partition counts, k <= 30") {
    const TruncatedSeries p = partition_series(30);
    for (long k = 0; k <= 30; ++k)
        CHECK(p.coeff(static_cast<std::size_t>(k)) == partitions_oracle(k, k));
    CHECK(p.coeff(4) == 5);
    CHECK(p.coeff(9) == 30);
    CHECK(partition_series(0).coefficients == std::vector<BigInt>{1});
}

TEST_CASE("series multiplication") {
    const TruncatedSeries p = partition_series(12);
    const TruncatedSeries p2 = series_mul(p, p);
    const std::vector<BigInt> expected{1, 2, 5, 10, 20, 36, 65, 110, 185, 300, 481, 752, 1165};
    for (std::size_t k = 0; k <= 12; ++k) CHECK(p2.coeff(k) == expected[k]);

    const TruncatedSeries one{1};
    CHECK(series_mul(p, one).coeff(0) == p.coeff(0));
    // truncation to the smaller order
    CHECK(series_mul(p, TruncatedSeries{1, 0, 0}).order() == 2);
}

TEST_CASE("prefix sum divides by 1-x") {
    CHECK(prefix_sum(TruncatedSeries{1, 0, 0}).coefficients ==
          std::vector<BigInt>{1, 1, 1});
    CHECK(prefix_sum(r_series(10, 12)).coeff(12) == 88);
    CHECK(prefix_sum(r_series(12, 12)).coeff(12) == 14);
}

TEST_CASE("prefix_sum convolved with 1-x recovers the series") {
    const TruncatedSeries p = partition_series(15);
    const TruncatedSeries s = prefix_sum(p);
    for (std::size_t k = 0; k <= 15; ++k) {
        const BigInt back = k == 0 ? s.coeff(0) : s.coeff(k) - s.coeff(k - 1);
        CHECK(back == p.coeff(k));
    }
}

TEST_CASE("R_n(x) = 2(2+x) x^{n-1} P(x)^2") {
    CHECK(r_series(7, 7).coeff(6) == 4);
    CHECK(r_series(7, 7).coeff(7) == 10);
    for (std::size_t k = 0; k < 6; ++k) CHECK(r_series(7, 7).coeff(k) == 0);
    // direct product route
    const std::size_t K = 14;
    const TruncatedSeries p = partition_series(K);
    const TruncatedSeries p2 = series_mul(p, p);
    TruncatedSeries factor(K);  // 2(2+x) x^{n-1}, n = 8
    factor.coefficients[7] = 4;
    factor.coefficients[8] = 2;
    CHECK(r_series(8, K) == series_mul(factor, p2));
}

TEST_CASE("closed-form table values") {
    CHECK(av_closed(12, 12).value == 1151);
    CHECK(av_closed(10, 12).value == 1077);
    CHECK(av_closed(9, 7).value == 110);
    CHECK(av_closed(12, 12).in_regime);
    CHECK_FALSE(av_closed(7, 8).in_regime);
}

TEST_CASE("difference closed form") {
    CHECK(diff_closed(10, 12).value == 50);
    CHECK(diff_closed(9, 8).value == 4);
    for (std::size_t n = 7; n <= 12; ++n)
        for (long k = 0; k <= static_cast<long>(n) - 2; ++k)
            CHECK(diff_closed(n, k).value == 0);
}

TEST_CASE("av_closed difference telescopes into diff_closed") {
    for (std::size_t n = 7; n <= 12; ++n)
        for (long k = 0; k <= 2 * static_cast<long>(n) - 7; ++k) {
            CHECK(av_closed(n + 1, k).value - av_closed(n, k).value ==
                  diff_closed(n, k).value);
            CHECK(diff_closed(n, k).value >= 0);
        }
}

TEST_CASE("conjectured b-series formula, expanded literally") {
    const TruncatedSeries b = b_formula_series(5);
    CHECK(b.coeff(0) == 4);
    // Note: disagrees with the empirically observed b_1 = 8; the formula is
    // expanded as written and compared side by side elsewhere.
    CHECK(b.coeff(1) == 16);
    CHECK(b.coeff(2) == 42);
    CHECK(b.coeff(3) == 96);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("21/23").num == 21);
    CHECK(parse_rational("21/23").den == 23);
    CHECK(parse_rational("0.813").to_double() == doctest::Approx(0.813));
    CHECK(parse_rational("1").to_double() == 1.0);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("growth bound") {
    CHECK(growth_bound({1, 1}) < 13.002);
    CHECK(growth_bound({1, 1}) > 13.0019);
    CHECK(growth_bound({21, 23}) == doctest::Approx(11.6004).epsilon(1e-4));
    CHECK(growth_bound({813, 1000}) == doctest::Approx(10.1033).epsilon(1e-4));
    CHECK_THROWS_AS(growth_bound({0, 1}), std::domain_error);
    CHECK_THROWS_AS(growth_bound({3, 2}), std::domain_error);
}

TEST_CASE("series JSON rendering") {
    CHECK(TruncatedSeries{1, 2, 5}.to_json() == "[\"1\",\"2\",\"5\"]");
}
