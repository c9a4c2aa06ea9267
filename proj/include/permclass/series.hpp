#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permclass {

using BigInt = boost::multiprecision::cpp_int;

/// Formal power series truncated at degree K (inclusive), with exact integer
/// coefficients. Binary operations truncate to the smaller order.
struct TruncatedSeries {
    std::vector<BigInt> coefficients;  // c_0 .. c_K

    TruncatedSeries() = default;
    explicit TruncatedSeries(std::size_t order) : coefficients(order + 1, 0) {}
    TruncatedSeries(std::initializer_list<BigInt> coeffs) : coefficients(coeffs) {}

    std::size_t order() const { return coefficients.size() - 1; }

    /// [x^k]; zero beyond the truncation order.
    const BigInt& coeff(std::size_t k) const {
        static const BigInt zero = 0;
        return k < coefficients.size() ? coefficients[k] : zero;
    }

    bool operator==(const TruncatedSeries&) const = default;

    /// JSON array of decimal strings.
    std::string to_json() const;
};

/// P(x) to order K: coefficient k is the partition number p(k), computed by
/// the Euler pentagonal-number recurrence.
TruncatedSeries partition_series(std::size_t K);

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Division by 1-x: running sums of the coefficients.
TruncatedSeries prefix_sum(const TruncatedSeries& a);

/// R_n(x) = 2(2+x) x^{n-1} P(x)^2, truncated at K.
TruncatedSeries r_series(std::size_t n, std::size_t K);

/// A count together with whether the closed form is authoritative there
/// (the regime k <= 2n-7).
struct FlaggedCount {
    BigInt value;
    bool in_regime = false;
};

/// av_n^k(1324) by the closed form [x^k](P(x)^2 - R_n(x)/(1-x)).
FlaggedCount av_closed(std::size_t n, long k);

/// av_{n+1}^k(1324) - av_n^k(1324) = [x^k] R_n(x).
FlaggedCount diff_closed(std::size_t n, long k);

/// Literal expansion of 2(1+x)(2-x^2)/(1-x) * P(x)^2.
TruncatedSeries b_formula_series(std::size_t K);

/// Exact rational in (0,1] for the growth-rate bound.
struct Rational {
    long long num = 0;
    long long den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Parses "p/q" or a decimal literal like "0.813".
Rational parse_rational(const std::string& text);

/// exp(pi * sqrt(2c/3)); the bound on the Stanley-Wilf limit of 1324.
double growth_bound(const Rational& c);

}  // namespace permclass
