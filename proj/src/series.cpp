#include "permclass/series.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace permclass {

std::string TruncatedSeries::to_json() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        if (k) out << ',';
        out << '"' << coefficients[k].str() << '"';
    }
    out << ']';
    return out.str();
}

TruncatedSeries partition_series(std::size_t K) {
    TruncatedSeries p(K);
    p.coefficients[0] = 1;
    for (std::size_t k = 1; k <= K; ++k) {
        BigInt sum = 0;
        for (long m = 1;; ++m) {
            const long g1 = m * (3 * m - 1) / 2;
            const long g2 = m * (3 * m + 1) / 2;
            if (g1 > static_cast<long>(k)) break;
            const BigInt sign = (m % 2 == 1) ? 1 : -1;
            sum += sign * p.coefficients[k - static_cast<std::size_t>(g1)];
            if (g2 <= static_cast<long>(k))
                sum += sign * p.coefficients[k - static_cast<std::size_t>(g2)];
        }
        p.coefficients[k] = sum;
    }
    return p;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t K = std::min(a.order(), b.order());
    TruncatedSeries out(K);
    for (std::size_t k = 0; k <= K; ++k) {
        BigInt c = 0;
        for (std::size_t i = 0; i <= k; ++i) c += a.coefficients[i] * b.coefficients[k - i];
        out.coefficients[k] = c;
    }
    return out;
}

TruncatedSeries prefix_sum(const TruncatedSeries& a) {
    TruncatedSeries out(a.order());
    BigInt running = 0;
    for (std::size_t k = 0; k < a.coefficients.size(); ++k) {
        running += a.coefficients[k];
        out.coefficients[k] = running;
    }
    return out;
}

TruncatedSeries r_series(std::size_t n, std::size_t K) {
    if (n < 1) throw std::invalid_argument("r_series: n must be positive");
    TruncatedSeries out(K);
    const TruncatedSeries p = partition_series(K);
    const TruncatedSeries p2 = series_mul(p, p);
    // [x^k] 2(2+x) x^{n-1} P^2 = 4 [x^{k-n+1}] P^2 + 2 [x^{k-n}] P^2
    for (std::size_t k = 0; k <= K; ++k) {
        BigInt c = 0;
        if (k + 1 >= n) c += 4 * p2.coeff(k + 1 - n);
        if (k >= n) c += 2 * p2.coeff(k - n);
        out.coefficients[k] = c;
    }
    return out;
}

FlaggedCount av_closed(std::size_t n, long k) {
    if (k < 0) return {BigInt(0), false};
    const std::size_t K = static_cast<std::size_t>(k);
    const TruncatedSeries p = partition_series(K);
    const TruncatedSeries p2 = series_mul(p, p);
    const TruncatedSeries correction = prefix_sum(r_series(n, K));
    FlaggedCount out;
    out.value = p2.coeff(K) - correction.coeff(K);
    out.in_regime = k <= 2 * static_cast<long>(n) - 7;
    return out;
}

FlaggedCount diff_closed(std::size_t n, long k) {
    if (k < 0) return {BigInt(0), false};
    FlaggedCount out;
    out.value = r_series(n, static_cast<std::size_t>(k)).coeff(static_cast<std::size_t>(k));
    out.in_regime = k <= 2 * static_cast<long>(n) - 7;
    return out;
}

TruncatedSeries b_formula_series(std::size_t K) {
    const TruncatedSeries p = partition_series(K);
    const TruncatedSeries p2 = series_mul(p, p);
    // numerator 2(1+x)(2-x^2) = 4 + 4x - 2x^2 - 2x^3
    TruncatedSeries numerator(K);
    numerator.coefficients[0] = 4;
    if (K >= 1) numerator.coefficients[1] = 4;
    if (K >= 2) numerator.coefficients[2] = -2;
    if (K >= 3) numerator.coefficients[3] = -2;
    return prefix_sum(series_mul(numerator, p2));
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    Rational r;
    try {
        if (slash != std::string::npos) {
            r.num = std::stoll(text.substr(0, slash));
            r.den = std::stoll(text.substr(slash + 1));
        } else {
            const auto dot = text.find('.');
            if (dot == std::string::npos) {
                r.num = std::stoll(text);
                r.den = 1;
            } else {
                const std::string frac = text.substr(dot + 1);
                r.num = std::stoll(text.substr(0, dot) + frac);
                r.den = 1;
                for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
            }
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    }
    if (r.den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return r;
}

double growth_bound(const Rational& c) {
    const double value = c.to_double();
    if (!(value > 0.0) || value > 1.0)
        throw std::domain_error("growth_bound: c must lie in (0, 1]");
    return std::exp(std::numbers::pi * std::sqrt(2.0 * value / 3.0));
}

}  // namespace permclass
