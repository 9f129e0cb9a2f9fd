#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hygap {

/// Exact arbitrary-precision integer (counts can exceed 64 bits quickly).
using Int = boost::multiprecision::cpp_int;
/// Exact rational, the working type for densities and weights.
using Rat = boost::multiprecision::cpp_rational;
/// 50-decimal-digit float, the high-precision oracle mode for log-space work.
using Real50 = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<50>>;

inline Int int_pow(const Int& base, unsigned exp) {
    Int result = 1;
    Int b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1u;
    }
    return result;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

inline Int factorial(unsigned n) {
    Int result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

inline Real50 to_real50(const Rat& q) {
    return Real50(boost::multiprecision::numerator(q)) /
           Real50(boost::multiprecision::denominator(q));
}

/// ln of a positive rational at 50 digits; throws std::domain_error on q <= 0.
inline Real50 log_rational(const Rat& q) {
    if (q <= 0) throw std::domain_error("log_rational: argument must be positive");
    using boost::multiprecision::log;
    return log(Real50(boost::multiprecision::numerator(q))) -
           log(Real50(boost::multiprecision::denominator(q)));
}

/// Serializes as "num/den", denominator always present and positive.
std::string rational_to_string(const Rat& q);

/// Accepts "a/b", "a", and plain decimals ("0.25" -> 1/4). Exact.
Rat parse_rational(const std::string& text);

}  // namespace hygap
