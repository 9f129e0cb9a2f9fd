#include "hygap/numeric.hpp"

#include <cctype>

namespace hygap {

std::string rational_to_string(const Rat& q) {
    Int num = boost::multiprecision::numerator(q);
    Int den = boost::multiprecision::denominator(q);
    return num.str() + "/" + den.str();
}

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rat(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rat(Int(text));
    // Decimal: digits/10^k, exactly.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    bool negative = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
        negative = digits[0] == '-';
        digits.erase(digits.begin());
    }
    if (digits.empty()) throw std::invalid_argument("parse_rational: bad decimal '" + text + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("parse_rational: bad decimal '" + text + "'");
    Int num(digits);
    if (negative) num = -num;
    Int den = int_pow(Int(10), static_cast<unsigned>(text.size() - dot - 1));
    return Rat(num, den);
}

}  // namespace hygap
