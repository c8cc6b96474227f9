#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wgamma {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse an exact rational from a decimal string ("2", "-0.25", "1e3")
/// or an explicit fraction ("5/2").
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rational num = parse_rational(text.substr(0, slash));
        Rational den = parse_rational(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        return num / den;
    }

    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') neg = (text[i++] == '-');

    BigInt mantissa = 0;
    long frac_digits = 0, exponent = 0;
    bool any_digit = false, in_frac = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            mantissa = mantissa * 10 + (c - '0');
            if (in_frac) ++frac_digits;
            any_digit = true;
        } else if (c == '.' && !in_frac) {
            in_frac = true;
        } else if ((c == 'e' || c == 'E') && any_digit) {
            exponent = std::strtol(text.c_str() + i + 1, nullptr, 10);
            break;
        } else {
            throw std::invalid_argument("bad rational literal: " + text);
        }
    }
    if (!any_digit) throw std::invalid_argument("bad rational literal: " + text);

    Rational value(mantissa);
    long shift = exponent - frac_digits;
    BigInt pow10 = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
    if (shift >= 0) value *= Rational(pow10);
    else value /= Rational(pow10);
    return neg ? -value : value;
}

/// Exact decimal rendering of a rational whose reduced denominator is of
/// the form 2^a 5^b; otherwise returns "num/den".
inline std::string to_decimal_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt rest = den;
    unsigned twos = 0, fives = 0;
    while (rest % 2 == 0) { rest /= 2; ++twos; }
    while (rest % 5 == 0) { rest /= 5; ++fives; }
    if (rest != 1) return num.str() + "/" + den.str();

    unsigned k = std::max(twos, fives);
    BigInt scaled = num * boost::multiprecision::pow(BigInt(10), k) / den;
    bool neg = scaled < 0;
    std::string digits = BigInt(boost::multiprecision::abs(scaled)).str();
    if (k == 0) return (neg ? "-" : "") + digits;
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    digits.insert(digits.size() - k, ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
    return (neg ? "-" : "") + digits;
}

}  // namespace wgamma
