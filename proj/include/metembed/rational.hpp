#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace metembed {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(Integer(num), Integer(den));
}

inline Integer num_of(const Rational& r) { return Integer(boost::multiprecision::numerator(r)); }
inline Integer den_of(const Rational& r) { return Integer(boost::multiprecision::denominator(r)); }

/// "p/q" or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
    if (den_of(r) == 1) return num_of(r).str();
    return num_of(r).str() + "/" + den_of(r).str();
}

inline std::optional<std::int64_t> to_int64(const Integer& z) {
    if (z > Integer(INT64_MAX) || z < Integer(INT64_MIN)) return std::nullopt;
    return z.convert_to<std::int64_t>();
}

}  // namespace metembed
