#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <ostream>
#include <string>

namespace arthur {

using Rational = boost::rational<std::int64_t>;

inline Rational pow2_inv(int k) {
    return Rational(1, std::int64_t(1) << k);
}

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace arthur
