#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace theta {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or just "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace theta
