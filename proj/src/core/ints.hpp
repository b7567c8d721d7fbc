#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "core/errors.hpp"

namespace itkc {

// All quantities in this library are exact. Coefficients grow like products
// of squared cabling multiplicities, so fixed-width integers are not an
// option anywhere.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) {
    return boost::multiprecision::abs(a);
}

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

inline int sign_int(const Int& a) {
    return a.sign();
}

inline std::string int_str(const Int& a) {
    return a.str();
}

// Strict decimal integer parse: optional leading '-', at least one digit.
inline Int parse_int(std::string_view text) {
    require(!text.empty(), "empty integer");
    std::size_t i = (text[0] == '-') ? 1 : 0;
    require(i < text.size(), "bare sign is not an integer");
    for (std::size_t j = i; j < text.size(); ++j)
        require(text[j] >= '0' && text[j] <= '9',
                "invalid integer '" + std::string(text) + "'");
    return Int(std::string(text));
}

} // namespace itkc
