#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace claims {

// Exact rational quantity. All engine arithmetic goes through this type;
// there is no floating-point path anywhere.
using Amount = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

using AmountVec = std::vector<Amount>;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "123", "-4" or "p/q". Rejects floats, exponents and empty input.
Amount parse_amount(std::string_view text);

// Renders as a decimal integer when the denominator is 1, else "p/q".
std::string format_amount(const Amount& a);

Amount sum(const AmountVec& v);

}  // namespace claims
