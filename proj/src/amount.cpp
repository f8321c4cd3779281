#include "claims/amount.hpp"

#include <cctype>

namespace claims {

namespace {

Integer parse_integer(std::string_view text) {
    if (text.empty())
        throw ParseError("empty integer");
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size())
        throw ParseError("sign without digits: '" + std::string(text) + "'");
    Integer value = 0;
    for (; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("invalid integer: '" + std::string(text) + "'");
        value = value * 10 + (ch - '0');
    }
    return negative ? Integer(-value) : value;
}

}  // namespace

Amount parse_amount(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Amount(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Amount(num, den);
}

std::string format_amount(const Amount& a) {
    if (denominator(a) == 1)
        return numerator(a).str();
    return numerator(a).str() + "/" + denominator(a).str();
}

Amount sum(const AmountVec& v) {
    Amount total = 0;
    for (const auto& x : v)
        total += x;
    return total;
}

}  // namespace claims
