#include "g2flat/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace g2flat {

namespace {

bool valid_integer(const std::string& s, std::size_t begin, std::size_t end) {
    if (begin >= end) return false;
    std::size_t i = begin;
    if (s[i] == '-') ++i;
    if (i >= end) return false;
    for (; i < end; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat rat_parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer(text, 0, text.size()))
            throw std::invalid_argument("not a rational: '" + text + "'");
        return Rat(Int(text));
    }
    if (!valid_integer(text, 0, slash) || !valid_integer(text, slash + 1, text.size()))
        throw std::invalid_argument("not a rational: '" + text + "'");
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den <= 0)
        throw std::invalid_argument("denominator must be positive: '" + text + "'");
    return Rat(num) / Rat(den);
}

std::string rat_str(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace g2flat
