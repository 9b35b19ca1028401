#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace g2flat {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. cpp_rational keeps gcd(num, den) = 1 and den >= 1
/// after every operation, so equality is plain componentwise comparison.
using Rat = boost::multiprecision::cpp_rational;

/// Parse "p" or "p/q" with q > 0. Throws std::invalid_argument with the
/// offending text on malformed input (including "p/0" and negative q).
Rat rat_parse(const std::string& text);

/// Inverse of rat_parse: "p" for integers, "p/q" otherwise.
std::string rat_str(const Rat& x);

inline Rat rat(long long n) { return Rat(n); }
inline Rat rat(long long n, long long d) { return Rat(n) / Rat(d); }

}  // namespace g2flat
