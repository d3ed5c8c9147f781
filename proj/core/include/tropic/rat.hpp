#ifndef TROPIC_RAT_HPP
#define TROPIC_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tropic {

/// Exact rational number. Always stored in lowest terms with positive
/// denominator; arithmetic and comparison never round. All numeric data in
/// this library (type matrices, payments, weights, certificates) lives in
/// this type -- there is no floating point in any decision procedure.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// Parses "7", "-12", "4.3" (exactly 43/10) or "p/q". Throws ParseError.
Rat parse_rat(std::string_view text);

/// "p/q", or just "p" when the denominator is one.
std::string format_rat(const Rat& value);

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

int sign(const Rat& value);

} // namespace tropic

#endif
