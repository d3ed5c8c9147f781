#include "tropic/rat.hpp"

#include "tropic/errors.hpp"

#include <cctype>

namespace tropic {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Int parse_int(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw ParseError("not a rational number: '" + std::string(whole) + "'");
  }
  Int v(std::string(s));
  return negative ? Int(-v) : v;
}

} // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Int num = parse_int(s.substr(0, slash), text);
    std::string_view den_part = s.substr(slash + 1);
    if (!all_digits(den_part)) {
      throw ParseError("denominator must be a positive integer: '" + std::string(text) + "'");
    }
    Int den(std::string(den_part));
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Rat(num, den);
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view head = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (!all_digits(frac)) {
      throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    bool negative = !head.empty() && head.front() == '-';
    Int whole = head.empty() || head == "-" || head == "+" ? Int(0) : parse_int(head, text);
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int num = abs(whole) * scale + Int(std::string(frac));
    if (negative) num = -num;
    return Rat(num, scale);
  }

  return Rat(parse_int(s, text));
}

std::string format_rat(const Rat& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

int sign(const Rat& value) {
  if (value > 0) return 1;
  if (value < 0) return -1;
  return 0;
}

} // namespace tropic
