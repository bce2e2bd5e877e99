#include "rational.hpp"

#include <cctype>

#include "errors.hpp"

namespace fpg {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw UsageError("rational with zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational rational_from_string(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '+' || part[0] == '-')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw ParseError("bad rational literal '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);  // mpq_set_str rejects '+'
  Rational r(std::string(num) + "/" + std::string(den));
  if (r.get_den() == 0) throw ParseError("rational with zero denominator");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace fpg
