#include "ramur/rational.hpp"

#include <cctype>

#include "ramur/errors.hpp"

namespace ramur {

Rational rat(long num, long den) {
  if (den == 0) throw ParseError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  std::string num = body;
  std::string den = "1";
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not a rational: \"" + text + "\"");
  }
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator: \"" + text + "\"");
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& value) { return value.get_str(); }

bool is_probability(const Rational& value) { return value >= 0 && value <= 1; }

}  // namespace ramur
