#include "curvedim/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "curvedim/errors.hpp"

namespace curvedim {

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view token) {
  std::string_view num = token;
  std::string_view den;
  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    num = token.substr(0, slash);
    den = token.substr(slash + 1);
  }
  bool neg = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    neg = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num)) {
    throw ParseError("malformed rational '" + std::string(token) + "'");
  }
  BigInt n{std::string(num)};
  if (neg) n = -n;
  if (den.data() == nullptr) return Rational(n);
  if (!all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(token) + "'");
  }
  BigInt d(std::string{den});
  if (d == 0) {
    throw ParseError("zero denominator in '" + std::string(token) + "'");
  }
  return Rational(std::move(n), std::move(d));
}

std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

std::string format_point(const Point& p) {
  return "(" + format_rational(p.x) + ", " + format_rational(p.y) + ")";
}

}  // namespace curvedim
