#ifndef CURVEDIM_RATIONAL_HPP
#define CURVEDIM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace curvedim {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always reduced, denominator >= 1, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

// Builds num/den for any nonzero den (sign is moved to the numerator).
Rational make_rational(BigInt num, BigInt den);

// Accepts "p" or "p/q" with an optional leading '-' on p and q >= 1.
Rational parse_rational(std::string_view token);

// Lowest terms, "p" when q == 1, "p/q" otherwise.
std::string format_rational(const Rational& r);

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

std::string format_point(const Point& p);

}  // namespace curvedim

#endif  // CURVEDIM_RATIONAL_HPP
