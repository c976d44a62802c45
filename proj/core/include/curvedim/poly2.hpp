#ifndef CURVEDIM_POLY2_HPP
#define CURVEDIM_POLY2_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvedim/matrix.hpp"
#include "curvedim/rational.hpp"

namespace curvedim {

// Degrees are capped engine-wide so dimension arithmetic stays far from
// int overflow and hostile inputs cannot demand absurd allocations.
constexpr int kMaxDegree = 1000;

// Monomials x^i y^j with i+j <= d are enumerated by ascending total
// degree; inside degree t the y-power ascends: x^t, x^{t-1} y, ..., y^t.
// The index of x^i y^j is t(t+1)/2 + j with t = i+j.
constexpr int poly_space_dim(int d) { return (d + 1) * (d + 2) / 2; }

constexpr int monomial_index(int i, int j) {
  const int t = i + j;
  return t * (t + 1) / 2 + j;
}

// Inverse of monomial_index.
std::pair<int, int> monomial_exponents(int index);

// Bivariate polynomial with a fixed degree bound; coefficient vector of
// length poly_space_dim(degree_bound) in monomial order.
class Poly2 {
 public:
  Poly2() : degree_bound_(0), coeffs_(1) {}
  explicit Poly2(int degree_bound);
  Poly2(int degree_bound, std::vector<Rational> coeffs);

  static Poly2 constant(const Rational& c);
  static Poly2 monomial(int i, int j, const Rational& coeff = Rational(1));

  int degree_bound() const { return degree_bound_; }
  // Largest total degree with a nonzero coefficient; -1 for the zero
  // polynomial.
  int effective_degree() const;
  bool is_zero() const { return effective_degree() < 0; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(int i, int j) const;
  void set_coeff(int i, int j, const Rational& value);

  Poly2 operator+(const Poly2& rhs) const;
  Poly2 operator-(const Poly2& rhs) const;
  Poly2 operator*(const Rational& s) const;

  // Mathematical equality (degree bounds may differ).
  friend bool operator==(const Poly2& a, const Poly2& b);
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

 private:
  int degree_bound_;
  std::vector<Rational> coeffs_;
};

Rational eval(const Poly2& p, const Point& pt);

// Product with degree bound p.degree_bound() + q.degree_bound().
Poly2 mul(const Poly2& p, const Poly2& q);

// r with p = divisor * r exactly, if such r exists in
// Pi_{deg p - deg divisor} (coefficient matching, decided by solve());
// nullopt when p is not divisible. Throws std::invalid_argument for a
// zero divisor.
std::optional<Poly2> divide_exact(const Poly2& p, const Poly2& divisor);

// Scales so the first nonzero coefficient in monomial order is 1.
// The zero polynomial is returned unchanged.
Poly2 normalize_poly(const Poly2& p);

// Line ax + by + c = 0. Canonical: the first nonzero of (a, b, c) is 1.
// Parametrization: base + t * dir, where dir is (b, -a) flipped if
// necessary so its first nonzero coordinate is positive, and base is
// (0, -c/b) when b != 0, else (-c/a, 0).
struct Line {
  Rational a;
  Rational b;
  Rational c;

  // Throws std::invalid_argument when a = b = 0.
  static Line from_coeffs(const Rational& a, const Rational& b,
                          const Rational& c);
  // Line through two distinct points.
  static Line through(const Point& p, const Point& q);

  Rational eval(const Point& p) const { return a * p.x + b * p.y + c; }
  bool contains(const Point& p) const { return eval(p) == 0; }

  Point param_base() const;
  Point param_dir() const;
  Point at(const Rational& t) const;

  Poly2 to_poly() const;  // degree bound 1

  friend bool operator==(const Line& l, const Line& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c;
  }
  friend bool operator!=(const Line& l, const Line& r) { return !(l == r); }
};

// Coefficients of p(base + t*dir) in ascending powers of t, length
// degree_bound + 1. Identically zero iff the line divides p.
std::vector<Rational> restrict_to_line(const Poly2& p, const Line& line);

bool univariate_is_zero(const std::vector<Rational>& coeffs);

// A polynomial of degree >= 1 in canonical normalization, viewed as its
// zero set.
struct Curve {
  Poly2 poly;

  // Throws std::invalid_argument when p is zero or of degree < 1.
  static Curve normalized(const Poly2& p);

  int degree() const { return poly.effective_degree(); }
  Rational eval_at(const Point& pt) const { return eval(poly, pt); }

  friend bool operator==(const Curve& a, const Curve& b) {
    return a.poly == b.poly;
  }
  friend bool operator!=(const Curve& a, const Curve& b) { return !(a == b); }
};

// Text format: line 1 is "degree d", line 2 has poly_space_dim(d)
// rationals separated by single spaces.
Poly2 parse_poly_text(std::string_view text);
// Several polynomials, each in the two-line format above.
std::vector<Poly2> parse_polys_text(std::string_view text);
std::string write_poly_text(const Poly2& p);

// Human-readable form, e.g. "1 - x^2 - y^2".
std::string pretty(const Poly2& p);

}  // namespace curvedim

#endif  // CURVEDIM_POLY2_HPP
