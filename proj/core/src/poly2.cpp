#include "curvedim/poly2.hpp"

#include <sstream>
#include <stdexcept>

#include "curvedim/errors.hpp"

namespace curvedim {

std::pair<int, int> monomial_exponents(int index) {
  int t = 0;
  while ((t + 1) * (t + 2) / 2 <= index) ++t;
  const int j = index - t * (t + 1) / 2;
  return {t - j, j};
}

namespace {

int checked_degree(int d) {
  if (d < 0) throw std::invalid_argument("negative degree bound");
  if (d > kMaxDegree) {
    throw std::invalid_argument("degree exceeds the supported maximum of " +
                                std::to_string(kMaxDegree));
  }
  return d;
}

}  // namespace

Poly2::Poly2(int degree_bound)
    : degree_bound_(checked_degree(degree_bound)),
      coeffs_(static_cast<std::size_t>(poly_space_dim(degree_bound))) {}

Poly2::Poly2(int degree_bound, std::vector<Rational> coeffs)
    : degree_bound_(checked_degree(degree_bound)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(poly_space_dim(degree_bound))) {
    throw std::invalid_argument("coefficient count does not match bound");
  }
}

Poly2 Poly2::constant(const Rational& c) {
  Poly2 p(0);
  p.coeffs_[0] = c;
  return p;
}

Poly2 Poly2::monomial(int i, int j, const Rational& coeff) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  Poly2 p(i + j);
  p.coeffs_[static_cast<std::size_t>(monomial_index(i, j))] = coeff;
  return p;
}

int Poly2::effective_degree() const {
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    if (coeffs_[idx] != 0) {
      const auto [i, j] = monomial_exponents(static_cast<int>(idx));
      return i + j;
    }
  }
  return -1;
}

const Rational& Poly2::coeff(int i, int j) const {
  return coeffs_[static_cast<std::size_t>(monomial_index(i, j))];
}

void Poly2::set_coeff(int i, int j, const Rational& value) {
  const int idx = monomial_index(i, j);
  if (idx >= static_cast<int>(coeffs_.size())) {
    throw std::invalid_argument("monomial outside degree bound");
  }
  coeffs_[static_cast<std::size_t>(idx)] = value;
}

Poly2 Poly2::operator+(const Poly2& rhs) const {
  Poly2 out(std::max(degree_bound_, rhs.degree_bound_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    out.coeffs_[i] += rhs.coeffs_[i];
  }
  return out;
}

Poly2 Poly2::operator-(const Poly2& rhs) const {
  Poly2 out(std::max(degree_bound_, rhs.degree_bound_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    out.coeffs_[i] -= rhs.coeffs_[i];
  }
  return out;
}

Poly2 Poly2::operator*(const Rational& s) const {
  Poly2 out = *this;
  for (Rational& c : out.coeffs_) c *= s;
  return out;
}

bool operator==(const Poly2& a, const Poly2& b) {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& av = i < a.coeffs_.size() ? a.coeffs_[i] : Rational(0);
    const Rational& bv = i < b.coeffs_.size() ? b.coeffs_[i] : Rational(0);
    if (av != bv) return false;
  }
  return true;
}

Rational eval(const Poly2& p, const Point& pt) {
  const int d = p.degree_bound();
  std::vector<Rational> xp(static_cast<std::size_t>(d) + 1, Rational(1));
  std::vector<Rational> yp(static_cast<std::size_t>(d) + 1, Rational(1));
  for (int i = 1; i <= d; ++i) {
    xp[static_cast<std::size_t>(i)] = xp[static_cast<std::size_t>(i - 1)] * pt.x;
    yp[static_cast<std::size_t>(i)] = yp[static_cast<std::size_t>(i - 1)] * pt.y;
  }
  Rational sum(0);
  for (std::size_t idx = 0; idx < p.coeffs().size(); ++idx) {
    const Rational& c = p.coeffs()[idx];
    if (c == 0) continue;
    const auto [i, j] = monomial_exponents(static_cast<int>(idx));
    sum += c * xp[static_cast<std::size_t>(i)] * yp[static_cast<std::size_t>(j)];
  }
  return sum;
}

Poly2 mul(const Poly2& p, const Poly2& q) {
  Poly2 out(p.degree_bound() + q.degree_bound());
  std::vector<Rational> acc(
      static_cast<std::size_t>(poly_space_dim(out.degree_bound())));
  for (std::size_t pi = 0; pi < p.coeffs().size(); ++pi) {
    const Rational& pc = p.coeffs()[pi];
    if (pc == 0) continue;
    const auto [ai, aj] = monomial_exponents(static_cast<int>(pi));
    for (std::size_t qi = 0; qi < q.coeffs().size(); ++qi) {
      const Rational& qc = q.coeffs()[qi];
      if (qc == 0) continue;
      const auto [bi, bj] = monomial_exponents(static_cast<int>(qi));
      acc[static_cast<std::size_t>(monomial_index(ai + bi, aj + bj))] +=
          pc * qc;
    }
  }
  return Poly2(out.degree_bound(), std::move(acc));
}

std::optional<Poly2> divide_exact(const Poly2& p, const Poly2& divisor) {
  const int dq = divisor.effective_degree();
  if (dq < 0) throw std::invalid_argument("division by the zero polynomial");
  const int dp = p.effective_degree();
  if (dp < 0) return Poly2();  // 0 = divisor * 0
  if (dp < dq) return std::nullopt;

  // Coefficient matching: divisor * r = p as a linear system in r.
  const int dr = dp - dq;
  const int unknowns = poly_space_dim(dr);
  const int equations = poly_space_dim(dp);
  RatMatrix m(static_cast<std::size_t>(equations),
              static_cast<std::size_t>(unknowns));
  for (std::size_t qi = 0; qi < divisor.coeffs().size(); ++qi) {
    const Rational& qc = divisor.coeffs()[qi];
    if (qc == 0) continue;
    const auto [ai, aj] = monomial_exponents(static_cast<int>(qi));
    for (int ri = 0; ri < unknowns; ++ri) {
      const auto [bi, bj] = monomial_exponents(ri);
      m.at(static_cast<std::size_t>(monomial_index(ai + bi, aj + bj)),
           static_cast<std::size_t>(ri)) += qc;
    }
  }
  RatVec rhs(static_cast<std::size_t>(equations));
  for (std::size_t idx = 0; idx < p.coeffs().size(); ++idx) {
    if (static_cast<int>(idx) < equations) rhs[idx] = p.coeffs()[idx];
  }
  auto x = solve(m, rhs);
  if (!x) return std::nullopt;
  return Poly2(dr, std::move(*x));
}

Poly2 normalize_poly(const Poly2& p) {
  for (const Rational& c : p.coeffs()) {
    if (c != 0) {
      if (c == 1) return p;
      Poly2 out = p;
      return out * (Rational(1) / c);
    }
  }
  return p;
}

Line Line::from_coeffs(const Rational& a, const Rational& b,
                       const Rational& c) {
  if (a == 0 && b == 0) throw std::invalid_argument("degenerate line");
  const Rational lead = a != 0 ? a : b;  // first nonzero of (a, b, c)
  return Line{a / lead, b / lead, c / lead};
}

Line Line::through(const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("line through equal points");
  const Rational a = q.y - p.y;
  const Rational b = p.x - q.x;
  const Rational c = -(a * p.x + b * p.y);
  return from_coeffs(a, b, c);
}

Point Line::param_dir() const {
  Point d{b, -a};
  const Rational& lead = d.x != 0 ? d.x : d.y;
  if (lead < 0) {
    d.x = -d.x;
    d.y = -d.y;
  }
  return d;
}

Point Line::param_base() const {
  if (b != 0) return Point{Rational(0), -c / b};
  return Point{-c / a, Rational(0)};
}

Point Line::at(const Rational& t) const {
  const Point base = param_base();
  const Point dir = param_dir();
  return Point{base.x + t * dir.x, base.y + t * dir.y};
}

Poly2 Line::to_poly() const {
  Poly2 p(1);
  p.set_coeff(0, 0, c);
  p.set_coeff(1, 0, a);
  p.set_coeff(0, 1, b);
  return p;
}

namespace {

// Univariate helpers for the line restriction (ascending coefficients).
std::vector<Rational> uni_mul(const std::vector<Rational>& u,
                              const std::vector<Rational>& v) {
  std::vector<Rational> out(u.size() + v.size() - 1);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) out[i + j] += u[i] * v[j];
  }
  return out;
}

}  // namespace

std::vector<Rational> restrict_to_line(const Poly2& p, const Line& line) {
  const int d = p.degree_bound();
  const Point base = line.param_base();
  const Point dir = line.param_dir();
  // powers of x(t) = base.x + dir.x t and y(t)
  std::vector<std::vector<Rational>> xp(static_cast<std::size_t>(d) + 1);
  std::vector<std::vector<Rational>> yp(static_cast<std::size_t>(d) + 1);
  xp[0] = {Rational(1)};
  yp[0] = {Rational(1)};
  const std::vector<Rational> xt = {base.x, dir.x};
  const std::vector<Rational> yt = {base.y, dir.y};
  for (int i = 1; i <= d; ++i) {
    xp[static_cast<std::size_t>(i)] =
        uni_mul(xp[static_cast<std::size_t>(i - 1)], xt);
    yp[static_cast<std::size_t>(i)] =
        uni_mul(yp[static_cast<std::size_t>(i - 1)], yt);
  }
  std::vector<Rational> out(static_cast<std::size_t>(d) + 1);
  for (std::size_t idx = 0; idx < p.coeffs().size(); ++idx) {
    const Rational& c = p.coeffs()[idx];
    if (c == 0) continue;
    const auto [i, j] = monomial_exponents(static_cast<int>(idx));
    const auto term = uni_mul(xp[static_cast<std::size_t>(i)],
                              yp[static_cast<std::size_t>(j)]);
    for (std::size_t t = 0; t < term.size(); ++t) out[t] += c * term[t];
  }
  return out;
}

bool univariate_is_zero(const std::vector<Rational>& coeffs) {
  for (const Rational& c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

Curve Curve::normalized(const Poly2& p) {
  if (p.effective_degree() < 1) {
    throw std::invalid_argument("a curve needs degree >= 1");
  }
  return Curve{normalize_poly(p)};
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line(end == std::string_view::npos
                         ? text.substr(start)
                         : text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

Poly2 parse_poly_lines(const std::vector<std::string>& lines,
                       std::size_t& cursor) {
  while (cursor < lines.size() && split_ws(lines[cursor]).empty()) ++cursor;
  if (cursor >= lines.size()) throw ParseError("missing 'degree d' line");
  const auto header = split_ws(lines[cursor]);
  if (header.size() != 2 || header[0] != "degree") {
    throw ParseError("expected 'degree d'", cursor + 1);
  }
  int d = 0;
  try {
    d = std::stoi(header[1]);
  } catch (const std::exception&) {
    throw ParseError("malformed degree '" + header[1] + "'", cursor + 1);
  }
  if (d < 0) throw ParseError("negative degree", cursor + 1);
  if (d > kMaxDegree) {
    throw ParseError("degree " + std::to_string(d) + " exceeds the maximum " +
                         std::to_string(kMaxDegree),
                     cursor + 1);
  }
  ++cursor;
  while (cursor < lines.size() && split_ws(lines[cursor]).empty()) ++cursor;
  if (cursor >= lines.size()) {
    throw ParseError("missing coefficient line", cursor);
  }
  const auto toks = split_ws(lines[cursor]);
  const std::size_t want = static_cast<std::size_t>(poly_space_dim(d));
  if (toks.size() != want) {
    throw ParseError("expected " + std::to_string(want) +
                         " coefficients, got " + std::to_string(toks.size()),
                     cursor + 1);
  }
  std::vector<Rational> coeffs(want);
  for (std::size_t i = 0; i < want; ++i) {
    try {
      coeffs[i] = parse_rational(toks[i]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), cursor + 1);
    }
  }
  ++cursor;
  return Poly2(d, std::move(coeffs));
}

}  // namespace

Poly2 parse_poly_text(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t cursor = 0;
  Poly2 p = parse_poly_lines(lines, cursor);
  while (cursor < lines.size()) {
    if (!split_ws(lines[cursor]).empty()) {
      throw ParseError("trailing content after polynomial", cursor + 1);
    }
    ++cursor;
  }
  return p;
}

std::vector<Poly2> parse_polys_text(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t cursor = 0;
  std::vector<Poly2> out;
  for (;;) {
    while (cursor < lines.size() && split_ws(lines[cursor]).empty()) ++cursor;
    if (cursor >= lines.size()) break;
    out.push_back(parse_poly_lines(lines, cursor));
  }
  if (out.empty()) throw ParseError("no polynomial in file");
  return out;
}

std::string write_poly_text(const Poly2& p) {
  std::string out = "degree " + std::to_string(p.degree_bound()) + "\n";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ' ';
    out += format_rational(p.coeffs()[i]);
  }
  out += '\n';
  return out;
}

std::string pretty(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t idx = 0; idx < p.coeffs().size(); ++idx) {
    const Rational& c = p.coeffs()[idx];
    if (c == 0) continue;
    const auto [i, j] = monomial_exponents(static_cast<int>(idx));
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    if (i > 0) mono += i == 1 ? "x" : "x^" + std::to_string(i);
    if (j > 0) {
      if (!mono.empty()) mono += " ";
      mono += j == 1 ? "y" : "y^" + std::to_string(j);
    }
    if (mono.empty()) {
      out += format_rational(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += format_rational(mag) + " " + mono;
    }
  }
  return out;
}

}  // namespace curvedim
