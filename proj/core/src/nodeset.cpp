#include "curvedim/nodeset.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "curvedim/errors.hpp"

namespace curvedim {

NodeSet::NodeSet(std::vector<Point> nodes) : nodes_(std::move(nodes)) {
  std::set<Point> seen;
  for (const Point& p : nodes_) {
    if (!seen.insert(p).second) {
      throw std::invalid_argument("duplicate node " + format_point(p));
    }
  }
}

bool NodeSet::contains(const Point& p) const {
  return index_of(p).has_value();
}

std::optional<std::size_t> NodeSet::index_of(const Point& p) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i] == p) return i;
  }
  return std::nullopt;
}

void NodeSet::push_back(const Point& p) {
  if (contains(p)) {
    throw std::invalid_argument("duplicate node " + format_point(p));
  }
  nodes_.push_back(p);
}

NodeSet NodeSet::subset(std::span<const std::size_t> indices) const {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (std::size_t i : indices) pts.push_back(nodes_.at(i));
  return NodeSet(std::move(pts));
}

NodeSet NodeSet::without(std::span<const std::size_t> indices) const {
  std::vector<bool> drop(nodes_.size(), false);
  for (std::size_t i : indices) drop.at(i) = true;
  std::vector<Point> pts;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!drop[i]) pts.push_back(nodes_[i]);
  }
  return NodeSet(std::move(pts));
}

NodeSet NodeSet::with_replaced(std::size_t idx, const Point& p) const {
  std::vector<Point> pts = nodes_;
  pts.at(idx) = p;
  return NodeSet(std::move(pts));
}

NodeSet parse_nodes_text(std::string_view text) {
  std::vector<Point> pts;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line(end == std::string_view::npos
                         ? text.substr(start)
                         : text.substr(start, end - start));
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream iss(line);
    std::string xs, ys, extra;
    if (iss >> xs) {
      if (!(iss >> ys)) {
        throw ParseError("expected 'X Y'", line_no);
      }
      if (iss >> extra) {
        throw ParseError("trailing token '" + extra + "'", line_no);
      }
      Point p;
      try {
        p.x = parse_rational(xs);
        p.y = parse_rational(ys);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
      for (const Point& q : pts) {
        if (q == p) {
          throw ParseError("duplicate node " + format_point(p), line_no);
        }
      }
      pts.push_back(std::move(p));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (pts.empty()) throw ParseError("no nodes in input");
  return NodeSet(std::move(pts));
}

std::string write_nodes_text(const NodeSet& x) {
  std::string out;
  for (const Point& p : x) {
    out += format_rational(p.x);
    out += ' ';
    out += format_rational(p.y);
    out += '\n';
  }
  return out;
}

RatVec vandermonde_row(const Point& p, int n) {
  if (n < 0 || n > kMaxDegree) {
    throw std::invalid_argument("degree outside [0, " +
                                std::to_string(kMaxDegree) + "]");
  }
  std::vector<Rational> xp(static_cast<std::size_t>(n) + 1, Rational(1));
  std::vector<Rational> yp(static_cast<std::size_t>(n) + 1, Rational(1));
  for (int i = 1; i <= n; ++i) {
    xp[static_cast<std::size_t>(i)] = xp[static_cast<std::size_t>(i - 1)] * p.x;
    yp[static_cast<std::size_t>(i)] = yp[static_cast<std::size_t>(i - 1)] * p.y;
  }
  RatVec row(static_cast<std::size_t>(poly_space_dim(n)));
  for (std::size_t idx = 0; idx < row.size(); ++idx) {
    const auto [i, j] = monomial_exponents(static_cast<int>(idx));
    row[idx] = xp[static_cast<std::size_t>(i)] * yp[static_cast<std::size_t>(j)];
  }
  return row;
}

RatMatrix vandermonde(const NodeSet& x, int n) {
  if (n < 0 || n > kMaxDegree) {
    throw std::invalid_argument("degree outside [0, " +
                                std::to_string(kMaxDegree) + "]");
  }
  RatMatrix m(x.size(), static_cast<std::size_t>(poly_space_dim(n)));
  for (std::size_t r = 0; r < x.size(); ++r) {
    const RatVec row = vandermonde_row(x[r], n);
    for (std::size_t c = 0; c < row.size(); ++c) m.at(r, c) = row[c];
  }
  return m;
}

bool is_independent(const NodeSet& x, int n) {
  return rank(vandermonde(x, n)) == x.size();
}

bool is_poised(const NodeSet& x, int n) {
  const std::size_t full = static_cast<std::size_t>(poly_space_dim(n));
  return x.size() == full && rank(vandermonde(x, n)) == full;
}

std::size_t dim_vanishing(const NodeSet& x, int n) {
  return static_cast<std::size_t>(poly_space_dim(n)) -
         rank(vandermonde(x, n));
}

VanishingSpace vanishing_basis(const NodeSet& x, int n) {
  VanishingSpace space;
  space.degree = n;
  for (auto& v : nullspace(vandermonde(x, n))) {
    space.basis.emplace_back(n, std::move(v));
  }
  return space;
}

std::optional<Poly2> fundamental_polynomial(const NodeSet& x, std::size_t idx,
                                            int n) {
  if (idx >= x.size()) throw std::invalid_argument("node index out of range");
  RatVec rhs(x.size());
  rhs[idx] = 1;
  auto sol = solve(vandermonde(x, n), rhs);
  if (!sol) return std::nullopt;
  return Poly2(n, std::move(*sol));
}

std::vector<std::size_t> max_independent_subset_indices(const NodeSet& x,
                                                        int n) {
  IncrementalRank tracker(static_cast<std::size_t>(poly_space_dim(n)));
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (tracker.try_add(vandermonde_row(x[i], n))) kept.push_back(i);
  }
  return kept;
}

NodeSet max_independent_subset(const NodeSet& x, int n) {
  return x.subset(max_independent_subset_indices(x, n));
}

}  // namespace curvedim
