#include "curvedim/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "curvedim/errors.hpp"

namespace curvedim {

namespace {

std::array<Rational, 4> invert_2x2(const std::array<Rational, 4>& m) {
  const Rational det = m[0] * m[3] - m[1] * m[2];
  if (det == 0) throw std::invalid_argument("singular affine map");
  return {m[3] / det, -m[1] / det, -m[2] / det, m[0] / det};
}

// Degree-1 polynomials for the inverse-image coordinates of an affine map.
std::pair<Poly2, Poly2> inverse_coordinates(const std::array<Rational, 4>& m,
                                            const Point& shift) {
  const auto inv = invert_2x2(m);
  Poly2 u(1), v(1);
  u.set_coeff(1, 0, inv[0]);
  u.set_coeff(0, 1, inv[1]);
  u.set_coeff(0, 0, -(inv[0] * shift.x + inv[1] * shift.y));
  v.set_coeff(1, 0, inv[2]);
  v.set_coeff(0, 1, inv[3]);
  v.set_coeff(0, 0, -(inv[2] * shift.x + inv[3] * shift.y));
  return {u, v};
}

}  // namespace

CurveComponent CurveComponent::line(const Line& l) {
  CurveComponent c;
  c.kind_ = Kind::line;
  c.line_ = l;
  c.implicit_ = normalize_poly(l.to_poly());
  return c;
}

CurveComponent CurveComponent::circle() {
  return affine_circle({Rational(1), Rational(0), Rational(0), Rational(1)},
                       Point{Rational(0), Rational(0)});
}

CurveComponent CurveComponent::affine_circle(const std::array<Rational, 4>& m,
                                             const Point& shift) {
  CurveComponent c;
  c.kind_ = Kind::conic;
  c.map_ = m;
  c.shift_ = shift;
  c.parabola_ = false;
  const auto [u, v] = inverse_coordinates(m, shift);
  c.implicit_ =
      normalize_poly(mul(u, u) + mul(v, v) - Poly2::constant(Rational(1)));
  return c;
}

CurveComponent CurveComponent::affine_parabola(
    const std::array<Rational, 4>& m, const Point& shift) {
  CurveComponent c;
  c.kind_ = Kind::conic;
  c.map_ = m;
  c.shift_ = shift;
  c.parabola_ = true;
  const auto [u, v] = inverse_coordinates(m, shift);
  c.implicit_ = normalize_poly(v - mul(u, u));
  return c;
}

Point CurveComponent::at(const Rational& t) const {
  if (kind_ == Kind::line) return line_->at(t);
  Rational bu, bv;
  if (parabola_) {
    bu = t;
    bv = t * t;
  } else {
    const Rational denom = Rational(1) + t * t;
    bu = (Rational(1) - t * t) / denom;
    bv = (Rational(2) * t) / denom;
  }
  return Point{map_[0] * bu + map_[1] * bv + shift_.x,
               map_[2] * bu + map_[3] * bv + shift_.y};
}

ParamCurve::ParamCurve(std::vector<CurveComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::invalid_argument("curve needs at least one component");
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    for (std::size_t j = i + 1; j < components_.size(); ++j) {
      if (components_[i].implicit_poly() == components_[j].implicit_poly()) {
        throw std::invalid_argument("repeated curve component");
      }
    }
  }
}

int ParamCurve::degree() const {
  int d = 0;
  for (const auto& c : components_) d += c.degree();
  return d;
}

Poly2 ParamCurve::implicit_poly() const {
  Poly2 prod = Poly2::constant(Rational(1));
  for (const auto& c : components_) prod = mul(prod, c.implicit_poly());
  return normalize_poly(prod);
}

bool ParamCurve::contains(const Point& p) const {
  for (const auto& c : components_) {
    if (c.contains(p)) return true;
  }
  return false;
}

bool ParamCurve::on_multiple_components(const Point& p) const {
  int hits = 0;
  for (const auto& c : components_) {
    if (c.contains(p) && ++hits > 1) return true;
  }
  return false;
}

ChungYaoLattice chung_yao(const std::vector<Line>& lines) {
  if (lines.size() < 3) {
    throw std::invalid_argument("need at least 3 lines");
  }
  const std::size_t count = lines.size();
  const int n = static_cast<int>(count) - 2;

  // pairwise intersections; exact general-position checks
  std::vector<Point> pts;
  std::vector<std::pair<std::size_t, std::size_t>> node_lines;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const Rational det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
      if (det == 0) {
        throw std::invalid_argument("parallel or equal construction lines");
      }
      const Point p{(lines[i].b * lines[j].c - lines[j].b * lines[i].c) / det,
                    (lines[j].a * lines[i].c - lines[i].a * lines[j].c) / det};
      for (std::size_t l = 0; l < count; ++l) {
        if (l != i && l != j && lines[l].contains(p)) {
          throw std::invalid_argument("three concurrent construction lines");
        }
      }
      pts.push_back(p);
      node_lines.emplace_back(i, j);
    }
  }

  ChungYaoLattice lat;
  lat.n = n;
  lat.lines = lines;
  lat.nodes = NodeSet(std::move(pts));
  lat.node_lines = std::move(node_lines);

  for (std::size_t idx = 0; idx < lat.nodes.size(); ++idx) {
    Poly2 prod = Poly2::constant(Rational(1));
    for (std::size_t l = 0; l < count; ++l) {
      if (l == lat.node_lines[idx].first || l == lat.node_lines[idx].second) {
        continue;
      }
      prod = mul(prod, lines[l].to_poly());
    }
    const Rational value = eval(prod, lat.nodes[idx]);
    lat.fundamentals.push_back(prod * (Rational(1) / value));
  }

  // certificate: fundamental values and poisedness, re-checked exactly
  for (std::size_t r = 0; r < lat.nodes.size(); ++r) {
    for (std::size_t s = 0; s < lat.nodes.size(); ++s) {
      const Rational v = eval(lat.fundamentals[r], lat.nodes[s]);
      if (v != Rational(r == s ? 1 : 0)) {
        throw std::logic_error("lattice certificate failed");
      }
    }
  }
  if (!is_poised(lat.nodes, n)) {
    throw std::logic_error("lattice is not poised");
  }
  return lat;
}

std::vector<Line> random_lines_general_position(std::size_t count,
                                                const SearchBudget& budget) {
  Rng rng(budget.seed);
  const long long bound = budget.coordinate_bound;
  std::vector<Line> lines;
  long long attempts =
      static_cast<long long>(budget.max_attempts) *
      static_cast<long long>(count + 1);
  while (lines.size() < count) {
    if (--attempts < 0) {
      throw BudgetError("line family search exhausted its budget");
    }
    const Rational a(rng.in_range(-bound, bound));
    const Rational b(rng.in_range(-bound, bound));
    const Rational c(rng.in_range(-bound, bound));
    if (a == 0 && b == 0) continue;
    const Line cand = Line::from_coeffs(a, b, c);
    bool ok = true;
    for (const Line& l : lines) {
      if (l.a * cand.b - cand.a * l.b == 0) {
        ok = false;  // parallel (or equal)
        break;
      }
    }
    if (!ok) continue;
    // candidate must not pass through an existing intersection
    for (std::size_t i = 0; i < lines.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < lines.size() && ok; ++j) {
        const Rational det =
            lines[i].a * lines[j].b - lines[j].a * lines[i].b;
        const Point p{
            (lines[i].b * lines[j].c - lines[j].b * lines[i].c) / det,
            (lines[j].a * lines[i].c - lines[i].a * lines[j].c) / det};
        if (cand.contains(p)) ok = false;
      }
    }
    if (ok) lines.push_back(cand);
  }
  return lines;
}

namespace {

long long attempt_cap(const SearchBudget& budget, std::size_t items) {
  return static_cast<long long>(budget.max_attempts) *
         static_cast<long long>(items + 1);
}

// Curve parameters stay small: big |t| values crowd the rational points
// of the base conics around one end and blow up coordinate sizes.
long long param_bound(const SearchBudget& budget) {
  return std::min<long long>(budget.coordinate_bound, 12);
}

}  // namespace

NodeSet sample_on_curve(const ParamCurve& c,
                        const std::vector<std::size_t>& per_component,
                        const SearchBudget& budget) {
  if (per_component.size() != c.components().size()) {
    throw std::invalid_argument("per-component counts do not match curve");
  }
  Rng rng(budget.seed);
  NodeSet out;
  std::size_t total = 0;
  for (std::size_t n : per_component) total += n;
  long long attempts = attempt_cap(budget, total);
  for (std::size_t ci = 0; ci < per_component.size(); ++ci) {
    const CurveComponent& comp = c.components()[ci];
    std::size_t placed = 0;
    while (placed < per_component[ci]) {
      if (--attempts < 0) {
        throw BudgetError("on-curve sampling exhausted its budget");
      }
      const Point p = comp.at(rng.rational(param_bound(budget)));
      if (out.contains(p) || c.on_multiple_components(p)) continue;
      out.push_back(p);
      ++placed;
    }
  }
  // certificate: every point satisfies its component equation exactly
  for (const Point& p : out) {
    if (!c.contains(p)) throw std::logic_error("sample left the curve");
  }
  return out;
}

NodeSet sample_on_curve(const ParamCurve& c, std::size_t count,
                        const SearchBudget& budget) {
  const std::size_t k = c.components().size();
  std::vector<std::size_t> per(k, count / k);
  for (std::size_t i = 0; i < count % k; ++i) ++per[i];
  return sample_on_curve(c, per, budget);
}

NodeSet extend_to_poised(const NodeSet& x, int n, const SearchBudget& budget) {
  const std::size_t full = static_cast<std::size_t>(poly_space_dim(n));
  if (x.size() > full) {
    throw std::invalid_argument("set is larger than poly_space_dim(n)");
  }
  IncrementalRank tracker(full);
  for (const Point& p : x) {
    if (!tracker.try_add(vandermonde_row(p, n))) {
      throw std::invalid_argument("input set is not n-independent");
    }
  }
  Rng rng(budget.seed);
  NodeSet out = x;
  long long attempts = attempt_cap(budget, full - x.size());
  while (out.size() < full) {
    if (--attempts < 0) {
      throw BudgetError("poised extension exhausted its budget");
    }
    const Point p{Rational(rng.in_range(-budget.coordinate_bound,
                                        budget.coordinate_bound)),
                  Rational(rng.in_range(-budget.coordinate_bound,
                                        budget.coordinate_bound))};
    if (out.contains(p)) continue;
    if (tracker.try_add(vandermonde_row(p, n))) out.push_back(p);
  }
  if (!is_poised(out, n)) throw std::logic_error("extension is not poised");
  return out;
}

Point extend_multi(const std::vector<NodeSet>& sets, int n,
                   const Point& anchor, const SearchBudget& budget) {
  if (sets.empty()) throw std::invalid_argument("no sets given");
  const std::size_t full = static_cast<std::size_t>(poly_space_dim(n));
  std::vector<IncrementalRank> trackers;
  for (const NodeSet& s : sets) {
    if (s.size() >= full) {
      throw std::invalid_argument("a set already has poly_space_dim(n) nodes");
    }
    IncrementalRank t(full);
    for (const Point& p : s) {
      if (!t.try_add(vandermonde_row(p, n))) {
        throw std::invalid_argument("an input set is not n-independent");
      }
    }
    trackers.push_back(std::move(t));
  }

  Rng rng(budget.seed);
  const auto acceptable = [&](const Point& cand) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (sets[i].contains(cand)) return false;
      if (!trackers[i].independent_of(vandermonde_row(cand, n))) return false;
    }
    return true;
  };
  const auto certify = [&](const Point& cand) {
    for (const NodeSet& s : sets) {
      NodeSet augmented = s;
      augmented.push_back(cand);
      if (!is_independent(augmented, n)) {
        throw std::logic_error("multi-set extension certificate failed");
      }
    }
    return cand;
  };

  if (acceptable(anchor)) return certify(anchor);
  // refining grid around the anchor, step halved every 8 attempts
  for (int attempt = 1; attempt < budget.max_attempts; ++attempt) {
    const int h = 1 + (attempt - 1) / 8;
    const long long den = 1ll << std::min(h, 40);
    const Rational dx =
        budget.radius * Rational(rng.in_range(-den, den), den);
    const Rational dy =
        budget.radius * Rational(rng.in_range(-den, den), den);
    const Point cand{anchor.x + dx, anchor.y + dy};
    if (acceptable(cand)) return certify(cand);
  }
  throw BudgetError("multi-set extension exhausted its budget");
}

NodeSet grow_on_curve(const NodeSet& x, const ParamCurve& sigma, int n,
                      std::size_t target, const SearchBudget& budget) {
  if (target > dnk(n, sigma.degree())) {
    throw std::invalid_argument("target exceeds dnk(n, deg sigma)");
  }
  for (const Point& p : x) {
    if (!sigma.contains(p)) {
      throw std::invalid_argument("input node off the curve");
    }
  }
  IncrementalRank tracker(static_cast<std::size_t>(poly_space_dim(n)));
  for (const Point& p : x) {
    if (!tracker.try_add(vandermonde_row(p, n))) {
      throw std::invalid_argument("input set is not n-independent");
    }
  }
  Rng rng(budget.seed);
  NodeSet out = x;
  const auto& comps = sigma.components();
  long long attempts = attempt_cap(budget, target - std::min(target, x.size()));
  std::size_t spin = 0;
  while (out.size() < target) {
    if (--attempts < 0) {
      throw BudgetError("on-curve extension exhausted its budget");
    }
    const CurveComponent& comp = comps[spin++ % comps.size()];
    const Point p = comp.at(rng.rational(param_bound(budget)));
    if (out.contains(p) || sigma.on_multiple_components(p)) continue;
    if (tracker.try_add(vandermonde_row(p, n))) out.push_back(p);
  }
  if (!is_independent(out, n) || !std::all_of(out.begin(), out.end(),
                                              [&](const Point& p) {
                                                return sigma.contains(p);
                                              })) {
    throw std::logic_error("on-curve extension certificate failed");
  }
  return out;
}

NodeSet extend_on_curve_to_maximal(const NodeSet& x, const ParamCurve& sigma,
                                   int n, const SearchBudget& budget) {
  return grow_on_curve(x, sigma, n, dnk(n, sigma.degree()), budget);
}

NodeSet replace_node(const NodeSet& x, std::size_t idx,
                     const ParamCurve& target, int n,
                     const SearchBudget& budget) {
  if (idx >= x.size()) throw std::invalid_argument("node index out of range");
  if (!is_independent(x, n)) {
    throw std::invalid_argument("input set is not n-independent");
  }
  const Poly2 divisor = target.curve().poly;
  Poly2 p_star = *fundamental_polynomial(x, idx, n);
  if (divide_exact(p_star, divisor)) {
    // look for a fundamental polynomial the target does not divide:
    // p* + v is one for every v vanishing on all of X
    bool found = false;
    for (const Poly2& v : vanishing_basis(x, n).basis) {
      if (!divide_exact(v, divisor)) {
        p_star = p_star + v;
        found = true;
        break;
      }
    }
    if (!found) {
      throw ReplacementError(
          "target divides every fundamental polynomial of the node");
    }
  }

  Rng rng(budget.seed);
  const auto& comps = target.components();
  long long attempts = attempt_cap(budget, 1);
  std::size_t spin = 0;
  while (--attempts >= 0) {
    const CurveComponent& comp = comps[spin++ % comps.size()];
    const Point p = comp.at(rng.rational(param_bound(budget)));
    if (target.on_multiple_components(p)) continue;
    if (eval(p_star, p) == 0) continue;
    bool duplicate = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i != idx && x[i] == p) duplicate = true;
    }
    if (duplicate) continue;
    NodeSet out = x.with_replaced(idx, p);
    if (!is_independent(out, n)) continue;  // certificate
    return out;
  }
  throw BudgetError("node replacement exhausted its budget");
}

std::optional<std::vector<std::pair<std::size_t, std::size_t>>> pair_partition(
    const std::vector<Line>& lines, const std::vector<Point>& pts) {
  if (pts.size() % 2 != 0) {
    throw std::invalid_argument("need an even number of points");
  }
  const std::size_t m = pts.size() / 2;
  std::vector<std::vector<std::size_t>> on_line(lines.size());
  for (std::size_t pi = 0; pi < pts.size(); ++pi) {
    std::size_t hits = 0;
    std::size_t home = 0;
    for (std::size_t li = 0; li < lines.size(); ++li) {
      if (lines[li].contains(pts[pi])) {
        ++hits;
        home = li;
      }
    }
    if (hits != 1) {
      throw std::invalid_argument("every point must lie on exactly one line");
    }
    on_line[home].push_back(pi);
  }
  for (const auto& members : on_line) {
    if (members.size() > m) return std::nullopt;
  }

  // greedy: pair the two most loaded lines, smallest point index first
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t first = lines.size(), second = lines.size();
    for (std::size_t li = 0; li < lines.size(); ++li) {
      if (on_line[li].empty()) continue;
      if (first == lines.size() ||
          on_line[li].size() > on_line[first].size()) {
        second = first;
        first = li;
      } else if (second == lines.size() ||
                 on_line[li].size() > on_line[second].size()) {
        second = li;
      }
    }
    std::size_t a = on_line[first].front();
    std::size_t b = on_line[second].front();
    on_line[first].erase(on_line[first].begin());
    on_line[second].erase(on_line[second].begin());
    if (a > b) std::swap(a, b);
    pairs.emplace_back(a, b);
  }
  return pairs;
}

NodeSet random_independent_nodeset(std::size_t count, int n,
                                   const SearchBudget& budget) {
  const std::size_t full = static_cast<std::size_t>(poly_space_dim(n));
  if (count > full) {
    throw std::invalid_argument("count exceeds poly_space_dim(n)");
  }
  Rng rng(budget.seed);
  IncrementalRank tracker(full);
  NodeSet out;
  long long attempts = attempt_cap(budget, count);
  while (out.size() < count) {
    if (--attempts < 0) {
      throw BudgetError("independent set search exhausted its budget");
    }
    const Point p{Rational(rng.in_range(-budget.coordinate_bound,
                                        budget.coordinate_bound)),
                  Rational(rng.in_range(-budget.coordinate_bound,
                                        budget.coordinate_bound))};
    if (out.contains(p)) continue;
    if (tracker.try_add(vandermonde_row(p, n))) out.push_back(p);
  }
  if (!is_independent(out, n)) {
    throw std::logic_error("independence certificate failed");
  }
  return out;
}

PlantedConfig plant_on_curve_config(int n, int curve_degree,
                                    std::size_t on_count,
                                    std::size_t off_count,
                                    const SearchBudget& budget) {
  if (curve_degree < 1 || curve_degree > 3) {
    throw std::invalid_argument("supported planted curve degrees: 1, 2, 3");
  }
  Rng rng(budget.seed);
  const auto random_line = [&rng]() {
    for (;;) {
      const Rational a(rng.in_range(-9, 9));
      const Rational b(rng.in_range(-9, 9));
      const Rational c(rng.in_range(-9, 9));
      if (a == 0 && b == 0) continue;
      return Line::from_coeffs(a, b, c);
    }
  };

  PlantedConfig cfg;
  switch (curve_degree) {
    case 1:
      cfg.components = {CurveComponent::line(random_line())};
      break;
    case 2:
      cfg.components = {CurveComponent::circle()};
      break;
    default:
      cfg.components = {CurveComponent::line(random_line()),
                        CurveComponent::circle()};
      break;
  }
  const ParamCurve curve = cfg.param_curve();

  SearchBudget grow_budget = budget;
  grow_budget.seed = rng.next();
  cfg.nodes = grow_on_curve(NodeSet(), curve, n, on_count, grow_budget);

  IncrementalRank tracker(static_cast<std::size_t>(poly_space_dim(n)));
  for (const Point& p : cfg.nodes) tracker.try_add(vandermonde_row(p, n));

  long long attempts = attempt_cap(budget, off_count);
  const Poly2 implicit = curve.implicit_poly();
  while (cfg.off_curve.size() < off_count) {
    if (--attempts < 0) {
      throw BudgetError("off-curve node search exhausted its budget");
    }
    const Point p{Rational(rng.in_range(-budget.coordinate_bound,
                                        budget.coordinate_bound)),
                  Rational(rng.in_range(-budget.coordinate_bound,
                                        budget.coordinate_bound))};
    if (cfg.nodes.contains(p) || eval(implicit, p) == 0) continue;
    if (!tracker.try_add(vandermonde_row(p, n))) continue;
    cfg.off_curve.push_back(cfg.nodes.size());
    cfg.nodes.push_back(p);
  }
  if (!is_independent(cfg.nodes, n)) {
    throw std::logic_error("planted configuration certificate failed");
  }
  return cfg;
}

}  // namespace curvedim
