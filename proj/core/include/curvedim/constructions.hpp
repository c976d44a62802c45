#ifndef CURVEDIM_CONSTRUCTIONS_HPP
#define CURVEDIM_CONSTRUCTIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "curvedim/curves.hpp"
#include "curvedim/rng.hpp"

namespace curvedim {

// Knobs for the seeded randomized searches. `radius` bounds how far
// extend_multi may move from its anchor.
struct SearchBudget {
  std::uint64_t seed = 0;
  int max_attempts = 64;
  int coordinate_bound = 50;
  Rational radius = Rational(1);
};

// One irreducible component with an exact rational parametrization.
class CurveComponent {
 public:
  enum class Kind { line, conic };

  static CurveComponent line(const Line& l);
  // Unit circle x^2 + y^2 = 1, t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)).
  static CurveComponent circle();
  // Image of the unit circle under an invertible affine map (an ellipse).
  // m is row-major 2x2.
  static CurveComponent affine_circle(const std::array<Rational, 4>& m,
                                      const Point& shift);
  // Image of (t, t^2) under an invertible affine map (a parabola).
  static CurveComponent affine_parabola(const std::array<Rational, 4>& m,
                                        const Point& shift);

  Kind kind() const { return kind_; }
  int degree() const { return kind_ == Kind::line ? 1 : 2; }
  const Poly2& implicit_poly() const { return implicit_; }  // normalized
  Point at(const Rational& t) const;
  bool contains(const Point& p) const { return eval(implicit_, p) == 0; }

 private:
  CurveComponent() = default;
  Kind kind_ = Kind::line;
  Poly2 implicit_;
  // line: base + t*dir; conics: affine image of the base parametrization
  std::optional<Line> line_;
  std::array<Rational, 4> map_{};
  Point shift_;
  bool parabola_ = false;
};

// Product of pairwise distinct parametrized components; squarefree by
// construction.
class ParamCurve {
 public:
  // Throws std::invalid_argument when empty or two components coincide.
  explicit ParamCurve(std::vector<CurveComponent> components);

  const std::vector<CurveComponent>& components() const { return components_; }
  int degree() const;
  Poly2 implicit_poly() const;  // normalized product
  Curve curve() const { return Curve::normalized(implicit_poly()); }

  bool contains(const Point& p) const;
  // True when p satisfies two or more component equations.
  bool on_multiple_components(const Point& p) const;

 private:
  std::vector<CurveComponent> components_;
};

// Chung-Yao lattice of n+2 lines in general position: the C(n+2, 2)
// pairwise intersections, which form an n-poised set whose fundamental
// polynomials split into n lines. Everything is certified exactly on
// construction.
struct ChungYaoLattice {
  int n = 0;
  std::vector<Line> lines;
  NodeSet nodes;  // pair (i, j) order, lexicographic
  std::vector<std::pair<std::size_t, std::size_t>> node_lines;
  std::vector<Poly2> fundamentals;  // value 1 at the own node
};

// Throws std::invalid_argument when two lines are parallel (or equal) or
// three lines are concurrent.
ChungYaoLattice chung_yao(const std::vector<Line>& lines);

// Seeded integer-coefficient lines with the general-position certificate.
std::vector<Line> random_lines_general_position(std::size_t count,
                                                const SearchBudget& budget);

// `count` distinct points on the curve, parameters drawn from the seed;
// points avoid component intersections. The per-component overload fixes
// how many points land on each component.
NodeSet sample_on_curve(const ParamCurve& c, std::size_t count,
                        const SearchBudget& budget);
NodeSet sample_on_curve(const ParamCurve& c,
                        const std::vector<std::size_t>& per_component,
                        const SearchBudget& budget);

// Enlarges an n-independent X to an n-poised superset of size
// poly_space_dim(n) with integer grid points, each accepted only when the
// Vandermonde rank grows.
NodeSet extend_to_poised(const NodeSet& x, int n, const SearchBudget& budget);

// A point A' within `radius` of the anchor such that every given
// n-independent set stays n-independent after adding A'. The anchor
// itself is tried first; then a grid around it, refined by halving.
Point extend_multi(const std::vector<NodeSet>& sets, int n,
                   const Point& anchor, const SearchBudget& budget);

// Extends X (subset of sigma, n-independent) to a maximal n-independent
// set of size dnk(n, deg sigma) on sigma. Added nodes avoid component
// intersections.
NodeSet extend_on_curve_to_maximal(const NodeSet& x, const ParamCurve& sigma,
                                   int n, const SearchBudget& budget);

// Internal building block of the two ops above, exposed for the planted
// configurations: grows X with on-curve nodes until `target` many,
// keeping n-independence.
NodeSet grow_on_curve(const NodeSet& x, const ParamCurve& sigma, int n,
                      std::size_t target, const SearchBudget& budget);

// Replaces node idx with a point on `target` at which some fundamental
// polynomial of idx does not vanish; the result is n-independent.
// Throws ReplacementError when target divides every fundamental
// polynomial of idx.
NodeSet replace_node(const NodeSet& x, std::size_t idx,
                     const ParamCurve& target, int n,
                     const SearchBudget& budget);

// Divides 2m points lying on the given lines (each point on exactly one
// line) into m pairs with no pair sharing a line; nullopt iff some line
// carries more than m points. Greedy: most-loaded line first.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> pair_partition(
    const std::vector<Line>& lines, const std::vector<Point>& pts);

// `count` integer points in the coordinate box, greedily certified
// n-independent.
NodeSet random_independent_nodeset(std::size_t count, int n,
                                   const SearchBudget& budget);

// Planted configuration: `on_count` n-independent nodes on a seeded curve
// of the given degree (1 = line, 2 = unit circle, 3 = line * circle),
// plus `off_count` generic nodes off the curve; the whole set is
// certified n-independent.
struct PlantedConfig {
  NodeSet nodes;
  std::vector<CurveComponent> components;
  std::vector<std::size_t> off_curve;  // indices of the off-curve nodes

  ParamCurve param_curve() const { return ParamCurve(components); }
};

PlantedConfig plant_on_curve_config(int n, int curve_degree,
                                    std::size_t on_count,
                                    std::size_t off_count,
                                    const SearchBudget& budget);

}  // namespace curvedim

#endif  // CURVEDIM_CONSTRUCTIONS_HPP
