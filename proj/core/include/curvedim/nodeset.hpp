#ifndef CURVEDIM_NODESET_HPP
#define CURVEDIM_NODESET_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvedim/poly2.hpp"

namespace curvedim {

// Ordered list of pairwise distinct rational points. Indices are stable
// identifiers.
class NodeSet {
 public:
  NodeSet() = default;
  // Throws std::invalid_argument on duplicate points.
  explicit NodeSet(std::vector<Point> nodes);

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const Point& operator[](std::size_t i) const { return nodes_[i]; }
  auto begin() const { return nodes_.begin(); }
  auto end() const { return nodes_.end(); }

  bool contains(const Point& p) const;
  std::optional<std::size_t> index_of(const Point& p) const;

  // Throws std::invalid_argument when p is already present.
  void push_back(const Point& p);

  // Subset in the order given by `indices`.
  NodeSet subset(std::span<const std::size_t> indices) const;
  // All nodes except the given (sorted or unsorted) indices.
  NodeSet without(std::span<const std::size_t> indices) const;
  // Copy with node `idx` replaced by p.
  NodeSet with_replaced(std::size_t idx, const Point& p) const;

 private:
  std::vector<Point> nodes_;
};

// Text format: '#' starts a comment, every non-empty line is "X Y".
// Rejects duplicate nodes and files with no nodes (ParseError).
NodeSet parse_nodes_text(std::string_view text);
std::string write_nodes_text(const NodeSet& x);

// |X| x poly_space_dim(n); row i = monomials evaluated at node i.
RatMatrix vandermonde(const NodeSet& x, int n);
RatVec vandermonde_row(const Point& p, int n);

// Full row rank of the Vandermonde matrix; every node has an
// n-fundamental polynomial.
bool is_independent(const NodeSet& x, int n);

// |X| = poly_space_dim(n) and the Vandermonde matrix is invertible.
bool is_poised(const NodeSet& x, int n);

// dim { p in Pi_n : p|_X = 0 } = poly_space_dim(n) - rank.
std::size_t dim_vanishing(const NodeSet& x, int n);

struct VanishingSpace {
  int degree = 0;
  std::vector<Poly2> basis;  // canonically normalized

  std::size_t dim() const { return basis.size(); }
};

VanishingSpace vanishing_basis(const NodeSet& x, int n);

// Some p in Pi_n with p(node idx) = 1 and p = 0 on the rest, if one
// exists; canonical echelon solution with free variables set to 0.
std::optional<Poly2> fundamental_polynomial(const NodeSet& x, std::size_t idx,
                                            int n);

// Greedy in index order: a node is kept iff it increases the Vandermonde
// rank.
std::vector<std::size_t> max_independent_subset_indices(const NodeSet& x,
                                                        int n);
NodeSet max_independent_subset(const NodeSet& x, int n);

}  // namespace curvedim

#endif  // CURVEDIM_NODESET_HPP
