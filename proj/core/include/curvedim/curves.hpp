#ifndef CURVEDIM_CURVES_HPP
#define CURVEDIM_CURVES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "curvedim/nodeset.hpp"

namespace curvedim {

// d(n, k) = N_n - N_{n-k} = k(2n+3-k)/2: the maximum number of
// n-independent nodes a squarefree degree-k curve can carry.
// Throws std::invalid_argument unless 0 <= k <= n.
std::size_t dnk(int n, int k);

// Linearly independent curves of degree <= k through all of X
// (alias of vanishing_basis at degree k).
VanishingSpace curves_through(const NodeSet& x, int k);

struct MaximalCurveWitness {
  Curve curve;
  std::vector<std::size_t> on_curve;
  std::vector<std::size_t> off_curve;
};

// Witness iff exactly d(n, deg q) nodes of X lie on q. X is assumed
// n-independent (caller obligation) and q squarefree (untested
// precondition). Throws std::invalid_argument when deg q is outside
// [1, n].
std::optional<MaximalCurveWitness> is_maximal_curve(const Curve& q,
                                                    const NodeSet& x, int n);

struct MaximalAllBut {
  Curve curve;
  std::vector<std::size_t> excluded;
};

// Searches all (|X| choose m) exclusions in lexicographic order; for each
// one checks whether some basis element of the vanishing space of the
// remaining nodes at `curve_degree` avoids every excluded node. Returns
// the witness for the lexicographically smallest working exclusion.
// Preconditions (throws std::invalid_argument): |X| - m = dnk(n,
// curve_degree); X n-independent is a caller obligation.
std::optional<MaximalAllBut> detect_maximal_all_but(const NodeSet& x, int n,
                                                    int curve_degree,
                                                    std::size_t m);

// True iff q divides p_star exactly.
bool uses_curve(const Poly2& p_star, const Curve& q);

}  // namespace curvedim

#endif  // CURVEDIM_CURVES_HPP
