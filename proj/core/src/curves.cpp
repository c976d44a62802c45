#include "curvedim/curves.hpp"

#include <stdexcept>

namespace curvedim {

std::size_t dnk(int n, int k) {
  if (k < 0 || k > n || n > kMaxDegree) {
    throw std::invalid_argument("dnk requires 0 <= k <= n <= " +
                                std::to_string(kMaxDegree));
  }
  return static_cast<std::size_t>(k * (2 * n + 3 - k) / 2);
}

VanishingSpace curves_through(const NodeSet& x, int k) {
  return vanishing_basis(x, k);
}

std::optional<MaximalCurveWitness> is_maximal_curve(const Curve& q,
                                                    const NodeSet& x, int n) {
  const int k = q.degree();
  if (k < 1 || k > n) {
    throw std::invalid_argument("curve degree outside [1, n]");
  }
  MaximalCurveWitness w{q, {}, {}};
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (q.eval_at(x[i]) == 0) {
      w.on_curve.push_back(i);
    } else {
      w.off_curve.push_back(i);
    }
  }
  if (w.on_curve.size() != dnk(n, k)) return std::nullopt;
  return w;
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t m = idx.size();
  for (std::size_t i = m; i-- > 0;) {
    if (idx[i] < n - m + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<MaximalAllBut> detect_maximal_all_but(const NodeSet& x, int n,
                                                    int curve_degree,
                                                    std::size_t m) {
  if (m == 0 || m > x.size()) {
    throw std::invalid_argument("excluded count out of range");
  }
  if (x.size() - m != dnk(n, curve_degree)) {
    throw std::invalid_argument(
        "|X| - m must equal dnk(n, curve_degree) for the detector");
  }
  std::vector<std::size_t> excluded(m);
  for (std::size_t i = 0; i < m; ++i) excluded[i] = i;
  do {
    const NodeSet remaining = x.without(excluded);
    const VanishingSpace space = vanishing_basis(remaining, curve_degree);
    for (const Poly2& candidate : space.basis) {
      if (candidate.effective_degree() < 1) continue;
      bool avoids_excluded = true;
      for (std::size_t e : excluded) {
        if (eval(candidate, x[e]) == 0) {
          avoids_excluded = false;
          break;
        }
      }
      if (avoids_excluded) {
        return MaximalAllBut{Curve::normalized(candidate), excluded};
      }
    }
  } while (next_combination(excluded, x.size()));
  return std::nullopt;
}

bool uses_curve(const Poly2& p_star, const Curve& q) {
  return divide_exact(p_star, q.poly).has_value();
}

}  // namespace curvedim
