#ifndef CURVEDIM_MATRIX_HPP
#define CURVEDIM_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "curvedim/rational.hpp"

namespace curvedim {

using RatVec = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Exact rank over Q. Fraction-free (Bareiss) elimination on the
// denominator-cleared rows; pivot = first nonzero in column order.
std::size_t rank(const RatMatrix& m);

// Basis of {v : Mv = 0}; size = cols - rank. Each vector is scaled so its
// first nonzero entry is 1. Deterministic: one vector per free column of
// the reduced echelon form, in ascending column order.
std::vector<RatVec> nullspace(const RatMatrix& m);

// One exact solution of Mx = b with free variables set to 0, or nullopt
// when the system is inconsistent. Throws std::invalid_argument when
// b.size() != rows.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b);

// Rank tracker for greedy constructions: rows are offered one at a time
// and kept only when they enlarge the row space.
class IncrementalRank {
 public:
  explicit IncrementalRank(std::size_t cols) : cols_(cols) {}

  // True iff the row is independent of the rows accepted so far
  // (in which case it is added to the internal basis).
  bool try_add(const RatVec& row);

  // Same test without inserting.
  bool independent_of(const RatVec& row) const;

  std::size_t rank() const { return basis_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_;
  std::vector<RatVec> basis_;          // leading entry 1, sorted by pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace curvedim

#endif  // CURVEDIM_MATRIX_HPP
