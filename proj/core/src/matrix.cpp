#include "curvedim/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace curvedim {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("entry count does not match rows * cols");
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

using IntRow = std::vector<BigInt>;

// Clears denominators row by row (rank- and kernel-preserving).
std::vector<IntRow> rows_cleared(const RatMatrix& m) {
  std::vector<IntRow> rows(m.rows(), IntRow(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      scale = lcm(scale, denominator(m.at(r, c)));
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& v = m.at(r, c);
      rows[r][c] = numerator(v) * (scale / denominator(v));
    }
  }
  return rows;
}

struct Echelon {
  std::vector<IntRow> rows;
  std::vector<std::size_t> pivot_cols;
};

// Fraction-free (Bareiss) forward elimination; all divisions are exact.
// Pivot: first nonzero entry in column order.
Echelon bareiss(std::vector<IntRow> rows, std::size_t cols) {
  Echelon e;
  const std::size_t nrows = rows.size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t pivot_row = r;
    while (pivot_row < nrows && rows[pivot_row][c] == 0) ++pivot_row;
    if (pivot_row == nrows) continue;
    std::swap(rows[r], rows[pivot_row]);
    const BigInt& pivot = rows[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      if (rows[i][c] == 0) {
        for (std::size_t j = c + 1; j < cols; ++j) {
          if (rows[i][j] != 0) rows[i][j] = rows[i][j] * pivot / prev;
        }
        continue;
      }
      for (std::size_t j = c + 1; j < cols; ++j) {
        rows[i][j] = (rows[i][j] * pivot - rows[i][c] * rows[r][j]) / prev;
      }
      rows[i][c] = 0;
    }
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++r;
  }
  rows.resize(e.pivot_cols.size());
  e.rows = std::move(rows);
  return e;
}

struct Rref {
  std::vector<RatVec> rows;  // nonzero rows only, pivot entries = 1
  std::vector<std::size_t> pivot_cols;
};

// Final reduction of the fraction-free echelon form to the reduced
// echelon form over Q.
Rref reduce(const Echelon& e, std::size_t cols) {
  Rref out;
  out.pivot_cols = e.pivot_cols;
  out.rows.resize(e.rows.size(), RatVec(cols));
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    const BigInt& pivot = e.rows[r][e.pivot_cols[r]];
    for (std::size_t c = e.pivot_cols[r]; c < cols; ++c) {
      out.rows[r][c] = make_rational(e.rows[r][c], pivot);
    }
  }
  for (std::size_t r = out.rows.size(); r-- > 0;) {
    const std::size_t pc = out.pivot_cols[r];
    for (std::size_t i = 0; i < r; ++i) {
      const Rational factor = out.rows[i][pc];
      if (factor == 0) continue;
      for (std::size_t c = pc; c < cols; ++c) {
        out.rows[i][c] -= factor * out.rows[r][c];
      }
    }
  }
  return out;
}

Rref rref_of(const RatMatrix& m) {
  return reduce(bareiss(rows_cleared(m), m.cols()), m.cols());
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  return bareiss(rows_cleared(m), m.cols()).pivot_cols.size();
}

std::vector<RatVec> nullspace(const RatMatrix& m) {
  const std::size_t cols = m.cols();
  const Rref rref = rref_of(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : rref.pivot_cols) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < rref.pivot_cols.size(); ++r) {
      v[rref.pivot_cols[r]] = -rref.rows[r][f];
    }
    // first nonzero entry = 1
    for (const Rational& entry : v) {
      if (entry != 0) {
        if (entry != 1) {
          const Rational scale = entry;
          for (Rational& e : v) e /= scale;
        }
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("right-hand side length does not match rows");
  }
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  const Rref rref = rref_of(aug);
  RatVec x(m.cols());
  for (std::size_t r = 0; r < rref.pivot_cols.size(); ++r) {
    if (rref.pivot_cols[r] == m.cols()) return std::nullopt;  // inconsistent
    x[rref.pivot_cols[r]] = rref.rows[r][m.cols()];
  }
  return x;
}

namespace {

// Reduces `row` against an echelon basis (each basis row leads with 1 at
// its pivot); returns the index of the first nonzero entry, or cols when
// the row is dependent.
std::size_t reduce_against(RatVec& row, const std::vector<RatVec>& basis,
                           const std::vector<std::size_t>& pivots,
                           std::size_t cols) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Rational f = row[pivots[i]];
    if (f == 0) continue;
    for (std::size_t c = pivots[i]; c < cols; ++c) {
      row[c] -= f * basis[i][c];
    }
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (row[c] != 0) return c;
  }
  return cols;
}

}  // namespace

bool IncrementalRank::independent_of(const RatVec& row) const {
  if (row.size() != cols_) {
    throw std::invalid_argument("row width does not match tracker");
  }
  RatVec reduced = row;
  return reduce_against(reduced, basis_, pivots_, cols_) != cols_;
}

bool IncrementalRank::try_add(const RatVec& row) {
  if (row.size() != cols_) {
    throw std::invalid_argument("row width does not match tracker");
  }
  RatVec reduced = row;
  const std::size_t lead = reduce_against(reduced, basis_, pivots_, cols_);
  if (lead == cols_) return false;
  const Rational inv = reduced[lead];
  for (std::size_t c = lead; c < cols_; ++c) reduced[c] /= inv;
  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead) -
                   pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  basis_.insert(basis_.begin() + pos, std::move(reduced));
  return true;
}

}  // namespace curvedim
