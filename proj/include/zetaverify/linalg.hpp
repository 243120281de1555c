#pragma once

#include <optional>
#include <vector>

#include "zetaverify/rational.hpp"

namespace zetaverify {

using ExactVector = std::vector<GaussianRational>;

ExactVector operator+(const ExactVector& a, const ExactVector& b);
ExactVector operator-(const ExactVector& a, const ExactVector& b);
ExactVector scaled(const ExactVector& v, const GaussianRational& c);
bool is_zero(const ExactVector& v);

/// Dense matrix over Q(i).
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static ExactMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  GaussianRational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const GaussianRational& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  ExactMatrix transpose() const;
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  ExactVector apply(const ExactVector& v) const;

  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<GaussianRational> a_;
};

/// Exact kernel basis via fraction-free (Bareiss) elimination over Z[i] after
/// clearing row denominators. Every returned v satisfies A v = 0 exactly
/// (verified before returning); the basis has dimension cols - rank.
std::vector<ExactVector> kernel(const ExactMatrix& a);

int rank(const ExactMatrix& a);

/// Exact solve A x = b; std::nullopt when inconsistent. When the solution
/// space is positive-dimensional the particular solution with free variables
/// set to zero is returned. The result is verified by re-multiplication.
std::optional<ExactVector> solve(const ExactMatrix& a, const ExactVector& b);

/// Repeated exact coordinate extraction against a fixed column basis:
/// solve B x = v where the columns of B are linearly independent.
class CoordinateSolver {
 public:
  explicit CoordinateSolver(const ExactMatrix& basis_columns);
  /// Throws if v is not in the column span.
  ExactVector coordinates(const ExactVector& v) const;

 private:
  ExactMatrix basis_;
  std::vector<int> pivot_rows_;
  ExactMatrix inv_;  // inverse of the pivot-row square submatrix
};

}  // namespace zetaverify
