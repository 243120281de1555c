#include "zetaverify/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace zetaverify {

ExactVector operator+(const ExactVector& a, const ExactVector& b) {
  assert(a.size() == b.size());
  ExactVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExactVector operator-(const ExactVector& a, const ExactVector& b) {
  assert(a.size() == b.size());
  ExactVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

ExactVector scaled(const ExactVector& v, const GaussianRational& c) {
  ExactVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

bool is_zero(const ExactVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  assert(a.cols_ == b.rows_);
  ExactMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        m.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  ExactMatrix m(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j) + b.at(i, j);
  return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  ExactMatrix m(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j) - b.at(i, j);
  return m;
}

ExactVector ExactMatrix::apply(const ExactVector& v) const {
  assert(static_cast<int>(v.size()) == cols_);
  ExactVector r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

struct GaussInt {
  BigInt re, im;
  bool is_zero() const { return re == 0 && im == 0; }
};

GaussInt gmul(const GaussInt& a, const GaussInt& b) {
  return {BigInt(a.re * b.re - a.im * b.im), BigInt(a.re * b.im + a.im * b.re)};
}

GaussInt gsub(const GaussInt& a, const GaussInt& b) {
  return {BigInt(a.re - b.re), BigInt(a.im - b.im)};
}

// Exact division in Z[i]; Bareiss guarantees divisibility.
GaussInt gdiv(const GaussInt& a, const GaussInt& b) {
  BigInt n = b.re * b.re + b.im * b.im;
  BigInt re = a.re * b.re + a.im * b.im;
  BigInt im = a.im * b.re - a.re * b.im;
  assert(re % n == 0 && im % n == 0);
  return {BigInt(re / n), BigInt(im / n)};
}

// Scale each row to Z[i]; row scaling leaves kernel and rank unchanged.
std::vector<std::vector<GaussInt>> to_gauss_int(const ExactMatrix& a) {
  std::vector<std::vector<GaussInt>> m(a.rows(), std::vector<GaussInt>(a.cols()));
  for (int i = 0; i < a.rows(); ++i) {
    BigInt l(1);
    for (int j = 0; j < a.cols(); ++j) {
      const auto& x = a.at(i, j);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re.get_den().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im.get_den().get_mpz_t());
    }
    for (int j = 0; j < a.cols(); ++j) {
      const auto& x = a.at(i, j);
      Rational re = x.re * l, im = x.im * l;
      m[i][j] = {BigInt(re.get_num()), BigInt(im.get_num())};
    }
  }
  return m;
}

struct Echelon {
  std::vector<std::vector<GaussInt>> m;
  std::vector<int> pivot_cols;  // pivot column of row k
};

Echelon bareiss(const ExactMatrix& a) {
  Echelon e;
  e.m = to_gauss_int(a);
  const int rows = a.rows(), cols = a.cols();
  GaussInt prev{BigInt(1), BigInt(0)};
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (!e.m[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(e.m[row], e.m[piv]);
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        e.m[i][j] = gdiv(gsub(gmul(e.m[row][col], e.m[i][j]), gmul(e.m[i][col], e.m[row][j])), prev);
      e.m[i][col] = {BigInt(0), BigInt(0)};
    }
    prev = e.m[row][col];
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

GaussianRational to_rational(const GaussInt& g) {
  return {Rational(g.re), Rational(g.im)};
}

}  // namespace

std::vector<ExactVector> kernel(const ExactMatrix& a) {
  const int cols = a.cols();
  Echelon e = bareiss(a);
  const int r = static_cast<int>(e.pivot_cols.size());
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  std::vector<ExactVector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ExactVector v(cols);
    v[f] = GaussianRational(1);
    for (int k = r - 1; k >= 0; --k) {
      int pc = e.pivot_cols[k];
      GaussianRational s(0);
      for (int j = pc + 1; j < cols; ++j)
        if (!v[j].is_zero()) s += to_rational(e.m[k][j]) * v[j];
      v[pc] = -s / to_rational(e.m[k][pc]);
    }
    if (!zetaverify::is_zero(a.apply(v)))
      throw std::logic_error("kernel: verification A*v == 0 failed");
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const ExactMatrix& a) { return static_cast<int>(bareiss(a).pivot_cols.size()); }

std::optional<ExactVector> solve(const ExactMatrix& a, const ExactVector& b) {
  assert(static_cast<int>(b.size()) == a.rows());
  // Eliminate on [A | b] with plain rational pivoting; sizes here are small.
  ExactMatrix m(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    m.at(i, a.cols()) = b[i];
  }
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < a.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j <= a.cols(); ++j) std::swap(m.at(row, j), m.at(piv, j));
    GaussianRational inv = GaussianRational(1) / m.at(row, col);
    for (int j = col; j <= a.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      GaussianRational f = m.at(i, col);
      for (int j = col; j <= a.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (int i = row; i < a.rows(); ++i)
    if (!m.at(i, a.cols()).is_zero()) return std::nullopt;
  ExactVector x(a.cols());
  for (size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = m.at(static_cast<int>(k), a.cols());
  if (a.apply(x) != b) throw std::logic_error("solve: verification A*x == b failed");
  return x;
}

CoordinateSolver::CoordinateSolver(const ExactMatrix& basis_columns) : basis_(basis_columns) {
  const int n = basis_.cols();
  // Row-reduce a copy to find n independent rows.
  ExactMatrix m = basis_;
  std::vector<int> rows_order(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows_order[i] = i;
  int row = 0;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::invalid_argument("CoordinateSolver: columns not independent");
    for (int j = 0; j < n; ++j) std::swap(m.at(row, j), m.at(piv, j));
    std::swap(rows_order[row], rows_order[piv]);
    GaussianRational inv = GaussianRational(1) / m.at(row, col);
    for (int j = col; j < n; ++j) m.at(row, j) *= inv;
    for (int i = row + 1; i < m.rows(); ++i) {
      if (m.at(i, col).is_zero()) continue;
      GaussianRational f = m.at(i, col);
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    ++row;
  }
  pivot_rows_.assign(rows_order.begin(), rows_order.begin() + n);

  // Invert the square pivot-row submatrix by Gauss-Jordan.
  ExactMatrix sq(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sq.at(i, j) = basis_.at(pivot_rows_[i], j);
    sq.at(i, n + i) = GaussianRational(1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!sq.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::logic_error("CoordinateSolver: singular pivot submatrix");
    for (int j = 0; j < 2 * n; ++j) std::swap(sq.at(col, j), sq.at(piv, j));
    GaussianRational inv = GaussianRational(1) / sq.at(col, col);
    for (int j = 0; j < 2 * n; ++j) sq.at(col, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || sq.at(i, col).is_zero()) continue;
      GaussianRational f = sq.at(i, col);
      for (int j = 0; j < 2 * n; ++j) sq.at(i, j) -= f * sq.at(col, j);
    }
  }
  inv_ = ExactMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv_.at(i, j) = sq.at(i, n + j);
}

ExactVector CoordinateSolver::coordinates(const ExactVector& v) const {
  assert(static_cast<int>(v.size()) == basis_.rows());
  const int n = basis_.cols();
  ExactVector sub(n);
  for (int i = 0; i < n; ++i) sub[i] = v[pivot_rows_[i]];
  ExactVector x = inv_.apply(sub);
  if (basis_.apply(x) != v)
    throw std::invalid_argument("CoordinateSolver: vector outside column span");
  return x;
}

}  // namespace zetaverify
