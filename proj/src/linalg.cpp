#include "skel/linalg.hpp"

#include "skel/errors.hpp"

#include <utility>

namespace skel {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Rat& RatMatrix::at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

const Rat& RatMatrix::at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

RatVec zero_vec(std::size_t dim) { return RatVec(dim); }

bool is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

namespace {

void require_same_dim(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw Error(Errc::DimensionMismatch, "vector dimensions differ");
}

}  // namespace

RatVec add(const RatVec& a, const RatVec& b) {
  require_same_dim(a, b);
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec subtract(const RatVec& a, const RatVec& b) {
  require_same_dim(a, b);
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scale(const Rat& s, const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  require_same_dim(a, b);
  Rat out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

RatVec multiply(const RatMatrix& m, const RatVec& v) {
  if (m.cols() != v.size())
    throw Error(Errc::DimensionMismatch, "matrix-vector shape mismatch");
  RatVec out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rat acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m.at(r, c) * v[c];
    out[r] = std::move(acc);
  }
  return out;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(Errc::DimensionMismatch, "matrix-matrix shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c)
        out.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return out;
}

std::size_t exact_rank(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row; scaling a row by a positive integer does
  // not change the rank.
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Int lcm = 1;
    for (std::size_t c = 0; c < cols; ++c)
      lcm = boost::multiprecision::lcm(lcm, denominator(m.at(r, c)));
    for (std::size_t c = 0; c < cols; ++c)
      a[r][c] = numerator(m.at(r, c)) * (lcm / denominator(m.at(r, c)));
  }

  // Bareiss fraction free elimination: all divisions below are exact.
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::vector<RatVec> nullspace_basis(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<RatVec> a(rows, RatVec(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c);

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Rat inv = a[rank][col];
    for (std::size_t c = col; c < cols; ++c) a[rank][c] /= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rat factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace skel
