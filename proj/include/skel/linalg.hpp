#pragma once

#include "skel/rational.hpp"

#include <cstddef>
#include <vector>

namespace skel {

using RatVec = std::vector<Rat>;

// Dense row major rational matrix. Zero row and zero column shapes are legal;
// they appear naturally as maps into or out of zero dimensional class spaces.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c);
  const Rat& at(std::size_t r, std::size_t c) const;

  bool operator==(const RatMatrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

RatVec zero_vec(std::size_t dim);
bool is_zero(const RatVec& v);
RatVec add(const RatVec& a, const RatVec& b);
RatVec subtract(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& s, const RatVec& v);
Rat dot(const RatVec& a, const RatVec& b);

RatVec multiply(const RatMatrix& m, const RatVec& v);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);

// Exact rank via fraction free (Bareiss) elimination on the integer matrix
// obtained by clearing denominators row by row. There is no pivot tolerance:
// a pivot is usable exactly when it is nonzero.
std::size_t exact_rank(const RatMatrix& m);

// Basis of { x : m x = 0 } computed from the reduced row echelon form. One
// basis vector per free column, in increasing column order.
std::vector<RatVec> nullspace_basis(const RatMatrix& m);

}  // namespace skel
