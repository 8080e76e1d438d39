#pragma once

#include <cstddef>
#include <vector>

#include "ffmin/fp.hpp"

namespace ffmin {

/// Dense row-major matrix over GF(p).
class FpMatrix {
 public:
  FpMatrix(std::uint64_t p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  FpMatrix(std::uint64_t p, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::uint64_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fp at(std::size_t r, std::size_t c) const { return Fp(a_[r * cols_ + c], p_); }
  Residue& raw(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Residue raw(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Fp v) { a_[r * cols_ + c] = v.value(); }

  /// Appends a zero row and returns its index.
  std::size_t add_row();

 private:
  std::uint64_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> a_;
};

using FpVector = std::vector<Residue>;

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(FpMatrix& m);

std::size_t rank(FpMatrix m);

/// Basis of the right kernel, itself in reduced echelon form (leading entry 1).
/// Empty for full column rank.
std::vector<FpVector> kernel(const FpMatrix& m);

}  // namespace ffmin
