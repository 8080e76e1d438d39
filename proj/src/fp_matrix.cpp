#include "ffmin/fp_matrix.hpp"

#include <stdexcept>

namespace ffmin {

FpMatrix::FpMatrix(std::uint64_t p, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : p_(p), rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  a_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (auto v : row) a_.push_back(reduce_signed(v, p));
  }
}

std::size_t FpMatrix::add_row() {
  a_.resize(a_.size() + cols_, 0);
  return rows_++;
}

std::vector<std::size_t> rref(FpMatrix& m) {
  const std::uint64_t p = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.raw(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.raw(sel, c), m.raw(row, c));
    }
    const Residue inv = inv_mod(m.raw(row, col), p);
    for (std::size_t c = col; c < m.cols(); ++c) m.raw(row, c) = mul_mod(m.raw(row, c), inv, p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.raw(r, col) == 0) continue;
      const Residue factor = m.raw(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m.raw(r, c) = sub_mod(m.raw(r, c), mul_mod(factor, m.raw(row, c), p), p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(FpMatrix m) { return rref(m).size(); }

std::vector<FpVector> kernel(const FpMatrix& m) {
  const std::uint64_t p = m.modulus();
  FpMatrix work = m;
  const auto pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  FpMatrix basis(p, 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    const std::size_t r = basis.add_row();
    basis.raw(r, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.raw(r, pivots[i]) = neg_mod(work.raw(i, free), p);
  }
  rref(basis);

  std::vector<FpVector> out;
  out.reserve(basis.rows());
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    FpVector v(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) v[c] = basis.raw(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace ffmin
