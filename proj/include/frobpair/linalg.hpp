#ifndef FROBPAIR_LINALG_HPP
#define FROBPAIR_LINALG_HPP

#include <stdexcept>
#include <vector>

#include "field.hpp"

namespace frobpair {

/// Dense row-major matrix over F_p.
class FpMatrix {
public:
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  FpMatrix(PrimeField field, const std::vector<std::vector<Coeff>>& rows)
      : FpMatrix(field, rows.size(), rows.empty() ? 0 : rows[0].size()) {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (rows[r].size() != cols_) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t c = 0; c < cols_; ++c) at(r, c) = field_.from_uint(rows[r][c]);
    }
  }

  static FpMatrix identity(PrimeField field, std::size_t n) {
    FpMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Coeff& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  Coeff at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

  std::vector<std::vector<Coeff>> to_rows() const {
    std::vector<std::vector<Coeff>> out(rows_, std::vector<Coeff>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c);
    return out;
  }

  bool is_zero() const {
    for (auto v : data_)
      if (v != 0) return false;
    return true;
  }

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    const auto& F = a.field_;
    FpMatrix r(F, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        Coeff aik = a.at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) = F.add(r.at(i, j), F.mul(aik, b.at(k, j)));
      }
    return r;
  }

  std::vector<Coeff> apply(const std::vector<Coeff>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Coeff> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] = field_.add(out[i], field_.mul(at(i, j), field_.from_uint(v[j])));
    return out;
  }

  FpMatrix power(std::uint64_t n) const {
    if (rows_ != cols_) throw std::invalid_argument("power of a non-square matrix");
    FpMatrix result = identity(field_, rows_);
    FpMatrix base = *this;
    while (n) {
      if (n & 1) result = result * base;
      n >>= 1;
      if (n) base = base * base;
    }
    return result;
  }

  /// Reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> row_reduce() {
    const auto& F = field_;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && at(sel, col) == 0) ++sel;
      if (sel == rows_) continue;
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(row, c), at(sel, c));
      Coeff inv = F.inv(at(row, col));
      for (std::size_t c = 0; c < cols_; ++c) at(row, c) = F.mul(at(row, c), inv);
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || at(r, col) == 0) continue;
        Coeff factor = at(r, col);
        for (std::size_t c = 0; c < cols_; ++c) at(r, c) = F.sub(at(r, c), F.mul(factor, at(row, c)));
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    FpMatrix copy = *this;
    return copy.row_reduce().size();
  }

  /// Basis of {v : M v = 0}, one vector per free column.
  std::vector<std::vector<Coeff>> kernel() const {
    FpMatrix red = *this;
    auto pivots = red.row_reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Coeff>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Coeff> v(cols_, 0);
      v[free] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field_.neg(red.at(r, free));
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Coeff determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    const auto& F = field_;
    FpMatrix m = *this;
    Coeff det = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t sel = col;
      while (sel < rows_ && m.at(sel, col) == 0) ++sel;
      if (sel == rows_) return 0;
      if (sel != col) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(col, c), m.at(sel, c));
        det = F.neg(det);
      }
      det = F.mul(det, m.at(col, col));
      Coeff inv = F.inv(m.at(col, col));
      for (std::size_t r = col + 1; r < rows_; ++r) {
        Coeff factor = F.mul(m.at(r, col), inv);
        if (factor == 0) continue;
        for (std::size_t c = col; c < cols_; ++c) m.at(r, c) = F.sub(m.at(r, c), F.mul(factor, m.at(col, c)));
      }
    }
    return det;
  }

  FpMatrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = rows_;
    FpMatrix aug(field_, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = at(r, c);
      aug.at(r, n + r) = 1;
    }
    auto pivots = aug.row_reduce();
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular over F_p");
    FpMatrix inv(field_, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
  }

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coeff> data_;
};

} // namespace frobpair

#endif // FROBPAIR_LINALG_HPP
