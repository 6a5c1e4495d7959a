#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "kirbycalc/error.hpp"
#include "kirbycalc/integers.hpp"

namespace kirby {

// Dense row-major matrix of arbitrary-precision integers. Small and exact;
// linking matrices and relation matrices never grow past a few dozen rows.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  // Literal construction, mostly for tests and fixed examples.
  IntMat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    a_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) fail(Errc::DimensionMismatch, "ragged literal");
      for (long v : row) a_.emplace_back(v);
    }
  }

  static IntMat identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_square() const { return rows_ == cols_; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  bool has_zero_diagonal() const {
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
      if (at(i, i) != 0) return false;
    return true;
  }

  IntMat transposed() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  // Copy without row i and column j (used when a component is removed).
  IntMat without_row_col(std::size_t i, std::size_t j) const {
    IntMat m(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
        if (c == j) continue;
        m.at(rr, cc) = at(r, c);
        ++cc;
      }
      ++rr;
    }
    return m;
  }

  friend IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.cols_ != b.rows_) fail(Errc::DimensionMismatch, "matrix product");
    IntMat p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Int& aik = a.at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          mpz_addmul(p.at(i, j).get_mpz_t(), aik.get_mpz_t(),
                     b.at(k, j).get_mpz_t());
      }
    return p;
  }

  friend bool operator==(const IntMat& a, const IntMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (a.a_[i] != b.a_[i]) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

}  // namespace kirby
