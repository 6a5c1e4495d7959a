#include "kirbycalc/homology.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "kirbycalc/error.hpp"

namespace kirby {

namespace {

void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    mpz_swap(m.at(a, j).get_mpz_t(), m.at(b, j).get_mpz_t());
}

void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    mpz_swap(m.at(i, a).get_mpz_t(), m.at(i, b).get_mpz_t());
}

void negate_row(IntMat& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int& x = m.at(r, j);
    mpz_neg(x.get_mpz_t(), x.get_mpz_t());
  }
}

// row dst -= f * row src
void row_submul(IntMat& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    mpz_submul(m.at(dst, j).get_mpz_t(), f.get_mpz_t(),
               m.at(src, j).get_mpz_t());
}

// col dst -= f * col src
void col_submul(IntMat& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    mpz_submul(m.at(i, dst).get_mpz_t(), f.get_mpz_t(),
               m.at(i, src).get_mpz_t());
}

void row_add(IntMat& m, std::size_t dst, std::size_t src) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    m.at(dst, j) += m.at(src, j);
}

}  // namespace

std::vector<Int> SmithDecomposition::diagonal() const {
  std::vector<Int> out;
  const std::size_t k = std::min(d.rows(), d.cols());
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(d.at(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMat& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithDecomposition s{m, IntMat::identity(rows), IntMat::identity(cols)};
  IntMat& a = s.d;
  const std::size_t tmax = std::min(rows, cols);
  Int q;

  for (std::size_t t = 0; t < tmax; ++t) {
    for (;;) {
      // Pivot: nonzero entry of minimal |value| in the block, ties broken
      // by lowest (row, column).
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const Int& x = a.at(i, j);
          if (x == 0) continue;
          if (pi == rows ||
              mpz_cmpabs(x.get_mpz_t(), a.at(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) return s;  // block is zero; zeros stay last

      swap_rows(a, t, pi);
      swap_rows(s.u, t, pi);
      swap_cols(a, t, pj);
      swap_cols(s.v, t, pj);
      if (a.at(t, t) < 0) {
        negate_row(a, t);
        negate_row(s.u, t);
      }

      const Int& piv = a.at(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a.at(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), piv.get_mpz_t());
        row_submul(a, i, t, q);
        row_submul(s.u, i, t, q);
        if (a.at(i, t) != 0) clean = false;  // remainder beats the pivot
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a.at(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), piv.get_mpz_t());
        col_submul(a, j, t, q);
        col_submul(s.v, j, t, q);
        if (a.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the rest of the block; pull a bad row up and
      // reduce again if not.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a.at(i, j).get_mpz_t(), piv.get_mpz_t())) {
            row_add(a, t, i);
            row_add(s.u, t, i);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  return s;
}

HomologyClass cokernel_invariants(const IntMat& m) {
  const SmithDecomposition s = smith_normal_form(m);
  HomologyClass h;
  std::size_t rank = 0;
  for (const Int& d : s.diagonal()) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) h.invariant_factors.push_back(d);
  }
  const std::size_t free_rank = m.rows() - rank;
  for (std::size_t i = 0; i < free_rank; ++i)
    h.invariant_factors.emplace_back(0);
  return h;
}

HomologyClass first_homology(const SurgeryPresentation& p,
                             MeridianPolicy policy) {
  if (policy == MeridianPolicy::Reject)
    return cokernel_invariants(generalized_relation_matrix(p));
  return cokernel_invariants(relation_matrix_filled(p));
}

Int determinant(const IntMat& m) {
  if (!m.is_square()) fail(Errc::NonSquare);
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  Int tmp;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && a.at(i, k) == 0) ++i;
      if (i == n) return 0;
      swap_rows(a, k, i);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        tmp = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), tmp.get_mpz_t(),
                     prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign < 0 ? Int(-a.at(n - 1, n - 1)) : a.at(n - 1, n - 1);
}

int signature(const IntMat& m) {
  if (!m.is_symmetric()) fail(Errc::NonSymmetric);
  const std::size_t n = m.rows();
  std::vector<Rat> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = Rat(m.at(i, j));
  auto A = [&](std::size_t i, std::size_t j) -> Rat& { return a[i * n + j]; };

  int sig = 0;
  for (std::size_t t = 0; t < n; ++t) {
    if (A(t, t) == 0) {
      std::size_t d = t + 1;
      while (d < n && A(d, d) == 0) ++d;
      if (d < n) {
        for (std::size_t c = 0; c < n; ++c) std::swap(A(t, c), A(d, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(A(r, t), A(r, d));
      } else {
        std::size_t j = t + 1;
        while (j < n && A(t, j) == 0) ++j;
        if (j == n) continue;  // zero row: contributes nothing
        // Hyperbolic block: adding the crossing row and column makes the
        // diagonal entry 2*A(t,j) != 0.
        for (std::size_t c = 0; c < n; ++c) A(t, c) += A(j, c);
        for (std::size_t r = 0; r < n; ++r) A(r, t) += A(r, j);
      }
    }
    const Rat piv = A(t, t);
    std::vector<Rat> factor(n);
    for (std::size_t i = t + 1; i < n; ++i) factor[i] = A(i, t) / piv;
    for (std::size_t i = t + 1; i < n; ++i) {
      if (factor[i] == 0) continue;
      for (std::size_t c = t; c < n; ++c) A(i, c) -= factor[i] * A(t, c);
    }
    for (std::size_t i = t + 1; i < n; ++i) A(t, i) = 0;
    sig += sgn(piv);
  }
  return sig;
}

}  // namespace kirby
