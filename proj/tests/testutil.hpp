#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "kirbycalc/matrix.hpp"
#include "kirbycalc/presentation.hpp"

// Shared generators and independent oracles. The oracles deliberately avoid
// the library's computation paths: determinants by cofactor expansion,
// invariant factors by gcds of minors.

namespace testutil {

using kirby::Int;
using kirby::IntMat;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline bool chance(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline IntMat random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                            long bound) {
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = uniform(rng, -bound, bound);
  return m;
}

inline IntMat random_symmetric(Rng& rng, std::size_t n, long bound) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m.at(i, j) = uniform(rng, -bound, bound);
      m.at(j, i) = m.at(i, j);
    }
  return m;
}

// Product of a few elementary row operations: unimodular by construction.
inline IntMat random_unimodular(Rng& rng, std::size_t n) {
  IntMat e = IntMat::identity(n);
  const int ops = static_cast<int>(uniform(rng, 3, 8));
  for (int o = 0; o < ops && n >= 2; ++o) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, long(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, long(n) - 1));
    if (i == j) {
      for (std::size_t c = 0; c < n; ++c) e.at(i, c) = -e.at(i, c);
      continue;
    }
    const Int f = uniform(rng, -2, 2);
    for (std::size_t c = 0; c < n; ++c) e.at(i, c) += f * e.at(j, c);
  }
  return e;
}

inline Int det_cofactor(const IntMat& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int det = 0;
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) != 0)
      det += sign * m.at(0, j) * det_cofactor(m.without_row_col(0, j));
    sign = -sign;
  }
  return det;
}

// Advances a k-combination of {0..n-1} in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// gcd of all k x k minors (0 when all vanish).
inline Int gcd_minors(const IntMat& m, std::size_t k) {
  std::vector<std::size_t> ri(k), ci(k);
  Int g = 0;
  for (std::size_t i = 0; i < k; ++i) ri[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) ci[i] = i;
    do {
      IntMat sub(k, k);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub.at(a, b) = m.at(ri[a], ci[b]);
      g = kirby::gcd(g, det_cofactor(sub));
    } while (next_combination(ci, m.cols()));
  } while (next_combination(ri, m.rows()));
  return g;
}

struct GenOptions {
  std::size_t max_components = 6;
  long bound = 5;
  bool integral_only = false;
  bool allow_meridian = false;
  // When >= 0, force component at this position to be a +-1-framed unknot.
  int plant_unit_unknot_at = -1;
};

inline kirby::KnotTag random_tag(Rng& rng) {
  switch (uniform(rng, 0, 4)) {
    case 0: return kirby::KnotTag::figure_eight();
    case 1: return kirby::KnotTag::two_bridge(5, 2);
    case 2: return kirby::KnotTag::two_bridge(7, 3);
    case 3: return kirby::KnotTag::unknown();
    default: return kirby::KnotTag::unknot();
  }
}

inline kirby::Slope random_slope(Rng& rng, const GenOptions& opt) {
  if (opt.allow_meridian && chance(rng, 0.1)) return kirby::Slope::meridian();
  if (!opt.integral_only && chance(rng, 0.35)) {
    long num = uniform(rng, -opt.bound, opt.bound);
    long den = uniform(rng, 2, 3);
    return kirby::Slope(num, den);
  }
  return kirby::Slope::integral(uniform(rng, -opt.bound, opt.bound));
}

inline kirby::SurgeryPresentation random_presentation(Rng& rng,
                                                      GenOptions opt = {}) {
  const std::size_t n =
      static_cast<std::size_t>(uniform(rng, opt.plant_unit_unknot_at >= 0 ? 1 : 0,
                                       long(opt.max_components)));
  std::vector<std::pair<kirby::KnotTag, kirby::Slope>> comps;
  comps.reserve(n);
  const std::size_t plant =
      opt.plant_unit_unknot_at >= 0
          ? static_cast<std::size_t>(uniform(rng, 0, long(n) - 1))
          : n;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == plant)
      comps.emplace_back(kirby::KnotTag::unknot(),
                         kirby::Slope::integral(chance(rng, 0.5) ? 1 : -1));
    else
      comps.emplace_back(chance(rng, 0.5) ? kirby::KnotTag::unknot()
                                          : random_tag(rng),
                         random_slope(rng, opt));
  }
  IntMat linking(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      linking.at(i, j) = uniform(rng, -opt.bound, opt.bound);
      linking.at(j, i) = linking.at(i, j);
    }
  auto p = kirby::new_presentation(std::move(comps), std::move(linking));
  return p;
}

}  // namespace testutil
