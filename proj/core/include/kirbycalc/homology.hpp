#pragma once

#include <vector>

#include "kirbycalc/matrix.hpp"
#include "kirbycalc/presentation.hpp"

namespace kirby {

/// Smith normal form D = U * M * V with U, V unimodular and D diagonal,
/// each d_i dividing d_{i+1}, zeros last, all d_i >= 0. Deterministic:
/// the pivot is the nonzero entry of minimal absolute value, ties broken
/// by lowest (row, column).
struct SmithDecomposition {
  IntMat d;
  IntMat u;
  IntMat v;

  std::vector<Int> diagonal() const;
};

/// Invariant factors of a finitely generated abelian group: factors > 1
/// first (each dividing the next), then one 0 per free rank. Factors equal
/// to 1 are dropped, so the empty list is the trivial group.
struct HomologyClass {
  std::vector<Int> invariant_factors;

  bool trivial() const { return invariant_factors.empty(); }

  friend bool operator==(const HomologyClass& a, const HomologyClass& b) {
    return a.invariant_factors == b.invariant_factors;
  }
};

SmithDecomposition smith_normal_form(const IntMat& m);

/// Invariant factors of coker(M) = Z^rows / im(M).
HomologyClass cokernel_invariants(const IntMat& m);

enum class MeridianPolicy { Reject, TrivialFilling };

/// H_1 of the surgered manifold: cokernel invariants of the relation
/// matrix. The empty list certifies H_1 = 0 (necessary for S^3). With the
/// default policy a meridional slope is an error; TrivialFilling lets the
/// meridional component contribute the unit relation instead, which is the
/// honest H_1 of the manifold (meridional filling changes nothing).
HomologyClass first_homology(const SurgeryPresentation& p,
                             MeridianPolicy policy = MeridianPolicy::Reject);

/// Exact integer determinant (fraction-free Bareiss elimination).
Int determinant(const IntMat& m);

/// Signature of a symmetric integer matrix, computed exactly by rational
/// congruence diagonalization; zero-diagonal pivots are produced by adding
/// a crossing row and column (the 2x2 hyperbolic block rule).
int signature(const IntMat& m);

}  // namespace kirby
