#pragma once

#include <vector>

#include "fib/matrix.hpp"

namespace fib {

struct SmithResult {
  std::vector<Integer> d;  // min(rows, cols) entries, d1 | d2 | ..., all >= 0
  IntMatrix u;             // rows x rows, |det| = 1
  IntMatrix v;             // cols x cols, |det| = 1
};

// U * a * V = diag(d) with the divisibility chain and trailing zeros.
SmithResult smith_normal_form(const IntMatrix& a);

Integer int_det(const IntMatrix& a);        // Bareiss, square input
int int_rank(const IntMatrix& a);           // rank over Q

// Abelianization data of a relator exponent matrix (rows = relators,
// cols = generators): b1 = cols - rank, torsion = invariant factors > 1.
struct AbelianInvariants {
  int b1 = 0;
  std::vector<Integer> torsion;
};
AbelianInvariants abelian_invariants(const IntMatrix& relator_matrix);

}  // namespace fib
