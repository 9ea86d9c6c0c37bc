#pragma once

#include <vector>

#include "fib/matrix.hpp"

namespace fib {

// Rank over the field of rational functions Q(t), by fraction-free
// (Bareiss) elimination. Never divides by a zero pivot.
int rank_over_fraction_field(const LaurentMatrix& a);

// Order of the torsion module ker(d1) / im(d2) over Q[t^{\pm 1}].
//
// Convention (fixed once, used by every caller): chain modules are row
// vectors, C2 --d2--> C1 --d0=d1--> C0 with d2 of shape (dim C2) x (dim C1)
// and d1 of shape (dim C1) x (dim C0); the composition requirement is
// d2 * d1 = 0. Returns the canonical order polynomial, the zero polynomial
// when the quotient has a free summand, and 1 for the trivial module.
LaurentPoly quotient_module_order(const LaurentMatrix& d1, const LaurentMatrix& d2);

}  // namespace fib
