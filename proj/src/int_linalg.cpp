#include "fib/int_linalg.hpp"

#include <algorithm>
#include <optional>

namespace fib {

namespace {

// Smallest-|value| nonzero entry of the trailing submatrix, if any.
std::optional<std::pair<int, int>> find_pivot(const IntMatrix& a, int from) {
  std::optional<std::pair<int, int>> best;
  Integer best_abs = 0;
  for (int i = from; i < a.rows(); ++i)
    for (int j = from; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = int_abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  int r = a.rows(), c = a.cols();
  SmithResult res;
  res.u = IntMatrix::identity(r);
  res.v = IntMatrix::identity(c);

  int n = std::min(r, c);
  for (int k = 0; k < n; ++k) {
    for (;;) {
      auto piv = find_pivot(a, k);
      if (!piv) break;  // trailing submatrix is zero
      a.swap_rows(k, piv->first);
      res.u.swap_rows(k, piv->first);
      a.swap_cols(k, piv->second);
      res.v.swap_cols(k, piv->second);

      bool clean = true;
      for (int i = k + 1; i < r; ++i) {
        if (a(i, k) == 0) continue;
        Integer q = a(i, k) / a(k, k);  // truncated: |remainder| < |pivot|
        if (q != 0) {
          a.addmul_row(i, k, -q);
          res.u.addmul_row(i, k, -q);
        }
        if (a(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < c; ++j) {
        if (a(k, j) == 0) continue;
        Integer q = a(k, j) / a(k, k);
        if (q != 0) {
          a.addmul_col(j, k, -q);
          res.v.addmul_col(j, k, -q);
        }
        if (a(k, j) != 0) clean = false;
      }
      if (!clean) continue;  // smaller residues exist; reselect pivot

      // Pivot must divide every remaining entry for the chain to hold.
      bool divides_all = true;
      for (int i = k + 1; i < r && divides_all; ++i)
        for (int j = k + 1; j < c && divides_all; ++j)
          if (a(i, j) % a(k, k) != 0) {
            a.addmul_row(k, i, 1);
            res.u.addmul_row(k, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (a(k, k) == 0) break;  // all remaining entries are zero
  }

  for (int k = 0; k < n; ++k) {
    if (a(k, k) < 0) {
      a.scale_row(k, -1);
      res.u.scale_row(k, -1);
    }
  }
  res.d.resize(n);
  for (int k = 0; k < n; ++k) res.d[k] = a(k, k);
  return res;
}

Integer int_det(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw InternalError("determinant of non-square matrix");
  int n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

int int_rank(const IntMatrix& input) {
  IntMatrix a = input;
  int r = a.rows(), c = a.cols();
  Integer prev = 1;
  int rank = 0, row = 0;
  for (int col = 0; col < c && row < r; ++col) {
    int piv = -1;
    for (int i = row; i < r; ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.swap_rows(row, piv);
    for (int i = row + 1; i < r; ++i) {
      for (int j = col + 1; j < c; ++j)
        a(i, j) = (a(i, j) * a(row, col) - a(i, col) * a(row, j)) / prev;
      a(i, col) = 0;
    }
    prev = a(row, col);
    ++rank;
    ++row;
  }
  return rank;
}

AbelianInvariants abelian_invariants(const IntMatrix& relator_matrix) {
  SmithResult snf = smith_normal_form(relator_matrix);
  AbelianInvariants inv;
  int nonzero = 0;
  for (const Integer& d : snf.d) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.b1 = relator_matrix.cols() - nonzero;
  return inv;
}

}  // namespace fib
