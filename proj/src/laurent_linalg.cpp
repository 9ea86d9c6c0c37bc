#include "fib/laurent_linalg.hpp"

#include <optional>

namespace fib {

namespace {

void check_side_cap(const LaurentMatrix& m, const char* what) {
  if (m.rows() > kMaxMatrixSide || m.cols() > kMaxMatrixSide)
    throw LimitError(std::string(what) + ": matrix side exceeds cap " +
                     std::to_string(kMaxMatrixSide));
}

// Weight used for pivot selection: prefer structurally small polynomials.
long pivot_weight(const LaurentPoly& p) {
  return static_cast<long>(p.degree_span()) * 1000 + static_cast<long>(p.coeffs().size());
}

// Column-operation diagonalization over Q[t^{\pm 1}] with optional tracking
// of V and V^{-1} (A_in * V = U^{-1} * D, i.e. U * A_in * V = D). Row
// operations are applied but U is not needed by any caller.
struct DiagResult {
  LaurentMatrix d;
  std::vector<LaurentPoly> diag;  // min(rows, cols) entries
  LaurentMatrix v, vinv;
};

DiagResult diagonalize(const LaurentMatrix& input, bool track_v) {
  check_side_cap(input, "diagonalize");
  DiagResult res;
  res.d = input;
  LaurentMatrix& a = res.d;
  int r = a.rows(), c = a.cols();
  if (track_v) {
    res.v = LaurentMatrix::identity(c);
    res.vinv = LaurentMatrix::identity(c);
  }

  auto col_addmul = [&](int i, int j, const LaurentPoly& q) {
    // col_i += q * col_j; on Vinv this is row_j -= q * row_i.
    a.addmul_col(i, j, q);
    if (track_v) {
      res.v.addmul_col(i, j, q);
      res.vinv.addmul_row(j, i, -q);
    }
  };
  auto col_swap = [&](int i, int j) {
    a.swap_cols(i, j);
    if (track_v) {
      res.v.swap_cols(i, j);
      res.vinv.swap_rows(i, j);
    }
  };
  auto col_scale_unit = [&](int j, const LaurentPoly& u, const LaurentPoly& uinv) {
    a.scale_col(j, u);
    if (track_v) {
      res.v.scale_col(j, u);
      res.vinv.scale_row(j, uinv);
    }
  };

  int n = std::min(r, c);
  for (int k = 0; k < n; ++k) {
    for (;;) {
      std::optional<std::pair<int, int>> piv;
      long best = 0;
      for (int i = k; i < r; ++i)
        for (int j = k; j < c; ++j) {
          if (a(i, j).is_zero()) continue;
          long w = pivot_weight(a(i, j));
          if (!piv || w < best) {
            piv = {i, j};
            best = w;
          }
        }
      if (!piv) break;
      a.swap_rows(k, piv->first);
      col_swap(k, piv->second);

      // Unit-normalize the pivot: lowest term becomes 1.
      {
        const LaurentPoly& p = a(k, k);
        Rational c0 = p.coeff(p.min_exp());
        int e0 = p.min_exp();
        if (!(c0 == 1 && e0 == 0)) {
          LaurentPoly u = LaurentPoly::monomial(-e0, Rational(1) / c0);
          LaurentPoly uinv = LaurentPoly::monomial(e0, c0);
          col_scale_unit(k, u, uinv);
        }
      }

      bool clean = true;
      for (int i = k + 1; i < r; ++i) {
        if (a(i, k).is_zero()) continue;
        LaurentPoly q = divmod(a(i, k), a(k, k)).first;
        if (!q.is_zero()) a.addmul_row(i, k, -q);
        if (!a(i, k).is_zero()) clean = false;
      }
      for (int j = k + 1; j < c; ++j) {
        if (a(k, j).is_zero()) continue;
        LaurentPoly q = divmod(a(k, j), a(k, k)).first;
        if (!q.is_zero()) col_addmul(j, k, -q);
        if (!a(k, j).is_zero()) clean = false;
      }
      if (clean) break;
    }
  }

  res.diag.resize(n);
  for (int k = 0; k < n; ++k) res.diag[k] = a(k, k);
  return res;
}

}  // namespace

int rank_over_fraction_field(const LaurentMatrix& input) {
  LaurentMatrix a = input;
  int r = a.rows(), c = a.cols();
  LaurentPoly prev = LaurentPoly::one();
  int rank = 0, row = 0;
  for (int col = 0; col < c && row < r; ++col) {
    int piv = -1;
    long best = 0;
    for (int i = row; i < r; ++i) {
      if (a(i, col).is_zero()) continue;
      long w = pivot_weight(a(i, col));
      if (piv < 0 || w < best) {
        piv = i;
        best = w;
      }
    }
    if (piv < 0) continue;
    a.swap_rows(row, piv);
    if (a(row, col).is_zero()) throw InternalError("fraction-free pivot is zero");
    for (int i = row + 1; i < r; ++i) {
      for (int j = col + 1; j < c; ++j)
        a(i, j) = div_exact(a(i, j) * a(row, col) - a(i, col) * a(row, j), prev);
      a(i, col) = LaurentPoly();
    }
    prev = a(row, col);
    ++rank;
    ++row;
  }
  return rank;
}

LaurentPoly quotient_module_order(const LaurentMatrix& d1, const LaurentMatrix& d2) {
  check_side_cap(d1, "quotient_module_order(d1)");
  check_side_cap(d2, "quotient_module_order(d2)");
  if (d2.cols() != d1.rows())
    throw InternalError("chain shapes incompatible: cols(d2) != rows(d1)");
  if (!(d2 * d1).is_zero())
    throw ValidationError("CompositionNonzero: d2 followed by d1 is not the zero map");

  // Work with column-acting transposes: M = d1^T (C1 -> C0), B = d2^T.
  LaurentMatrix m = d1.transposed();
  LaurentMatrix b = d2.transposed();
  DiagResult dg = diagonalize(m, /*track_v=*/true);

  int c1 = m.cols();  // dim C1
  int ndiag = static_cast<int>(dg.diag.size());
  std::vector<int> kernel_cols;
  for (int j = 0; j < c1; ++j)
    if (j >= ndiag || dg.diag[j].is_zero()) kernel_cols.push_back(j);

  int nullity = static_cast<int>(kernel_cols.size());
  if (nullity == 0) return LaurentPoly::one();

  // Coordinates of im(d2) in the kernel basis (columns of V at kernel_cols).
  LaurentMatrix y = dg.vinv * b;
  for (int j = 0; j < ndiag; ++j) {
    if (dg.diag[j].is_zero()) continue;
    for (int col = 0; col < y.cols(); ++col)
      if (!y(j, col).is_zero())
        throw InternalError("image does not lie in the kernel despite zero composition");
  }
  LaurentMatrix x(nullity, y.cols());
  for (int i = 0; i < nullity; ++i)
    for (int col = 0; col < y.cols(); ++col) x(i, col) = y(kernel_cols[i], col);

  if (x.cols() < nullity) return LaurentPoly();  // free summand survives

  DiagResult dx = diagonalize(x, /*track_v=*/false);
  LaurentPoly order = LaurentPoly::one();
  for (int i = 0; i < nullity; ++i) {
    if (dx.diag[i].is_zero()) return LaurentPoly();
    order = order * dx.diag[i];
  }
  return normalize_poly(order);
}

}  // namespace fib
