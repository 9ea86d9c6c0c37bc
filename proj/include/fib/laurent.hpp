#pragma once

#include <map>
#include <string>
#include <utility>

#include "fib/rational.hpp"

namespace fib {

// Intermediate polynomial growth past this spread aborts loudly rather than
// approximating.
inline constexpr int kMaxDegreeSpread = 512;

// Exact Laurent polynomial over the rationals: finite map exponent ->
// nonzero coefficient. Units are c*t^k; the zero polynomial is the empty map.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero

  static LaurentPoly constant(const Rational& c);
  static LaurentPoly one() { return constant(1); }
  static LaurentPoly monomial(int exp, const Rational& c);
  static LaurentPoly t() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_unit() const;  // exactly one term with any nonzero coefficient

  // Exponent range; both require a nonzero polynomial.
  int min_exp() const;
  int max_exp() const;
  int degree_span() const;  // max_exp - min_exp; -1 for the zero polynomial

  Rational coeff(int exp) const;
  const std::map<int, Rational>& coeffs() const { return coeffs_; }

  LaurentPoly& set_coeff(int exp, const Rational& c);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly shifted(int dexp) const;           // * t^dexp
  LaurentPoly scaled(const Rational& c) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;  // descending exponents, e.g. "t^2 - t + 1"

 private:
  std::map<int, Rational> coeffs_;
};

// Euclidean division a = q*b + r with degree_span(r) < degree_span(b).
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
// Exact division; throws InternalError if the remainder is nonzero.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

// Canonical unit-class representative: lowest exponent 0, coprime integer
// coefficients, positive leading coefficient; zero maps to zero. Idempotent.
LaurentPoly normalize_poly(const LaurentPoly& p);

// True iff p is nonzero and the canonical form has leading and trailing
// coefficients +-1.
bool is_monic(const LaurentPoly& p);

// Gcd computed over Z[t] via content/primitive parts after clearing
// denominators; result is canonical (normalize_poly'd).
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// t^n - 1 as a convenience for root-of-unity counting oracles.
LaurentPoly cyclotomic_like(int n);

}  // namespace fib
