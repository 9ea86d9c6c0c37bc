#include "fib/laurent.hpp"

#include <sstream>
#include <vector>

#include "fib/errors.hpp"

namespace fib {

LaurentPoly LaurentPoly::constant(const Rational& c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(int exp, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.coeffs_[exp] = c;
  return p;
}

bool LaurentPoly::is_unit() const { return coeffs_.size() == 1; }

int LaurentPoly::min_exp() const {
  if (is_zero()) throw InternalError("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) throw InternalError("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

int LaurentPoly::degree_span() const { return is_zero() ? -1 : max_exp() - min_exp(); }

Rational LaurentPoly::coeff(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

LaurentPoly& LaurentPoly::set_coeff(int exp, const Rational& c) {
  if (c == 0)
    coeffs_.erase(exp);
  else
    coeffs_[exp] = c;
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.coeffs_) {
    Rational v = out.coeff(e) + c;
    out.set_coeff(e, v);
  }
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.coeffs_) {
    Rational v = out.coeff(e) - c;
    out.set_coeff(e, v);
  }
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) {
      int e = ea + eb;
      Rational v = out.coeff(e) + ca * cb;
      out.set_coeff(e, v);
    }
  if (!out.is_zero() && out.degree_span() > kMaxDegreeSpread)
    throw LimitError("polynomial degree spread exceeds cap " +
                     std::to_string(kMaxDegreeSpread));
  return out;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::shifted(int dexp) const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e + dexp] = c;
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [e, v] : coeffs_) out.coeffs_[e] = v * c;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    std::string coeffpart;
    if (e == 0 || mag != 1) {
      coeffpart = mag.str();
      if (denominator(mag) != 1) coeffpart = "(" + coeffpart + ")";
    }
    out << coeffpart;
    if (e != 0) {
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw InternalError("division by the zero polynomial");
  if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
  // Shift both to ordinary polynomials and divide over Q.
  int sa = a.min_exp(), sb = b.min_exp();
  int da = a.max_exp() - sa, db = b.max_exp() - sb;
  std::vector<Rational> ra(da + 1), rb(db + 1);
  for (const auto& [e, c] : a.coeffs()) ra[e - sa] = c;
  for (const auto& [e, c] : b.coeffs()) rb[e - sb] = c;
  std::vector<Rational> q(da >= db ? da - db + 1 : 0);
  for (int i = da; i >= db; --i) {
    if (ra[i] == 0) continue;
    Rational f = ra[i] / rb[db];
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) ra[i - db + j] -= f * rb[j];
  }
  LaurentPoly quot, rem;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] != 0) quot.set_coeff(static_cast<int>(i) + sa - sb, q[i]);
  for (int i = 0; i < db && i <= da; ++i)
    if (ra[i] != 0) rem.set_coeff(i + sa, ra[i]);
  return {quot, rem};
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

LaurentPoly normalize_poly(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly q = p.shifted(-p.min_exp());
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : q.coeffs()) {
    den_lcm = int_lcm(den_lcm, denominator(c));
    num_gcd = int_gcd(num_gcd, numerator(c));
  }
  Rational scale(den_lcm, num_gcd);  // positive: num_gcd > 0 by construction
  q = q.scaled(scale);
  if (q.coeff(q.max_exp()) < 0) q = q.scaled(-1);
  return q;
}

bool is_monic(const LaurentPoly& p) {
  if (p.is_zero()) return false;
  LaurentPoly q = normalize_poly(p);
  Rational lead = q.coeff(q.max_exp());
  Rational trail = q.coeff(q.min_exp());
  return lead == 1 && (trail == 1 || trail == -1);
}

namespace {

// Primitive integer-coefficient representative (content divided out).
LaurentPoly primitive_part(const LaurentPoly& p) { return normalize_poly(p); }

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  LaurentPoly x = primitive_part(a), y = primitive_part(b);
  // Euclid over Q[t]; primitive parts keep coefficients integral (Gauss).
  while (!y.is_zero()) {
    LaurentPoly r = divmod(x, y).second;
    x = y;
    y = r.is_zero() ? r : primitive_part(r);
  }
  return primitive_part(x);
}

LaurentPoly cyclotomic_like(int n) {
  LaurentPoly p;
  p.set_coeff(n, 1);
  p.set_coeff(0, p.coeff(0) - 1);
  return p;
}

}  // namespace fib
