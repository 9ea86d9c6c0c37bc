#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fib/words.hpp"

namespace fib {

// Finite integer combination of reduced free words: the value domain of Fox
// derivatives. Zero coefficients are never stored; terms iterate in shortlex
// order, which is also the canonical printing order.
class GroupRingElem {
 public:
  using TermMap = std::map<FreeWord, std::int64_t, ShortlexLess>;

  GroupRingElem() = default;  // zero

  static GroupRingElem one() { return word(FreeWord()); }
  static GroupRingElem word(const FreeWord& w, std::int64_t coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  GroupRingElem& add_term(const FreeWord& w, std::int64_t c);

  friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b);
  friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b);
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  GroupRingElem operator-() const;
  GroupRingElem scaled(std::int64_t c) const;

  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string(const std::vector<std::string>& gen_names) const;

 private:
  TermMap terms_;
};

inline GroupRingElem ring_add(const GroupRingElem& a, const GroupRingElem& b) { return a + b; }
inline GroupRingElem ring_mul(const GroupRingElem& a, const GroupRingElem& b) { return a * b; }
// Left multiplication by a single group element.
GroupRingElem ring_scale_word(const FreeWord& w, const GroupRingElem& a);

// Free differential: d(uv)/dg = du/dg + u dv/dg, dg/dg = 1,
// d(g^-1)/dg = -g^-1, dh/dg = 0 for h != g.
GroupRingElem fox_derivative(const FreeWord& w, int gen);

}  // namespace fib
