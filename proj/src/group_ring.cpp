#include "fib/group_ring.hpp"

#include <cstdlib>
#include <sstream>

namespace fib {

GroupRingElem GroupRingElem::word(const FreeWord& w, std::int64_t coeff) {
  GroupRingElem e;
  e.add_term(w, coeff);
  return e;
}

GroupRingElem& GroupRingElem::add_term(const FreeWord& w, std::int64_t c) {
  if (c == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
  GroupRingElem out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, c);
  return out;
}

GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) {
  GroupRingElem out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
  return out;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  GroupRingElem out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

GroupRingElem GroupRingElem::operator-() const { return scaled(-1); }

GroupRingElem GroupRingElem::scaled(std::int64_t c) const {
  GroupRingElem out;
  if (c == 0) return out;
  for (const auto& [w, coeff] : terms_) out.terms_.emplace(w, coeff * c);
  return out;
}

std::string GroupRingElem::to_string(const std::vector<std::string>& gen_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::int64_t mag = std::abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::ostringstream wordpart;
    bool firstsyll = true;
    for (const Syllable& s : w.syllables()) {
      if (!firstsyll) wordpart << ".";
      firstsyll = false;
      wordpart << gen_names[s.gen];
      if (s.exp != 1) wordpart << "^" << s.exp;
    }
    if (w.empty()) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << wordpart.str();
    }
  }
  return out.str();
}

GroupRingElem ring_scale_word(const FreeWord& w, const GroupRingElem& a) {
  GroupRingElem out;
  for (const auto& [wa, ca] : a.terms()) out.add_term(w * wa, ca);
  return out;
}

GroupRingElem fox_derivative(const FreeWord& w, int gen) {
  GroupRingElem out;
  FreeWord prefix;
  for (const Syllable& s : w.syllables()) {
    if (s.gen == gen) {
      if (s.exp > 0) {
        // d(g^e)/dg = 1 + g + ... + g^{e-1}
        for (std::int64_t j = 0; j < s.exp; ++j)
          out.add_term(prefix * FreeWord::generator(gen, j), 1);
      } else {
        // d(g^-e)/dg = -(g^-1 + ... + g^{-e})
        for (std::int64_t j = 1; j <= -s.exp; ++j)
          out.add_term(prefix * FreeWord::generator(gen, -j), -1);
      }
    }
    prefix = prefix * FreeWord::generator(s.gen, s.exp);
  }
  return out;
}

}  // namespace fib
