#include "fib/words.hpp"

#include <algorithm>
#include <cstdlib>

#include "fib/errors.hpp"

namespace fib {

namespace {

// Guard against runaway word growth (Tietze substitutions, braid actions).
constexpr std::int64_t kWordLetterGuard = 1 << 21;

void push_reduced(std::vector<Syllable>& out, int gen, std::int64_t exp) {
  if (exp == 0) return;
  if (!out.empty() && out.back().gen == gen) {
    out.back().exp += exp;
    if (out.back().exp == 0) out.pop_back();
  } else {
    out.push_back({gen, exp});
  }
}

}  // namespace

FreeWord FreeWord::generator(int gen, std::int64_t exp) {
  FreeWord w;
  if (exp != 0) w.syllables_.push_back({gen, exp});
  return w;
}

FreeWord FreeWord::from_syllables(const std::vector<Syllable>& raw) {
  FreeWord w;
  w.syllables_.reserve(raw.size());
  for (const Syllable& s : raw) push_reduced(w.syllables_, s.gen, s.exp);
  return w;
}

std::int64_t FreeWord::length() const {
  std::int64_t n = 0;
  for (const Syllable& s : syllables_) n += std::abs(s.exp);
  return n;
}

int FreeWord::max_generator() const {
  int m = -1;
  for (const Syllable& s : syllables_) m = std::max(m, s.gen);
  return m;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    w.syllables_.push_back({it->gen, -it->exp});
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  FreeWord w;
  w.syllables_ = syllables_;
  for (const Syllable& s : rhs.syllables_) push_reduced(w.syllables_, s.gen, s.exp);
  return w;
}

FreeWord FreeWord::pow(std::int64_t k) const {
  if (k == 0 || empty()) return FreeWord();
  FreeWord base = k > 0 ? *this : inverse();
  std::int64_t reps = k > 0 ? k : -k;
  if (reps * length() > kWordLetterGuard)
    throw LimitError("word power exceeds the letter guard");
  // Handles the non-cyclically-reduced case (w = u v u^-1 collapses inside).
  FreeWord acc;
  for (std::int64_t i = 0; i < reps; ++i) acc = acc * base;
  return acc;
}

bool FreeWord::is_cyclically_reduced() const {
  if (syllables_.size() < 2) return true;
  return syllables_.front().gen != syllables_.back().gen;
}

FreeWord FreeWord::cyclically_reduced() const {
  FreeWord w = *this;
  while (w.syllables_.size() >= 2 && w.syllables_.front().gen == w.syllables_.back().gen) {
    Syllable first = w.syllables_.front();
    Syllable last = w.syllables_.back();
    std::vector<Syllable> inner(w.syllables_.begin() + 1, w.syllables_.end() - 1);
    std::int64_t merged = first.exp + last.exp;
    std::vector<Syllable> rebuilt;
    if (merged != 0) rebuilt.push_back({first.gen, merged});
    rebuilt.insert(rebuilt.end(), inner.begin(), inner.end());
    FreeWord next = from_syllables(rebuilt);
    if (next == w) break;  // merged form is already cyclically stable
    w = next;
  }
  return w;
}

std::int64_t FreeWord::exponent_sum(int gen) const {
  std::int64_t n = 0;
  for (const Syllable& s : syllables_)
    if (s.gen == gen) n += s.exp;
  return n;
}

int FreeWord::syllable_count(int gen) const {
  int n = 0;
  for (const Syllable& s : syllables_)
    if (s.gen == gen) ++n;
  return n;
}

FreeWord FreeWord::substituted(int gen, const FreeWord& replacement) const {
  FreeWord acc;
  for (const Syllable& s : syllables_) {
    if (s.gen == gen)
      acc = acc * replacement.pow(s.exp);
    else
      acc = acc * generator(s.gen, s.exp);
  }
  return acc;
}

bool shortlex_less(const FreeWord& a, const FreeWord& b) {
  std::int64_t la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  // Equal expanded length: compare letter runs without expanding.
  const auto& sa = a.syllables();
  const auto& sb = b.syllables();
  std::size_t ia = 0, ib = 0;
  std::int64_t offa = 0, offb = 0;  // letters consumed within current syllable
  while (ia < sa.size() && ib < sb.size()) {
    auto rank = [](const Syllable& s) { return 2 * s.gen + (s.exp < 0 ? 1 : 0); };
    int ra = rank(sa[ia]), rb = rank(sb[ib]);
    if (ra != rb) return ra < rb;
    std::int64_t rema = std::abs(sa[ia].exp) - offa;
    std::int64_t remb = std::abs(sb[ib].exp) - offb;
    std::int64_t step = std::min(rema, remb);
    offa += step;
    offb += step;
    if (offa == std::abs(sa[ia].exp)) {
      ++ia;
      offa = 0;
    }
    if (offb == std::abs(sb[ib].exp)) {
      ++ib;
      offb = 0;
    }
  }
  return false;  // identical letter sequences
}

}  // namespace fib
