#pragma once

#include <cstdint>
#include <vector>

namespace fib {

// One maximal run of a single generator inside a reduced word.
struct Syllable {
  int gen = 0;
  std::int64_t exp = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Freely reduced word in abstract generators 0..g-1. Adjacent syllables
// always carry distinct generators and nonzero exponents; the empty word is
// the identity.
class FreeWord {
 public:
  FreeWord() = default;

  static FreeWord generator(int gen, std::int64_t exp = 1);
  // Reduces an arbitrary syllable sequence (merging runs, dropping zeros).
  static FreeWord from_syllables(const std::vector<Syllable>& raw);

  bool empty() const { return syllables_.empty(); }
  const std::vector<Syllable>& syllables() const { return syllables_; }

  // Letter count = sum of |exp| over syllables.
  std::int64_t length() const;
  // Largest generator index used; -1 for the identity.
  int max_generator() const;

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& rhs) const;  // concatenate and reduce
  FreeWord pow(std::int64_t k) const;

  bool is_cyclically_reduced() const;
  FreeWord cyclically_reduced() const;

  std::int64_t exponent_sum(int gen) const;
  // Number of syllables carrying `gen` (not letters).
  int syllable_count(int gen) const;

  // Replace every occurrence of `gen` by `replacement` and reduce.
  FreeWord substituted(int gen, const FreeWord& replacement) const;

  // Visit single letters left to right as (gen, sign), sign = +1/-1.
  template <typename F>
  void for_each_letter(F&& f) const {
    for (const Syllable& s : syllables_) {
      int sign = s.exp > 0 ? 1 : -1;
      for (std::int64_t i = 0; i < (s.exp > 0 ? s.exp : -s.exp); ++i) f(s.gen, sign);
    }
  }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

// Shortlex order: shorter expanded length first, then letterwise with
// x0 < x0^-1 < x1 < x1^-1 < ...
bool shortlex_less(const FreeWord& a, const FreeWord& b);

struct ShortlexLess {
  bool operator()(const FreeWord& a, const FreeWord& b) const { return shortlex_less(a, b); }
};

inline FreeWord reduce_word(const std::vector<Syllable>& raw) {
  return FreeWord::from_syllables(raw);
}

}  // namespace fib
