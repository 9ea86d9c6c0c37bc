#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fib/errors.hpp"
#include "fib/words.hpp"

namespace fib {

inline constexpr int kMaxGenerators = 64;
inline constexpr int kMaxRelators = 256;
inline constexpr std::int64_t kMaxRelatorLength = 10'000;

// Finite presentation: named generators plus cyclically reduced, nonempty
// relators over them.
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<FreeWord> relators;

  int rank() const { return static_cast<int>(generator_names.size()); }

  // Enforces the structural invariants (distinct valid names, relator
  // indices in range, cyclically reduced nonempty relators, caps).
  void validate() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Images of the generators under a homomorphism to the integers.
struct PhiMap {
  std::vector<std::int64_t> images;

  std::int64_t of(const FreeWord& w) const;

  friend bool operator==(const PhiMap&, const PhiMap&) = default;
};

struct PhiReport {
  bool primitive = false;
  std::int64_t image_gcd = 0;  // 0 when phi vanishes on every generator
};

// Checks phi(r) = 0 on every relator (throws ValidationError naming the
// first failing relator) and reports primitivity.
PhiReport validate_phi(const Presentation& p, const PhiMap& phi);

// Word in the Artin generators of the braid group on `strands` strands.
// Letter +i / -i is the i-th generator (1-based) / its inverse.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  void validate() const;
  // The closure of the braid is a knot iff the induced strand permutation
  // is a single cycle.
  bool closure_is_knot() const;
};

// DSL: one "gens" line, then "rel"/"phi" lines ("phi" exactly once);
// uppercase letters denote inverses; "#" starts a comment line.
std::pair<Presentation, PhiMap> parse_presentation(std::string_view text);
std::string print_presentation(const Presentation& p, const PhiMap& phi);

// Knot-group presentation of the braid closure: generators x1..xk (one per
// strand), relators x_j^-1 beta(x_j) for j < k with beta the Artin action,
// phi = 1 on every generator. Throws when the closure is not a knot.
std::pair<Presentation, PhiMap> braid_to_presentation(const BraidWord& b);

// Parses a CLI braid spec of the form "strands=3;word=1,-2,1,-2".
BraidWord parse_braid_spec(std::string_view spec);

}  // namespace fib
