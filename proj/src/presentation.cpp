#include "fib/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace fib {

namespace {

bool valid_generator_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::islower(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!(std::islower(u) || std::isdigit(u))) return false;
  }
  return true;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string to_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

void Presentation::validate() const {
  if (generator_names.empty()) throw ValidationError("presentation has no generators");
  if (rank() > kMaxGenerators)
    throw LimitError("generator count " + std::to_string(rank()) + " exceeds cap " +
                     std::to_string(kMaxGenerators));
  if (static_cast<int>(relators.size()) > kMaxRelators)
    throw LimitError("relator count " + std::to_string(relators.size()) + " exceeds cap " +
                     std::to_string(kMaxRelators));
  std::set<std::string> seen;
  for (const std::string& name : generator_names) {
    if (!valid_generator_name(name))
      throw ValidationError("invalid generator name '" + name + "'");
    if (!seen.insert(name).second)
      throw ValidationError("duplicate generator name '" + name + "'");
  }
  for (std::size_t i = 0; i < relators.size(); ++i) {
    const FreeWord& r = relators[i];
    if (r.empty()) throw ValidationError("relator #" + std::to_string(i + 1) + " is empty");
    if (!r.is_cyclically_reduced())
      throw ValidationError("relator #" + std::to_string(i + 1) + " is not cyclically reduced");
    if (r.max_generator() >= rank())
      throw ValidationError("relator #" + std::to_string(i + 1) +
                            " references an unknown generator index");
    if (r.length() > kMaxRelatorLength)
      throw LimitError("relator #" + std::to_string(i + 1) + " exceeds the length cap");
  }
}

std::int64_t PhiMap::of(const FreeWord& w) const {
  std::int64_t total = 0;
  for (const Syllable& s : w.syllables()) {
    if (s.gen < 0 || s.gen >= static_cast<int>(images.size()))
      throw InternalError("phi evaluated on a word with out-of-range generator");
    total += images[s.gen] * s.exp;
  }
  return total;
}

PhiReport validate_phi(const Presentation& p, const PhiMap& phi) {
  if (phi.images.size() != p.generator_names.size())
    throw ValidationError("phi image count does not match generator count");
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    std::int64_t v = phi.of(p.relators[i]);
    if (v != 0)
      throw ValidationError("phi does not vanish on relator #" + std::to_string(i + 1) +
                            " (value " + std::to_string(v) + ")");
  }
  std::int64_t g = 0;
  for (std::int64_t v : phi.images) g = std::gcd(g, v);
  return PhiReport{g == 1, g};
}

std::pair<Presentation, PhiMap> parse_presentation(std::string_view text) {
  Presentation p;
  PhiMap phi;
  bool saw_gens = false, saw_phi = false;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0][0] == '#') continue;

    if (toks[0] == "gens") {
      if (saw_gens) throw ParseError("duplicate 'gens' line", lineno);
      if (toks.size() < 2) throw ParseError("'gens' needs at least one name", lineno);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!valid_generator_name(toks[i]))
          throw ParseError("invalid generator name '" + toks[i] + "'", lineno,
                           static_cast<int>(i));
        p.generator_names.push_back(toks[i]);
      }
      if (p.rank() > kMaxGenerators) throw LimitError("generator count exceeds cap");
      saw_gens = true;
      continue;
    }

    if (toks[0] == "rel") {
      if (!saw_gens) throw ParseError("'rel' before 'gens'", lineno);
      if (toks.size() < 2) throw ParseError("'rel' needs at least one letter", lineno);
      std::vector<Syllable> raw;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string& tok = toks[i];
        bool upper = std::isupper(static_cast<unsigned char>(tok[0]));
        for (char c : tok) {
          unsigned char u = static_cast<unsigned char>(c);
          bool ok = upper ? (std::isupper(u) || std::isdigit(u))
                          : (std::islower(u) || std::isdigit(u));
          if (!ok)
            throw ParseError("mixed-case letter token '" + tok + "'", lineno,
                             static_cast<int>(i));
        }
        std::string name = upper ? to_lower(tok) : tok;
        auto it = std::find(p.generator_names.begin(), p.generator_names.end(), name);
        if (it == p.generator_names.end())
          throw ParseError("unknown generator '" + tok + "' in relator", lineno,
                           static_cast<int>(i));
        int gen = static_cast<int>(it - p.generator_names.begin());
        raw.push_back({gen, upper ? -1 : 1});
      }
      FreeWord r = FreeWord::from_syllables(raw).cyclically_reduced();
      if (r.empty())
        throw ParseError("relator reduces to the identity", lineno);
      if (r.length() > kMaxRelatorLength) throw LimitError("relator exceeds the length cap");
      p.relators.push_back(r);
      if (static_cast<int>(p.relators.size()) > kMaxRelators)
        throw LimitError("relator count exceeds cap");
      continue;
    }

    if (toks[0] == "phi") {
      if (!saw_gens) throw ParseError("'phi' before 'gens'", lineno);
      if (saw_phi) throw ParseError("duplicate 'phi' line", lineno);
      phi.images.assign(p.generator_names.size(), 0);
      std::vector<bool> assigned(p.generator_names.size(), false);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string& tok = toks[i];
        std::size_t colon = tok.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
          throw ParseError("expected NAME:INT, got '" + tok + "'", lineno,
                           static_cast<int>(i));
        std::string name = tok.substr(0, colon);
        auto it = std::find(p.generator_names.begin(), p.generator_names.end(), name);
        if (it == p.generator_names.end())
          throw ParseError("unknown generator '" + name + "' in phi line", lineno,
                           static_cast<int>(i));
        int gen = static_cast<int>(it - p.generator_names.begin());
        if (assigned[gen])
          throw ParseError("generator '" + name + "' assigned twice in phi line", lineno,
                           static_cast<int>(i));
        std::int64_t value = 0;
        try {
          std::size_t used = 0;
          value = std::stoll(tok.substr(colon + 1), &used);
          if (used != tok.size() - colon - 1) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
          throw ParseError("invalid integer in '" + tok + "'", lineno, static_cast<int>(i));
        }
        phi.images[gen] = value;
        assigned[gen] = true;
      }
      saw_phi = true;
      continue;
    }

    throw ParseError("unknown directive '" + toks[0] + "'", lineno);
  }

  if (!saw_gens) throw ParseError("missing 'gens' line", lineno == 0 ? 1 : lineno);
  if (!saw_phi) throw ParseError("missing 'phi' line", lineno == 0 ? 1 : lineno);
  p.validate();
  validate_phi(p, phi);
  return {p, phi};
}

std::string print_presentation(const Presentation& p, const PhiMap& phi) {
  std::ostringstream out;
  out << "gens";
  for (const std::string& name : p.generator_names) out << ' ' << name;
  out << '\n';
  for (const FreeWord& r : p.relators) {
    out << "rel";
    r.for_each_letter([&](int gen, int sign) {
      std::string name = p.generator_names[gen];
      if (sign < 0)
        for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      out << ' ' << name;
    });
    out << '\n';
  }
  out << "phi";
  for (int i = 0; i < p.rank(); ++i)
    out << ' ' << p.generator_names[i] << ':' << phi.images[i];
  out << '\n';
  return out.str();
}

void BraidWord::validate() const {
  if (strands < 2) throw ValidationError("braid needs at least 2 strands");
  if (letters.empty()) throw ValidationError("braid word is empty");
  for (int l : letters) {
    if (l == 0 || std::abs(l) >= strands)
      throw ValidationError("braid letter " + std::to_string(l) + " out of range for " +
                            std::to_string(strands) + " strands");
  }
}

bool BraidWord::closure_is_knot() const {
  std::vector<int> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : letters) {
    int i = std::abs(l) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  // Single cycle through 0.
  int seen = 0, at = 0;
  do {
    at = perm[at];
    ++seen;
  } while (at != 0 && seen <= strands);
  return seen == strands;
}

std::pair<Presentation, PhiMap> braid_to_presentation(const BraidWord& b) {
  b.validate();
  if (!b.closure_is_knot())
    throw ValidationError("braid closure is not a knot (strand permutation is not one cycle)");

  int k = b.strands;
  // beta = sigma_{l1} o sigma_{l2} o ... applied by expanding each letter's
  // action inside the accumulated automorphism.
  std::vector<FreeWord> image(k);
  for (int j = 0; j < k; ++j) image[j] = FreeWord::generator(j);
  for (int l : b.letters) {
    int i = std::abs(l) - 1;
    FreeWord a = image[i], c = image[i + 1];
    if (l > 0) {
      image[i] = a * c * a.inverse();
      image[i + 1] = a;
    } else {
      image[i] = c;
      image[i + 1] = c.inverse() * a * c;
    }
    for (const FreeWord& w : image)
      if (w.length() > kMaxRelatorLength)
        throw LimitError("braid action exceeds the relator length cap");
  }

  Presentation p;
  for (int j = 1; j <= k; ++j) p.generator_names.push_back("x" + std::to_string(j));
  for (int j = 0; j + 1 < k; ++j) {
    FreeWord r = (FreeWord::generator(j).inverse() * image[j]).cyclically_reduced();
    if (!r.empty()) p.relators.push_back(r);
  }
  PhiMap phi;
  phi.images.assign(k, 1);
  p.validate();
  validate_phi(p, phi);
  return {p, phi};
}

BraidWord parse_braid_spec(std::string_view spec) {
  // "strands=3;word=1,-2,1,-2"
  std::string s(spec);
  auto fail = [&](const std::string& msg) { throw ParseError("braid spec: " + msg, 1); };
  std::size_t semi = s.find(';');
  if (semi == std::string::npos) fail("expected 'strands=K;word=...'");
  std::string left = s.substr(0, semi), right = s.substr(semi + 1);
  if (left.rfind("strands=", 0) != 0) fail("expected 'strands=' prefix");
  if (right.rfind("word=", 0) != 0) fail("expected 'word=' after ';'");
  BraidWord b;
  try {
    std::size_t used = 0;
    b.strands = std::stoi(left.substr(8), &used);
    if (used != left.size() - 8) fail("trailing junk after strand count");
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail("invalid strand count");
  }
  std::string word = right.substr(5);
  std::istringstream in(word);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) fail("invalid braid letter '" + item + "'");
      b.letters.push_back(v);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      fail("invalid braid letter '" + item + "'");
    }
  }
  b.validate();
  return b;
}

}  // namespace fib
