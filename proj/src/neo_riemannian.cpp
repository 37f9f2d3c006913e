#include "musym/neo_riemannian.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "musym/errors.h"

namespace musym {
namespace {

using Permutation = std::array<std::uint8_t, 24>;

int triadIndex(const Triad& t) {
  return (t.mode() == Mode::kMajor ? 0 : 12) + t.root().value();
}

Permutation permutationOf(Triad (*f)(const Triad&)) {
  Permutation p{};
  for (const Triad& t : Triad::all()) {
    p[static_cast<std::size_t>(triadIndex(t))] =
        static_cast<std::uint8_t>(triadIndex(f(t)));
  }
  return p;
}

Permutation composePerm(const Permutation& a, const Permutation& b) {
  Permutation out{};
  for (std::size_t i = 0; i < 24; ++i) out[i] = a[b[i]];
  return out;
}

Permutation identityPerm() {
  Permutation p{};
  for (std::size_t i = 0; i < 24; ++i) p[i] = static_cast<std::uint8_t>(i);
  return p;
}

std::set<Permutation> generateGroup(const std::vector<Permutation>& gens) {
  std::set<Permutation> group{identityPerm()};
  std::vector<Permutation> frontier{identityPerm()};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& p : frontier) {
      for (const Permutation& g : gens) {
        Permutation q = composePerm(g, p);
        if (group.insert(q).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  return group;
}

bool simplyTransitive(const std::set<Permutation>& group) {
  for (std::size_t from = 0; from < 24; ++from) {
    for (std::size_t to = 0; to < 24; ++to) {
      int hits = 0;
      for (const Permutation& g : group) {
        if (g[from] == to) ++hits;
      }
      if (hits != 1) return false;
    }
  }
  return true;
}

int permOrder(const Permutation& p) {
  Permutation q = p;
  int n = 1;
  while (q != identityPerm()) {
    q = composePerm(p, q);
    ++n;
  }
  return n;
}

// Order 24, an element x of order 12, and an involution outside <x>
// conjugating x to its inverse: the dihedral presentation of order 24.
bool isDihedral24(const std::set<Permutation>& group) {
  if (group.size() != 24) return false;
  for (const Permutation& x : group) {
    if (permOrder(x) != 12) continue;
    std::set<Permutation> cyclic;
    Permutation q = identityPerm();
    for (int i = 0; i < 12; ++i) {
      cyclic.insert(q);
      q = composePerm(x, q);
    }
    Permutation xinv = x;
    while (composePerm(xinv, x) != identityPerm()) xinv = composePerm(xinv, x);
    for (const Permutation& s : group) {
      if (cyclic.count(s)) continue;
      if (composePerm(s, s) != identityPerm()) continue;
      if (composePerm(composePerm(s, x), s) == xinv) return true;
    }
  }
  return false;
}

}  // namespace

PcSet Triad::pitches() const {
  int third = mode_ == Mode::kMajor ? 4 : 3;
  PcSet out;
  out.add(root_);
  out.add(root_ + PitchClass(third));
  out.add(root_ + PitchClass(7));
  return out;
}

std::string Triad::name() const {
  std::string n(pitchName(root_));
  if (mode_ == Mode::kMinor) {
    for (char& c : n) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return n;
}

std::optional<Triad> Triad::parse(std::string_view text) {
  if (text.empty() || text.size() > 2) return std::nullopt;
  char letter = text[0];
  if (!std::isalpha(static_cast<unsigned char>(letter))) return std::nullopt;
  Mode mode = std::isupper(static_cast<unsigned char>(letter)) ? Mode::kMajor
                                                               : Mode::kMinor;
  auto root = parsePitchName(text);
  if (!root) return std::nullopt;
  return Triad(*root, mode);
}

std::optional<Triad> Triad::fromPitches(PcSet pcs) {
  for (const Triad& t : all()) {
    if (t.pitches() == pcs) return t;
  }
  return std::nullopt;
}

const std::array<Triad, 24>& Triad::all() {
  static const std::array<Triad, 24> triads = [] {
    std::array<Triad, 24> out;
    for (int r = 0; r < 12; ++r) {
      out[static_cast<std::size_t>(r)] = Triad(PitchClass(r), Mode::kMajor);
      out[static_cast<std::size_t>(r + 12)] = Triad(PitchClass(r), Mode::kMinor);
    }
    return out;
  }();
  return triads;
}

std::string TIElement::str() const {
  return (kind == Kind::kTransposition ? "T" : "I") +
         std::to_string(index.value());
}

Triad tiApply(const TIElement& op, const Triad& t) {
  if (op.kind == TIElement::Kind::kTransposition) {
    return Triad(t.root() + op.index, t.mode());
  }
  // Pointwise inversion of the pitch set re-recognizes as the mode-flipped
  // triad.
  PcSet image;
  for (PitchClass p : t.pitches().values()) image.add(-p + op.index);
  auto out = Triad::fromPitches(image);
  if (!out) {
    throw std::logic_error("inversion image is not a triad: " + image.str());
  }
  return *out;
}

Triad plrApply(PlrLetter letter, const Triad& t) {
  const bool major = t.mode() == Mode::kMajor;
  switch (letter) {
    case PlrLetter::kP:
      return Triad(t.root(), major ? Mode::kMinor : Mode::kMajor);
    case PlrLetter::kL:
      return major ? Triad(t.root() + PitchClass(4), Mode::kMinor)
                   : Triad(t.root() + PitchClass(8), Mode::kMajor);
    case PlrLetter::kR:
      return major ? Triad(t.root() + PitchClass(9), Mode::kMinor)
                   : Triad(t.root() + PitchClass(3), Mode::kMajor);
  }
  throw std::logic_error("unreachable");
}

std::optional<std::vector<WordToken>> parseWord(std::string_view text) {
  std::vector<WordToken> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
      token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.remove_suffix(1);
    if (token.empty()) return std::nullopt;
    if (token == "P") {
      out.push_back(PlrLetter::kP);
    } else if (token == "L") {
      out.push_back(PlrLetter::kL);
    } else if (token == "R") {
      out.push_back(PlrLetter::kR);
    } else if (token[0] == 'T' || token[0] == 'I') {
      int n = 0;
      std::string_view digits = token.substr(1);
      if (digits.empty() || digits.size() > 2) return std::nullopt;
      for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        n = n * 10 + (c - '0');
      }
      if (n > 11) return std::nullopt;
      out.push_back(TIElement{token[0] == 'T' ? TIElement::Kind::kTransposition
                                              : TIElement::Kind::kInversion,
                              PitchClass(n)});
    } else {
      return std::nullopt;
    }
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  if (out.empty()) return std::nullopt;
  return out;
}

std::string wordStr(std::span<const WordToken> word) {
  std::string out;
  for (const WordToken& token : word) {
    if (!out.empty()) out += ',';
    if (const auto* letter = std::get_if<PlrLetter>(&token)) {
      out += *letter == PlrLetter::kP ? 'P' : (*letter == PlrLetter::kL ? 'L' : 'R');
    } else {
      out += std::get<TIElement>(token).str();
    }
  }
  return out;
}

Triad wordApply(std::span<const WordToken> word, Triad t) {
  for (const WordToken& token : word) {
    if (const auto* letter = std::get_if<PlrLetter>(&token)) {
      t = plrApply(*letter, t);
    } else {
      t = tiApply(std::get<TIElement>(token), t);
    }
  }
  return t;
}

GroupVerification verifyGroupProperties() {
  // TI generated by T_1 and I_0; PLR by its three letters.
  std::vector<Permutation> ti_gens = {
      permutationOf([](const Triad& t) {
        return tiApply({TIElement::Kind::kTransposition, PitchClass(1)}, t);
      }),
      permutationOf([](const Triad& t) {
        return tiApply({TIElement::Kind::kInversion, PitchClass(0)}, t);
      })};
  std::vector<Permutation> plr_gens = {
      permutationOf([](const Triad& t) { return plrApply(PlrLetter::kP, t); }),
      permutationOf([](const Triad& t) { return plrApply(PlrLetter::kL, t); }),
      permutationOf([](const Triad& t) { return plrApply(PlrLetter::kR, t); })};

  const std::set<Permutation> ti = generateGroup(ti_gens);
  const std::set<Permutation> plr = generateGroup(plr_gens);

  GroupVerification v;
  v.ti_order = static_cast<int>(ti.size());
  v.plr_order = static_cast<int>(plr.size());
  v.dual_commute = true;
  for (const Permutation& a : ti) {
    for (const Permutation& b : plr) {
      if (composePerm(a, b) != composePerm(b, a)) {
        v.dual_commute = false;
        break;
      }
    }
    if (!v.dual_commute) break;
  }
  v.ti_simply_transitive = simplyTransitive(ti);
  v.plr_simply_transitive = simplyTransitive(plr);
  v.isomorphic = isDihedral24(ti) && isDihedral24(plr);
  return v;
}

CadenceTransform cadenceTransform(PitchClass major_tonic) {
  const Triad tonic(major_tonic, Mode::kMajor);
  const Triad subdominant =
      tiApply({TIElement::Kind::kTransposition, PitchClass(5)}, tonic);
  const Triad dominant =
      tiApply({TIElement::Kind::kTransposition, PitchClass(7)}, tonic);
  return CadenceTransform{
      {subdominant, dominant},
      {plrApply(PlrLetter::kR, subdominant), plrApply(PlrLetter::kR, dominant)}};
}

Triad degreeAsTriad(const Tonality& t, int degree) {
  auto triad = Triad::fromPitches(t.degreeTriad(degree));
  if (!triad) {
    throw NotATriadError("degree " + std::string(romanNumeral(degree)) +
                         " of " + t.name() +
                         " is diminished; it has no image among the 24 "
                         "major/minor triads");
  }
  return *triad;
}

Triad parseTriadSpec(std::string_view text) {
  constexpr std::string_view kDegreePrefix = "deg:";
  if (text.substr(0, kDegreePrefix.size()) == kDegreePrefix) {
    std::string_view rest = text.substr(kDegreePrefix.size());
    std::size_t at = rest.find('@');
    if (at == std::string_view::npos) {
      throw InputError("degree alias must look like deg:<roman>@<key>: " +
                       std::string(text));
    }
    auto degree = parseRomanNumeral(rest.substr(0, at));
    if (!degree) {
      throw InputError("bad degree numeral in " + std::string(text));
    }
    auto key = Tonality::parse(rest.substr(at + 1));
    if (!key) {
      throw InputError("bad key name in " + std::string(text));
    }
    return degreeAsTriad(*key, *degree);
  }
  auto triad = Triad::parse(text);
  if (!triad) {
    throw InputError("bad triad name: " + std::string(text));
  }
  return *triad;
}

}  // namespace musym
