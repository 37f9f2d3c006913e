#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "musym/modulation.h"
#include "musym/pitch.h"

namespace musym {

enum class Mode { kMajor, kMinor };

/// @brief One of the 24 consonant triads, identified by root and mode.
/// Major root r has pitches {r, r+4, r+7}; minor {r, r+3, r+7}.
class Triad {
 public:
  Triad() = default;
  Triad(PitchClass root, Mode mode) : root_(root), mode_(mode) {}

  PitchClass root() const { return root_; }
  Mode mode() const { return mode_; }
  PcSet pitches() const;

  /// "C", "F#" for major; "c", "f#" for minor (case encodes mode).
  std::string name() const;
  static std::optional<Triad> parse(std::string_view text);
  /// Recognizes a 3-element pitch set as one of the 24 triads.
  static std::optional<Triad> fromPitches(PcSet pcs);

  friend bool operator==(const Triad&, const Triad&) = default;
  friend auto operator<=>(const Triad& a, const Triad& b) {
    if (auto c = a.mode_ <=> b.mode_; c != 0) return c;
    return a.root_ <=> b.root_;
  }

  /// All 24 triads: majors by ascending root, then minors.
  static const std::array<Triad, 24>& all();

 private:
  PitchClass root_;
  Mode mode_ = Mode::kMajor;
};

/// @brief A transposition T_n (x -> x+n) or inversion I_n (x -> -x+n),
/// acting pointwise on triad pitch sets.
struct TIElement {
  enum class Kind { kTransposition, kInversion };

  Kind kind = Kind::kTransposition;
  PitchClass index;

  std::string str() const;  // "T7", "I0"

  friend bool operator==(const TIElement&, const TIElement&) = default;
};

/// Pointwise action on the pitch set, re-recognized as a triad.
/// T preserves mode; I flips it.
Triad tiApply(const TIElement& op, const Triad& t);

/// P (parallel), L (Leittonwechsel), R (relative). Each is an involution.
enum class PlrLetter { kP, kL, kR };

/// P flips the mode on the same root. L: major r -> minor r+4 (C major to
/// e minor) and inversely. R: major r -> relative minor r+9 (C major to
/// a minor), minor s -> major s+3.
Triad plrApply(PlrLetter letter, const Triad& t);

/// A word over {P, L, R} and TI elements, e.g. "R,T7".
using WordToken = std::variant<PlrLetter, TIElement>;

std::optional<std::vector<WordToken>> parseWord(std::string_view text);
std::string wordStr(std::span<const WordToken> word);

/// Applies tokens left to right: the first token acts first.
Triad wordApply(std::span<const WordToken> word, Triad t);

/// Exhaustively verified facts about the TI and PLR actions on the 24
/// triads: both generated permutation groups have order 24, act simply
/// transitively, commute elementwise, and are dihedral of order 24.
struct GroupVerification {
  int ti_order = 0;
  int plr_order = 0;
  bool dual_commute = false;
  bool ti_simply_transitive = false;
  bool plr_simply_transitive = false;
  bool isomorphic = false;  // both classify as dihedral of order 24

  bool allPass() const {
    return ti_order == 24 && plr_order == 24 && dual_commute &&
           ti_simply_transitive && plr_simply_transitive && isomorphic;
  }
};

GroupVerification verifyGroupProperties();

/// The {IV,V} cadence of a major key and its image under R: the {ii,iii}
/// minor cadence. Expresses the major-to-relative-minor modulation device.
struct CadenceTransform {
  std::array<Triad, 2> major_cadence;  // {T_5(tonic), T_7(tonic)}
  std::array<Triad, 2> minor_cadence;  // {R(T_5(tonic)), R(T_7(tonic))}
};

CadenceTransform cadenceTransform(PitchClass major_tonic);

/// Converts a tonality degree to a Triad.
/// @throws NotATriadError for the diminished degree (VII), which has no
/// image in the 24-triad world.
Triad degreeAsTriad(const Tonality& t, int degree);

/// Parses "C", "f#", or the alias "deg:<roman>@<key>" (e.g. "deg:V@C").
/// @throws InputError on bad syntax, NotATriadError for diminished degrees.
Triad parseTriadSpec(std::string_view text);

}  // namespace musym
