#pragma once

#include <compare>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "musym/dual.h"
#include "musym/modulation.h"
#include "musym/pitch.h"

namespace musym {

/// Exact beat position, stored as a normalized integer pair. Onsets are
/// metadata only and never affect algebraic results.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long num, long long den = 1);
  static std::optional<Rational> parse(std::string_view text);  // "3" or "3/2"

  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num * b.den <= b.num * a.den;
  }
};

/// A two-voice event: octave-bearing MIDI-style pitches (0-127).
struct VoiceEvent {
  Rational onset;
  int lower_pitch = 0;
  int upper_pitch = 0;

  friend bool operator==(const VoiceEvent&, const VoiceEvent&) = default;
};

/// A chord-stream event: a nonempty pitch-class set, optionally labeled.
struct ChordEvent {
  Rational onset;
  PcSet pcs;
  std::string label;

  friend bool operator==(const ChordEvent&, const ChordEvent&) = default;
};

enum class EventFormat { kVoices, kChords, kIntervals };

/// Result of parsing one of the three ingestion formats; only the vector
/// matching `format` is populated.
struct ParsedEvents {
  EventFormat format = EventFormat::kIntervals;
  std::vector<VoiceEvent> voices;
  std::vector<ChordEvent> chords;
  std::vector<DualNumber> intervals;
};

/// Parses UTF-8 text (LF or CRLF) in one of three formats, auto-detected by
/// header line:
///   "onset,lower,upper"      -> voice events
///   "onset,pcs[,label]"      -> chord events, pcs as "|"-separated residues
///   headerless "x+e.y" lines -> counterpoint intervals
/// Lines whose first non-space character is '#' are comments.
/// @throws InputError with 1-based line and column on malformed or mixed
/// input.
ParsedEvents parseEvents(std::string_view text);

/// Renders parsed events back to their textual form (inverse of
/// parseEvents up to comments and blank lines).
std::string renderEvents(const ParsedEvents& events);

struct ExtractedInterval {
  DualNumber interval;
  bool consonant = false;  // eps ∈ K for the standard dichotomy

  friend bool operator==(const ExtractedInterval&,
                         const ExtractedInterval&) = default;
};

struct ExtractionResult {
  std::vector<ExtractedInterval> intervals;
  std::vector<std::string> warnings;
};

/// ξ = (lower mod 12) + ε.((upper - lower) mod 12) per event; consecutive
/// duplicates collapse to one. Dissonant intervals are retained but flagged.
/// An upper voice below the lower one warns; the interval still reduces
/// mod 12.
ExtractionResult extractIntervals(std::span<const VoiceEvent> events);

/// A (tonality, degree) pair whose triad contains a chord.
struct DegreeMatch {
  Tonality tonality;
  int degree = 0;

  friend bool operator==(const DegreeMatch&, const DegreeMatch&) = default;
};

struct ChordLabel {
  enum class Quality { kMajor, kMinor, kDiminished, kUnknown };

  Quality quality = Quality::kUnknown;
  std::string name;  // "G", "g#", "g#°"; empty when unknown
  std::vector<DegreeMatch> degrees;

  bool known() const { return quality != Quality::kUnknown; }
};

/// Exact-match recognition against the 24 major/minor and 12 diminished
/// triads, plus every (tonality, degree) whose triad contains the chord.
/// "unknown" is a value, not an error.
ChordLabel labelChord(PcSet pcs);

}  // namespace musym
