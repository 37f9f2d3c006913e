#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "musym/affine.h"
#include "musym/pitch.h"

namespace musym {

/// Degree indices are 0-based (0 = I, ..., 6 = VII).
std::string_view romanNumeral(int degree);
std::optional<int> parseRomanNumeral(std::string_view text);

/// @brief A major tonality as a covering of Z/12Z by the seven stacked-third
/// degree triads of its scale.
class Tonality {
 public:
  static Tonality major(PitchClass tonic);

  PitchClass tonic() const { return tonic_; }
  PcSet scale() const;
  /// The 3-element triad on the given degree (0-based).
  PcSet degreeTriad(int degree) const;
  std::array<PcSet, 7> degreeTriads() const;

  /// Canonical tonic name, sharps spelling ("C", "D#", ...).
  std::string name() const;
  /// Accepts "C", "C#", "Db", ... (case-insensitive letter).
  static std::optional<Tonality> parse(std::string_view text);

  friend bool operator==(const Tonality&, const Tonality&) = default;

 private:
  explicit Tonality(PitchClass tonic) : tonic_(tonic) {}

  PitchClass tonic_;
};

/// @brief A minimal set of degrees whose triads occur together in exactly
/// one major tonality (k1..k5).
struct CadentialSet {
  std::string label;          // "k1".."k5"
  std::vector<int> degrees;   // ascending 0-based degree indices

  /// Union of the degree triads in the given tonality.
  PcSet notes(const Tonality& t) const;
  /// "k4={IV,V}".
  std::string str() const;

  friend bool operator==(const CadentialSet&, const CadentialSet&) = default;
};

/// Brute force over all degree subsets: the inclusion-minimal sets whose
/// triad collection occurs in exactly one of the 12 major tonalities.
/// Returns them labeled k1..k5 in label order.
std::vector<CadentialSet> cadentialSets(const Tonality& t);
std::optional<CadentialSet> cadentialSetByLabel(const Tonality& t,
                                                std::string_view label);

/// All maps among the 48 carrying the source scale onto the target scale.
std::vector<AffineMap> findModulators(const Tonality& source,
                                      const Tonality& target);

/// @brief A solved modulation: the minimal quantum with its pivots.
struct ModulationResult {
  Tonality source;
  Tonality target;
  AffineMap modulator;
  CadentialSet cadence;
  PcSet quantum;
  /// Other minimum-size quanta, when the minimum is not unique.
  std::vector<PcSet> alternates;
  std::vector<int> pivots;        // target degrees with triad ⊆ quantum
  std::vector<int> source_cover;  // source degrees with triad ⊆ quantum

  PcSet targetIntersection() const { return quantum & target.scale(); }
};

/// @brief The minimal note set M with m(M) = M, cadence ⊆ M, and M ∩ target
/// scale rigid. Subsets are scanned by ascending cardinality then
/// lexicographic order, seeded with the m-orbit closure of the cadence notes;
/// all minima of the winning size are carried in the result.
///
/// Returns nullopt when no subset of Z/12Z satisfies all three conditions —
/// a reported outcome, not a failure.
/// @throws std::invalid_argument if the modulator does not map the source
/// scale onto the target scale.
std::optional<ModulationResult> modulationQuantum(const Tonality& source,
                                                  const Tonality& target,
                                                  const AffineMap& modulator,
                                                  const CadentialSet& cadence);

/// Transposes a solved modulation by n: scales and quantum map under e^n*1,
/// the modulator is conjugated, and pivot degree indices are unchanged.
ModulationResult transposeModulation(const ModulationResult& r, PitchClass n);

/// One (modulator, cadence) pair of a sweep; result is nullopt when the pair
/// admits no quantum.
struct ModulationSweepEntry {
  Tonality source;
  Tonality target;
  AffineMap modulator;
  CadentialSet cadence;
  std::optional<ModulationResult> result;
};

/// Every modulator with every cadence of the target.
std::vector<ModulationSweepEntry> modulationSweep(const Tonality& source,
                                                  const Tonality& target);

}  // namespace musym
