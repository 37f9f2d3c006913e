#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "musym/affine.h"
#include "musym/dual.h"
#include "musym/pitch.h"

namespace musym {

/// How the polarity condition on a candidate symmetry is evaluated.
///
/// kLocalized conjugates the search into the local frame at the interval's
/// cantus: the cantus is translated to 0, conditions run over H against the
/// induced polarity there, and successors are tested on the cantus delta.
/// kGlobal keeps absolute coordinates and applies the induced polarity as a
/// fixed map of the plane.
///
/// The two variants coincide at cantus 0. The default is pinned to the
/// variant that reproduces the embedded Monteverdi succession tables; the
/// golden fixtures enforce the calibration.
enum class PolarityVariant { kGlobal, kLocalized };

inline constexpr PolarityVariant kDefaultPolarityVariant =
    PolarityVariant::kLocalized;

std::string_view polarityVariantName(PolarityVariant v);
std::optional<PolarityVariant> parsePolarityVariant(std::string_view name);

/// One step of a two-voice interval succession: the symmetries of `from`
/// that admit `to`, in canonical order.
struct TransitionAnalysis {
  DualNumber from;
  DualNumber to;
  std::vector<DualSymmetry> symmetries;

  int cardinality() const { return static_cast<int>(symmetries.size()); }
};

/// A full succession analysis with the parsimony summary used by reports.
struct SequenceAnalysis {
  std::vector<TransitionAnalysis> transitions;
  int min_cardinality = 0;
  int max_cardinality = 0;
  double mean_cardinality = 0.0;
};

/// Admissible-successor counts for every consonant interval of the plane.
struct SuccessorCountReport {
  struct Entry {
    DualNumber interval;
    int count = 0;
    /// Successors broken down by (absolute) cantus of the successor.
    std::array<int, 12> by_cantus{};
  };

  static constexpr int kBound = 42;

  std::vector<Entry> entries;  // 12 cantus x |half| intervals
  int min_count = 0;
  std::vector<DualNumber> below_bound;

  bool allMeetBound() const { return below_bound.empty(); }
};

/// @brief The consonance/dissonance machinery for a dichotomy on the dual
/// plane: counterpoint symmetries, admissible successors, succession
/// analysis, and the minimum-successor sweep.
///
/// A symmetry g ∈ H is a counterpoint symmetry for a consonant interval ξ
/// when (1) ξ lies in g(D[ε]), (2) the induced polarity carries g(K[ε]) onto
/// g(D[ε]), and (3) g maximizes |g(K[ε]) ∩ K[ε]| among the survivors of
/// (1)-(2). The search is exhaustive over the 576-element H with early
/// rejection on condition (1); at this scale exhaustion is the algorithm,
/// and it doubles as its own correctness oracle.
class CounterpointWorld {
 public:
  /// The (K/D) world with induced polarity e^{ε.2}∘5.
  static CounterpointWorld standard(
      PolarityVariant variant = kDefaultPolarityVariant);

  /// @throws std::invalid_argument unless induced_polarity maps the
  /// consonant cylinder onto the dissonant cylinder.
  CounterpointWorld(const Dichotomy& dichotomy,
                    const DualSymmetry& induced_polarity,
                    PolarityVariant variant);

  const Dichotomy& dichotomy() const { return dichotomy_; }
  const DualSymmetry& inducedPolarity() const { return polarity_; }
  PolarityVariant variant() const { return variant_; }

  bool isConsonant(DualNumber xi) const {
    return dichotomy_.half().contains(xi.eps);
  }
  /// K[ε] for this dichotomy.
  const DualSet& consonantPlane() const { return cons_plane_; }

  /// The counterpoint symmetries of ξ, ordered canonically.
  /// @throws std::invalid_argument if ξ is dissonant.
  std::vector<DualSymmetry> counterpointSymmetries(DualNumber xi) const;

  /// The symmetries of ξ that admit η. An empty set is a forbidden
  /// transition, not an error.
  TransitionAnalysis transitionSymmetries(DualNumber xi, DualNumber eta) const;

  /// Union of g(K[ε]) ∩ K[ε] over the counterpoint symmetries of ξ.
  DualSet admissibleSuccessors(DualNumber xi) const;

  /// Transition records for ξ₁..ξₙ (n ≥ 2), in order.
  /// @throws std::invalid_argument naming the 1-based offending index if the
  /// sequence contains a dissonant interval.
  SequenceAnalysis analyzeSequence(std::span<const DualNumber> sequence) const;

  /// Successor counts for all consonant intervals, flagged below 42.
  SuccessorCountReport successorCountReport() const;

 private:
  struct HEntry {
    DualSymmetry g;
    DualSet g_cons;               // g(K[ε])
    int overlap = 0;              // |g(K[ε]) ∩ K[ε]|
    bool polarity_condition = false;
  };

  void requireConsonant(DualNumber xi) const;
  std::vector<const HEntry*> symmetryEntries(DualNumber xi) const;

  Dichotomy dichotomy_;
  DualSymmetry polarity_;
  PolarityVariant variant_;
  DualSet cons_plane_;
  std::vector<HEntry> h_;
};

}  // namespace musym
