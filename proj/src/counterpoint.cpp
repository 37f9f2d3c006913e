#include "musym/counterpoint.h"

#include <algorithm>
#include <stdexcept>

namespace musym {

std::string_view polarityVariantName(PolarityVariant v) {
  return v == PolarityVariant::kGlobal ? "global" : "localized";
}

std::optional<PolarityVariant> parsePolarityVariant(std::string_view name) {
  if (name == "global") return PolarityVariant::kGlobal;
  if (name == "localized") return PolarityVariant::kLocalized;
  return std::nullopt;
}

CounterpointWorld CounterpointWorld::standard(PolarityVariant variant) {
  // Induced polarity e^{ε.2}∘5, the lift of the (K/D) polarity x -> 5x+2.
  return CounterpointWorld(Dichotomy::consonances(), DualSymmetry::h(2, 5, 0),
                           variant);
}

CounterpointWorld::CounterpointWorld(const Dichotomy& dichotomy,
                                     const DualSymmetry& induced_polarity,
                                     PolarityVariant variant)
    : dichotomy_(dichotomy),
      polarity_(induced_polarity),
      variant_(variant),
      cons_plane_(DualSet::cylinder(dichotomy.half())) {
  if (cons_plane_.imageUnder(polarity_) != cons_plane_.complement()) {
    throw std::invalid_argument(
        "induced polarity must map the consonant cylinder onto the dissonant "
        "cylinder");
  }
  h_.reserve(DualSymmetry::subgroupH().size());
  for (const DualSymmetry& g : DualSymmetry::subgroupH()) {
    HEntry entry;
    entry.g = g;
    entry.g_cons = cons_plane_.imageUnder(g);
    entry.overlap = (entry.g_cons & cons_plane_).size();
    // Condition (2): the polarity carries g(K[ε]) onto g(D[ε]); g is a
    // bijection, so g(D[ε]) is the complement of g(K[ε]).
    entry.polarity_condition =
        entry.g_cons.imageUnder(polarity_) == entry.g_cons.complement();
    h_.push_back(std::move(entry));
  }
}

void CounterpointWorld::requireConsonant(DualNumber xi) const {
  if (!isConsonant(xi)) {
    throw std::invalid_argument("interval " + xi.str() +
                                " is dissonant; counterpoint symmetries are "
                                "defined for consonances only");
  }
}

std::vector<const CounterpointWorld::HEntry*>
CounterpointWorld::symmetryEntries(DualNumber xi) const {
  // Under the localized variant the whole configuration is conjugated into
  // the frame where the cantus of ξ sits at 0; under the global variant
  // coordinates are absolute.
  DualNumber probe = variant_ == PolarityVariant::kLocalized
                         ? DualNumber{PitchClass(0), xi.eps}
                         : xi;
  int best = -1;
  std::vector<const HEntry*> out;
  for (const HEntry& entry : h_) {
    if (entry.g_cons.contains(probe)) continue;  // condition (1)
    if (!entry.polarity_condition) continue;     // condition (2)
    if (entry.overlap > best) {
      best = entry.overlap;
      out.clear();
    }
    if (entry.overlap == best) out.push_back(&entry);
  }
  return out;  // h_ is in canonical order already
}

std::vector<DualSymmetry> CounterpointWorld::counterpointSymmetries(
    DualNumber xi) const {
  requireConsonant(xi);
  std::vector<DualSymmetry> out;
  for (const HEntry* entry : symmetryEntries(xi)) out.push_back(entry->g);
  return out;
}

TransitionAnalysis CounterpointWorld::transitionSymmetries(
    DualNumber xi, DualNumber eta) const {
  requireConsonant(xi);
  requireConsonant(eta);
  DualNumber target = variant_ == PolarityVariant::kLocalized
                          ? DualNumber{eta.base - xi.base, eta.eps}
                          : eta;
  TransitionAnalysis analysis;
  analysis.from = xi;
  analysis.to = eta;
  for (const HEntry* entry : symmetryEntries(xi)) {
    if (entry->g_cons.contains(target)) analysis.symmetries.push_back(entry->g);
  }
  return analysis;
}

DualSet CounterpointWorld::admissibleSuccessors(DualNumber xi) const {
  requireConsonant(xi);
  DualSet acc;
  for (const HEntry* entry : symmetryEntries(xi)) {
    acc = acc | (entry->g_cons & cons_plane_);
  }
  if (variant_ == PolarityVariant::kLocalized) acc = acc.translatedBy(xi.base);
  return acc;
}

SequenceAnalysis CounterpointWorld::analyzeSequence(
    std::span<const DualNumber> sequence) const {
  if (sequence.size() < 2) {
    throw std::invalid_argument("sequence needs at least 2 intervals, got " +
                                std::to_string(sequence.size()));
  }
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (!isConsonant(sequence[i])) {
      throw std::invalid_argument("sequence interval #" + std::to_string(i + 1) +
                                  " (" + sequence[i].str() + ") is dissonant");
    }
  }
  SequenceAnalysis analysis;
  analysis.transitions.reserve(sequence.size() - 1);
  long total = 0;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    analysis.transitions.push_back(
        transitionSymmetries(sequence[i], sequence[i + 1]));
    total += analysis.transitions.back().cardinality();
  }
  analysis.min_cardinality = analysis.transitions.front().cardinality();
  analysis.max_cardinality = analysis.min_cardinality;
  for (const TransitionAnalysis& t : analysis.transitions) {
    analysis.min_cardinality = std::min(analysis.min_cardinality, t.cardinality());
    analysis.max_cardinality = std::max(analysis.max_cardinality, t.cardinality());
  }
  analysis.mean_cardinality =
      static_cast<double>(total) / static_cast<double>(analysis.transitions.size());
  return analysis;
}

SuccessorCountReport CounterpointWorld::successorCountReport() const {
  SuccessorCountReport report;
  report.min_count = 144;
  for (int x = 0; x < 12; ++x) {
    for (PitchClass k : dichotomy_.half().values()) {
      SuccessorCountReport::Entry entry;
      entry.interval = {PitchClass(x), k};
      DualSet successors = admissibleSuccessors(entry.interval);
      entry.count = successors.size();
      for (int c = 0; c < 12; ++c) {
        entry.by_cantus[static_cast<std::size_t>(c)] =
            successors.intervalsAt(PitchClass(c)).size();
      }
      report.min_count = std::min(report.min_count, entry.count);
      if (entry.count < SuccessorCountReport::kBound) {
        report.below_bound.push_back(entry.interval);
      }
      report.entries.push_back(entry);
    }
  }
  return report;
}

}  // namespace musym
