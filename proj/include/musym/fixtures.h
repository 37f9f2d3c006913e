#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "musym/counterpoint.h"
#include "musym/dual.h"
#include "musym/pitch.h"
#include "musym/report.h"

namespace musym {

/// An embedded two-voice interval succession with its expected symmetry
/// table. The sequences and tables are stored as analysis data, not
/// re-extracted from notation.
struct SequenceFixture {
  std::string name;
  std::string description;
  std::vector<DualNumber> sequence;
  /// Expected symmetries per transition, canonical strings in canonical
  /// order.
  std::vector<std::vector<std::string>> expected_symmetries;
  std::vector<std::string> annotations;
};

/// An embedded modulation with its expected quantum.
struct QuantumFixture {
  std::string name;
  std::string description;
  PitchClass source_tonic;
  PitchClass target_tonic;
  std::string modulator;        // canonical "e6*11"
  std::string cadence_label;    // "k1".."k5"
  std::string expected_quantum;
  std::string expected_intersection;
  std::vector<int> expected_pivots;
  std::vector<int> expected_source_cover;
  /// Chord names of the expected pivots / cadence triads, canonical
  /// spelling (parsed for value comparison).
  std::vector<std::string> expected_pivot_names;
  std::vector<std::string> expected_cadence_names;
  /// Set when this fixture equals another fixture transposed by n
  /// semitones; the suite cross-checks both routes.
  std::optional<std::pair<std::string, int>> transposition_of;
  std::vector<std::string> annotations;
};

/// A major/minor cadence pair related by R, with the commuting-square check
/// T_n then R versus R then T_n.
struct DiagramFixture {
  std::string name;
  std::string description;
  PitchClass major_tonic;
  std::array<std::string, 2> expected_major_cadence;  // e.g. {"Eb", "F"}
  std::array<std::string, 2> expected_minor_cadence;  // e.g. {"c", "d"}
  std::vector<std::string> annotations;
};

/// A multi-step modulation plan; steps reference quantum fixtures whose
/// tonalities must chain source-to-target.
struct PlanFixture {
  std::string name;
  std::string description;
  std::vector<std::string> steps;
  std::vector<std::string> annotations;
};

const std::vector<SequenceFixture>& sequenceFixtures();
const std::vector<QuantumFixture>& quantumFixtures();
const std::vector<DiagramFixture>& diagramFixtures();
const std::vector<PlanFixture>& planFixtures();

const SequenceFixture* findSequenceFixture(std::string_view name);
const QuantumFixture* findQuantumFixture(std::string_view name);

/// Outcome of diffing one fixture against its expected values.
struct FixtureOutcome {
  int checks = 0;
  int mismatches = 0;
  std::vector<std::string> diffs;

  void expect(bool ok, const std::string& diff);
};

FixtureOutcome checkSequenceFixture(const CounterpointWorld& world,
                                    const SequenceFixture& fixture);
FixtureOutcome checkQuantumFixture(const QuantumFixture& fixture);
FixtureOutcome checkDiagramFixture(const DiagramFixture& fixture);
FixtureOutcome checkPlanFixture(const PlanFixture& fixture);

struct FixtureRun {
  AnalysisReport report;
  int total_mismatches = 0;
};

/// Executes every embedded fixture against the default world and diffs the
/// outputs against the embedded expected values. Pure: repeated runs
/// produce identical reports.
FixtureRun runFixtureSuite();

}  // namespace musym
