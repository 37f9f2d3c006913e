#include "musym/fixtures.h"

#include <algorithm>

#include "musym/counterpoint.h"
#include "musym/events.h"
#include "musym/modulation.h"
#include "musym/neo_riemannian.h"

namespace musym {
namespace {

DualNumber dn(int base, int eps) { return {PitchClass(base), PitchClass(eps)}; }

std::vector<std::string> canonicalStrings(
    const std::vector<DualSymmetry>& symmetries) {
  std::vector<std::string> out;
  out.reserve(symmetries.size());
  for (const DualSymmetry& g : symmetries) out.push_back(g.str());
  return out;
}

std::string joined(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i];
  }
  out += "}";
  return out;
}

std::vector<int> degreeIndices(std::initializer_list<int> roman_1based) {
  std::vector<int> out;
  for (int d : roman_1based) out.push_back(d - 1);
  return out;
}

}  // namespace

void FixtureOutcome::expect(bool ok, const std::string& diff) {
  ++checks;
  if (!ok) {
    ++mismatches;
    diffs.push_back(diff);
  }
}

const std::vector<SequenceFixture>& sequenceFixtures() {
  static const std::vector<SequenceFixture> fixtures = {
      {"confitebor",
       "Confitebor primo (1640), mm. 64-67, 5-3 succession",
       {dn(0, 7), dn(0, 4), dn(10, 7), dn(10, 4), dn(9, 7), dn(9, 3), dn(7, 7),
        dn(7, 4), dn(5, 7)},
       {{"e[0]*(7+0e)"},
        {"e[6]*(7+6e)"},
        {"e[0]*(7+0e)"},
        {"e[6]*(1+6e)"},
        {"e[0]*(7+0e)"},
        {"e[8]*(5+4e)"},
        {"e[0]*(7+0e)"},
        {"e[6]*(7+6e)"}},
       {"the cantus-firmus-fixing symmetry e^{ε.6}∘(1+ε.6) "
        "falls on 'mirabilium' (transition 4)"}},
      {"ma_tu",
       "Ma tu, piu che mai dura (Book V madrigals), mm. 6-8, 5-3 succession",
       {dn(5, 7), dn(5, 4), dn(3, 7), dn(3, 4), dn(2, 7)},
       {{"e[0]*(7+0e)"},
        {"e[6]*(7+6e)"},
        {"e[0]*(7+0e)"},
        {"e[6]*(1+6e)"}},
       {"the cantus-firmus-fixing symmetry e^{ε.6}∘(1+ε.6) "
        "falls on 'pieta' (transition 4)"}},
      {"io_mi_son_giovinetta",
       "Io mi son giovinetta (Book IV madrigals), mm. 52-53, 5-3 succession",
       {dn(7, 7), dn(7, 3), dn(5, 7), dn(5, 4), dn(3, 7), dn(3, 4), dn(2, 7),
        dn(2, 3), dn(0, 7)},
       {{"e[0]*(7+0e)"},
        {"e[8]*(5+4e)"},
        {"e[0]*(7+0e)"},
        {"e[6]*(7+6e)"},
        {"e[0]*(7+0e)"},
        {"e[6]*(1+6e)"},
        {"e[0]*(7+0e)"},
        {"e[8]*(5+4e)"}},
       {"the cantus-firmus-fixing symmetry e^{ε.6}∘(1+ε.6) "
        "falls on the chromatic E-flat at 'fuggi' (transition 6)"}},
      {"laudate_dominum",
       "Laudate Dominum (1640), mm. 98-103, 8-6 succession",
       {dn(2, 0), dn(2, 9), dn(0, 0), dn(0, 9), dn(11, 0), dn(11, 8), dn(9, 0),
        dn(9, 8), dn(7, 0), dn(7, 9)},
       {{"e[6]*(1+6e)", "e[6]*(7+6e)"},
        {"e[8]*(5+4e)", "e[8]*(5+8e)"},
        {"e[6]*(1+6e)", "e[6]*(7+6e)"},
        {"e[8]*(5+4e)", "e[8]*(5+8e)"},
        {"e[11]*(11+0e)", "e[11]*(11+4e)", "e[11]*(11+8e)"},
        {"e[3]*(7+0e)", "e[3]*(7+8e)"},
        {"e[11]*(11+0e)", "e[11]*(11+4e)", "e[11]*(11+8e)"},
        {"e[3]*(7+0e)", "e[3]*(7+8e)"},
        {"e[6]*(1+6e)", "e[6]*(7+6e)"}},
       {}},
      {"gloria_8_6",
       "Gloria a 7 (1640), mm. 1-5, 8-6 succession",
       {dn(2, 0), dn(2, 9), dn(0, 0), dn(0, 9), dn(11, 0), dn(11, 8), dn(9, 0),
        dn(9, 8), dn(7, 0)},
       {{"e[6]*(1+6e)", "e[6]*(7+6e)"},
        {"e[8]*(5+4e)", "e[8]*(5+8e)"},
        {"e[6]*(1+6e)", "e[6]*(7+6e)"},
        {"e[8]*(5+4e)", "e[8]*(5+8e)"},
        {"e[11]*(11+0e)", "e[11]*(11+4e)", "e[11]*(11+8e)"},
        {"e[3]*(7+0e)", "e[3]*(7+8e)"},
        {"e[11]*(11+0e)", "e[11]*(11+4e)", "e[11]*(11+8e)"},
        {"e[3]*(7+0e)", "e[3]*(7+8e)"}},
       {}},
      {"gloria_10_8",
       "Gloria a 7 (1640), mm. 1-5, 10-8 succession",
       {dn(11, 3), dn(11, 0), dn(9, 3), dn(9, 0), dn(7, 4)},
       {{"e[8]*(5+4e)", "e[8]*(5+8e)"},
        {"e[6]*(1+6e)", "e[6]*(7+6e)", "e[11]*(11+0e)", "e[11]*(11+4e)",
         "e[11]*(11+8e)"},
        {"e[8]*(5+4e)", "e[8]*(5+8e)"},
        {"e[11]*(11+0e)", "e[11]*(11+4e)"}},
       {"cardinality jumps align with tutti voice entries"}},
  };
  return fixtures;
}

const std::vector<QuantumFixture>& quantumFixtures() {
  static const std::vector<QuantumFixture> fixtures = {
      {"c_to_d_k4",
       "Modulation C to D with cadence k4",
       PitchClass(0),
       PitchClass(2),
       "e6*11",
       "k4",
       "1,2,4,5,7,9,11",
       "1,2,4,7,9,11",
       degreeIndices({2, 4, 5, 7}),
       degreeIndices({2, 3, 5, 7}),
       {"e", "G", "A", "c#°"},
       {"G", "A"},
       std::nullopt,
       {"In questo lieto e fortunato giorno: the call to the shepherds sits "
        "in C; Euridice's yielding turns to D"}},
      {"c_to_g_k5",
       "Modulation C to G with cadence k5",
       PitchClass(0),
       PitchClass(7),
       "e11*11",
       "k5",
       "0,2,5,6,9,11",
       "0,2,6,9,11",
       degreeIndices({3, 5, 7}),
       degreeIndices({2, 4, 7}),
       {"b", "D", "f#°"},
       {"f#°"},
       std::nullopt,
       {}},
      {"c_to_eb_k1",
       "Modulation C to Eb with cadence k1",
       PitchClass(0),
       PitchClass(3),
       "e7*11",
       "k1",
       "0,2,5,7,8,9,10,11",
       "0,2,5,7,8,10",
       degreeIndices({2, 3, 5, 7}),
       degreeIndices({2, 4, 5, 7}),
       {"f", "g", "A#", "d°"},
       {"f", "A#"},
       std::nullopt,
       {"Eb is taken as D# under enharmonic identification"}},
      {"d_to_a_k5",
       "Modulation D to A with cadence k5 (C to G transposed up one tone)",
       PitchClass(2),
       PitchClass(9),
       "e3*11",
       "k5",
       "1,2,4,7,8,11",
       "1,2,4,8,11",
       degreeIndices({3, 5, 7}),
       degreeIndices({2, 4, 7}),
       {"c#", "E", "g#°"},
       {"g#°"},
       std::make_pair(std::string("c_to_g_k5"), 2),
       {"Orpheus's suffering in the woods, in A; the cadence chord g#° "
        "is itself a pivot"}},
      {"a_to_c_k1",
       "Modulation A to C with cadence k1 (C to Eb transposed up three "
       "semitones)",
       PitchClass(9),
       PitchClass(0),
       "e1*11",
       "k1",
       "2,4,5,6,7,8,9,11",
       "2,4,5,7,9,11",
       degreeIndices({2, 3, 5, 7}),
       degreeIndices({2, 4, 5, 7}),
       {"d", "e", "G", "b°"},
       {"d", "G"},
       std::make_pair(std::string("c_to_eb_k1"), 9),
       {"the return to C as Euridice reciprocates; cadence chords d and G "
        "appear in mm. 16-17"}},
  };
  return fixtures;
}

const std::vector<DiagramFixture>& diagramFixtures() {
  static const std::vector<DiagramFixture> fixtures = {
      {"ecco_pur",
       "Ecco pur (L'Orfeo, Act II): k4 of Bb against k2 of g",
       PitchClass(10),
       {"Eb", "F"},
       {"c", "d"},
       {"the sun's return stays major; the ritorno itself lands on the "
        "relative minor"}},
      {"mira_deh_mira",
       "Mira, deh mira Orfeo (L'Orfeo, Act II): k4 of C against k2 of a",
       PitchClass(0),
       {"F", "G"},
       {"d", "e"},
       {"the shepherd's joy in C gives way to a-minor shadows before the "
        "messenger's news"}},
  };
  return fixtures;
}

const std::vector<PlanFixture>& planFixtures() {
  static const std::vector<PlanFixture> fixtures = {
      {"in_questo_lieto",
       "In questo lieto e fortunato giorno (L'Orfeo, Act I): C-D-A-C",
       {"c_to_d_k4", "d_to_a_k5", "a_to_c_k1"},
       {"three modulations tracing the call, the yielding, the suffering, "
        "and the return"}},
  };
  return fixtures;
}

const SequenceFixture* findSequenceFixture(std::string_view name) {
  for (const SequenceFixture& f : sequenceFixtures()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const QuantumFixture* findQuantumFixture(std::string_view name) {
  for (const QuantumFixture& f : quantumFixtures()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

FixtureOutcome checkSequenceFixture(const CounterpointWorld& world,
                                    const SequenceFixture& fixture) {
  FixtureOutcome check;
  const SequenceAnalysis analysis = world.analyzeSequence(fixture.sequence);
  check.expect(analysis.transitions.size() == fixture.expected_symmetries.size(),
               fixture.name + ": row count " +
                   std::to_string(analysis.transitions.size()) + " want " +
                   std::to_string(fixture.expected_symmetries.size()));
  const std::size_t rows = std::min(analysis.transitions.size(),
                                    fixture.expected_symmetries.size());
  for (std::size_t i = 0; i < rows; ++i) {
    const auto got = canonicalStrings(analysis.transitions[i].symmetries);
    check.expect(got == fixture.expected_symmetries[i],
                 fixture.name + " row " + std::to_string(i + 1) + ": got " +
                     joined(got) + " want " +
                     joined(fixture.expected_symmetries[i]));
  }
  return check;
}

FixtureOutcome checkQuantumFixture(const QuantumFixture& fixture) {
  FixtureOutcome check;
  const Tonality source = Tonality::major(fixture.source_tonic);
  const Tonality target = Tonality::major(fixture.target_tonic);
  const AffineMap modulator = *AffineMap::parse(fixture.modulator);
  const CadentialSet cadence =
      *cadentialSetByLabel(target, fixture.cadence_label);

  const auto result = modulationQuantum(source, target, modulator, cadence);
  check.expect(result.has_value(), fixture.name + ": no quantum found");
  if (!result) return check;

  check.expect(result->quantum.str() == fixture.expected_quantum,
               fixture.name + ": quantum " + result->quantum.str() + " want " +
                   fixture.expected_quantum);
  check.expect(
      result->targetIntersection().str() == fixture.expected_intersection,
      fixture.name + ": intersection " + result->targetIntersection().str() +
          " want " + fixture.expected_intersection);
  check.expect(isRigid(result->targetIntersection()),
               fixture.name + ": intersection is not rigid");
  check.expect(result->alternates.empty(),
               fixture.name + ": minimum quantum is not unique");
  check.expect(result->pivots == fixture.expected_pivots,
               fixture.name + ": pivot degrees differ");
  check.expect(result->source_cover == fixture.expected_source_cover,
               fixture.name + ": source cover differs");

  std::vector<std::string> pivot_names;
  for (int d : result->pivots) {
    pivot_names.push_back(labelChord(target.degreeTriad(d)).name);
  }
  check.expect(pivot_names == fixture.expected_pivot_names,
               fixture.name + ": pivot chords " + joined(pivot_names) +
                   " want " + joined(fixture.expected_pivot_names));

  std::vector<std::string> cadence_names;
  for (int d : cadence.degrees) {
    cadence_names.push_back(labelChord(target.degreeTriad(d)).name);
  }
  check.expect(cadence_names == fixture.expected_cadence_names,
               fixture.name + ": cadence chords " + joined(cadence_names) +
                   " want " + joined(fixture.expected_cadence_names));

  if (fixture.transposition_of) {
    const auto& [base_name, semitones] = *fixture.transposition_of;
    const QuantumFixture* base = findQuantumFixture(base_name);
    check.expect(base != nullptr,
                 fixture.name + ": unknown base fixture " + base_name);
    if (base) {
      const Tonality base_source = Tonality::major(base->source_tonic);
      const Tonality base_target = Tonality::major(base->target_tonic);
      const auto base_result = modulationQuantum(
          base_source, base_target, *AffineMap::parse(base->modulator),
          *cadentialSetByLabel(base_target, base->cadence_label));
      check.expect(base_result.has_value(),
                   fixture.name + ": base fixture has no quantum");
      if (base_result) {
        const ModulationResult transposed =
            transposeModulation(*base_result, PitchClass(semitones));
        check.expect(transposed.quantum == result->quantum &&
                         transposed.modulator == result->modulator &&
                         transposed.pivots == result->pivots &&
                         transposed.source.tonic() == source.tonic() &&
                         transposed.target.tonic() == target.tonic(),
                     fixture.name +
                         ": transposing the base result disagrees with the "
                         "direct solution");
      }
    }
  }
  return check;
}

FixtureOutcome checkDiagramFixture(const DiagramFixture& fixture) {
  FixtureOutcome check;
  const CadenceTransform transform = cadenceTransform(fixture.major_tonic);
  for (std::size_t i = 0; i < 2; ++i) {
    const Triad expected_major =
        *Triad::parse(fixture.expected_major_cadence[i]);
    const Triad expected_minor =
        *Triad::parse(fixture.expected_minor_cadence[i]);
    check.expect(transform.major_cadence[i] == expected_major,
                 fixture.name + ": major cadence chord " +
                     transform.major_cadence[i].name() + " want " +
                     expected_major.name());
    check.expect(transform.minor_cadence[i] == expected_minor,
                 fixture.name + ": minor cadence chord " +
                     transform.minor_cadence[i].name() + " want " +
                     expected_minor.name());
  }
  // The square commutes: T_n then R equals R then T_n from the key triad.
  const Triad key(fixture.major_tonic, Mode::kMajor);
  for (int n : {5, 7}) {
    const TIElement shift{TIElement::Kind::kTransposition, PitchClass(n)};
    const Triad via_top = plrApply(PlrLetter::kR, tiApply(shift, key));
    const Triad via_side = tiApply(shift, plrApply(PlrLetter::kR, key));
    check.expect(via_top == via_side,
                 fixture.name + ": T_" + std::to_string(n) +
                     " square does not commute");
  }
  return check;
}

FixtureOutcome checkPlanFixture(const PlanFixture& fixture) {
  FixtureOutcome check;
  const QuantumFixture* previous = nullptr;
  for (const std::string& step : fixture.steps) {
    const QuantumFixture* quantum = findQuantumFixture(step);
    check.expect(quantum != nullptr,
                 fixture.name + ": unknown step fixture " + step);
    if (!quantum) continue;
    if (previous) {
      check.expect(previous->target_tonic == quantum->source_tonic,
                   fixture.name + ": step " + step +
                       " does not start where the previous step ended");
    }
    previous = quantum;
  }
  if (previous && !fixture.steps.empty()) {
    const QuantumFixture* first = findQuantumFixture(fixture.steps.front());
    if (first) {
      check.expect(previous->target_tonic == first->source_tonic,
                   fixture.name + ": the key plan does not close its cycle");
    }
  }
  return check;
}

FixtureRun runFixtureSuite() {
  const CounterpointWorld world = CounterpointWorld::standard();

  FixtureRun run;
  run.report.kind = ReportKind::kCounterpoint;
  run.report.title = "Fixture suite";
  run.report.columns = {"Fixture", "Checks", "Mismatches"};
  auto detail = nlohmann::ordered_json::array();

  auto record = [&](const std::string& name, const FixtureOutcome& check,
                    const std::vector<std::string>& annotations) {
    run.report.rows.push_back({name, std::to_string(check.checks),
                               std::to_string(check.mismatches)});
    run.total_mismatches += check.mismatches;
    for (const std::string& diff : check.diffs) {
      run.report.annotations.push_back("diff: " + diff);
    }
    nlohmann::ordered_json entry;
    entry["fixture"] = name;
    entry["checks"] = check.checks;
    entry["mismatches"] = check.mismatches;
    entry["diffs"] = check.diffs;
    entry["annotations"] = annotations;
    detail.push_back(entry);
  };

  for (const SequenceFixture& fixture : sequenceFixtures()) {
    record(fixture.name, checkSequenceFixture(world, fixture),
           fixture.annotations);
  }
  for (const QuantumFixture& fixture : quantumFixtures()) {
    record(fixture.name, checkQuantumFixture(fixture), fixture.annotations);
  }
  for (const PlanFixture& fixture : planFixtures()) {
    record(fixture.name, checkPlanFixture(fixture), fixture.annotations);
  }
  for (const DiagramFixture& fixture : diagramFixtures()) {
    record(fixture.name, checkDiagramFixture(fixture), fixture.annotations);
  }

  run.report.metadata.emplace_back(
      "variant", std::string(polarityVariantName(world.variant())));
  run.report.metadata.emplace_back("fixtures",
                                   std::to_string(run.report.rows.size()));
  run.report.metadata.emplace_back("total_mismatches",
                                   std::to_string(run.total_mismatches));
  run.report.detail["fixtures"] = detail;
  return run;
}

}  // namespace musym
