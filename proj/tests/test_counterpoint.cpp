#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "musym/counterpoint.h"
#include "oracle.h"

using namespace musym;
namespace mt = musym::testing;

namespace {

DualNumber dn(int base, int eps) { return {PitchClass(base), PitchClass(eps)}; }

std::vector<std::string> names(const std::vector<DualSymmetry>& symmetries) {
  std::vector<std::string> out;
  for (const DualSymmetry& g : symmetries) out.push_back(g.str());
  return out;
}

const CounterpointWorld& defaultWorld() {
  static const CounterpointWorld world = CounterpointWorld::standard();
  return world;
}

// The per-interval symmetry sets frozen from the brute-force oracle; these
// are exactly the sets the published succession tables draw from.
const std::map<int, std::vector<std::string>>& frozenSymmetrySets() {
  static const std::map<int, std::vector<std::string>> sets = {
      {0, {"e[6]*(1+6e)", "e[6]*(7+6e)", "e[11]*(11+0e)", "e[11]*(11+4e)",
           "e[11]*(11+8e)"}},
      {3, {"e[8]*(5+4e)", "e[8]*(5+8e)"}},
      {4, {"e[6]*(1+6e)", "e[6]*(7+6e)"}},
      {7, {"e[0]*(7+0e)"}},
      {8, {"e[3]*(7+0e)", "e[3]*(7+4e)", "e[3]*(7+8e)", "e[6]*(1+6e)",
           "e[6]*(7+6e)"}},
      {9, {"e[8]*(5+4e)", "e[8]*(5+8e)"}},
  };
  return sets;
}

}  // namespace

TEST_CASE("standard world validates its induced polarity") {
  CHECK_NOTHROW(CounterpointWorld::standard());
  // A symmetry that fixes the consonant cylinder is not a polarity.
  CHECK_THROWS_AS(CounterpointWorld(Dichotomy::consonances(),
                                    DualSymmetry::identity(),
                                    PolarityVariant::kLocalized),
                  std::invalid_argument);
}

TEST_CASE("dissonant inputs are rejected") {
  CHECK_THROWS_AS(defaultWorld().counterpointSymmetries(dn(0, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(defaultWorld().admissibleSuccessors(dn(3, 6)),
                  std::invalid_argument);
  CHECK_THROWS_AS(defaultWorld().transitionSymmetries(dn(0, 0), dn(0, 2)),
                  std::invalid_argument);
}

TEST_CASE("symmetry sets match the frozen oracle values at every cantus") {
  for (const auto& [interval, expected] : frozenSymmetrySets()) {
    for (int cantus = 0; cantus < 12; ++cantus) {
      CHECK(names(defaultWorld().counterpointSymmetries(dn(cantus, interval))) ==
            expected);
    }
  }
}

TEST_CASE("symmetry sets recompute identically through the plain oracle") {
  for (int interval : {0, 3, 4, 7, 8, 9}) {
    const auto oracle = mt::oracleCptSymsLocal(interval);
    const auto lib = defaultWorld().counterpointSymmetries(dn(0, interval));
    REQUIRE(lib.size() == oracle.size());
    for (std::size_t i = 0; i < lib.size(); ++i) {
      CHECK(lib[i].scaleU().value() == oracle[i].u);
      CHECK(lib[i].scaleV().value() == oracle[i].v);
      CHECK(lib[i].epsShift().value() == oracle[i].t);
    }
  }
}

TEST_CASE("the global variant agrees with its oracle and with localized at cantus 0") {
  const CounterpointWorld global =
      CounterpointWorld::standard(PolarityVariant::kGlobal);
  for (int interval : {0, 3, 4, 7, 8, 9}) {
    CHECK(names(global.counterpointSymmetries(dn(0, interval))) ==
          names(defaultWorld().counterpointSymmetries(dn(0, interval))));
  }
  for (int cantus : {0, 5, 11}) {
    for (int interval : {0, 4, 7}) {
      const auto oracle = mt::oracleCptSymsGlobal({cantus, interval});
      const auto lib = global.counterpointSymmetries(dn(cantus, interval));
      REQUIRE(lib.size() == oracle.size());
      for (std::size_t i = 0; i < lib.size(); ++i) {
        CHECK(lib[i].scaleU().value() == oracle[i].u);
        CHECK(lib[i].scaleV().value() == oracle[i].v);
        CHECK(lib[i].epsShift().value() == oracle[i].t);
      }
    }
  }
}

TEST_CASE("returned symmetries satisfy the three conditions literally") {
  // Independent recheck with plain sets, against the localized reading:
  // translate the cantus to 0 and verify conditions (1) and (2) there.
  const std::set<mt::Point> cons = mt::oracleConsPlane();
  const std::set<mt::Point> plane = mt::oracleFullPlane();
  for (int interval : {0, 3, 4, 7, 8, 9}) {
    const auto symmetries = defaultWorld().counterpointSymmetries(dn(5, interval));
    std::set<int> overlaps;
    for (const DualSymmetry& g : symmetries) {
      const mt::OracleH og{g.scaleU().value(), g.scaleV().value(),
                           g.epsShift().value()};
      const std::set<mt::Point> g_cons = mt::oracleImage(og, cons);
      CHECK(!g_cons.count({0, interval}));  // condition (1)
      std::set<mt::Point> g_diss;
      for (const mt::Point& p : plane) {
        if (!g_cons.count(p)) g_diss.insert(p);
      }
      CHECK(mt::oracleImage({5, 0, 2}, g_cons) == g_diss);  // condition (2)
      std::set<mt::Point> meet;
      for (const mt::Point& p : g_cons) {
        if (cons.count(p)) meet.insert(p);
      }
      overlaps.insert(static_cast<int>(meet.size()));
    }
    CHECK(overlaps.size() == 1);  // condition (3): all maximizers tie
  }
}

TEST_CASE("transition examples from the succession tables") {
  const auto row1 = defaultWorld().transitionSymmetries(dn(0, 7), dn(0, 4));
  CHECK(names(row1.symmetries) == std::vector<std::string>{"e[0]*(7+0e)"});
  CHECK(row1.cardinality() == 1);

  const auto laudate1 = defaultWorld().transitionSymmetries(dn(2, 0), dn(2, 9));
  CHECK(names(laudate1.symmetries) ==
        std::vector<std::string>{"e[6]*(1+6e)", "e[6]*(7+6e)"});

  // The cardinality-5 transition of the 10-8 succession.
  const auto wide = defaultWorld().transitionSymmetries(dn(11, 0), dn(9, 3));
  CHECK(names(wide.symmetries) ==
        std::vector<std::string>{"e[6]*(1+6e)", "e[6]*(7+6e)", "e[11]*(11+0e)",
                                 "e[11]*(11+4e)", "e[11]*(11+8e)"});
  CHECK(wide.cardinality() == 5);

  const auto narrow = defaultWorld().transitionSymmetries(dn(9, 3), dn(9, 0));
  CHECK(names(narrow.symmetries) ==
        std::vector<std::string>{"e[8]*(5+4e)", "e[8]*(5+8e)"});
  CHECK(narrow.cardinality() == 2);
}

TEST_CASE("transition sets are symmetry subsets that admit the successor") {
  const PcSet consonances = Dichotomy::consonances().half();
  for (int fx = 0; fx < 12; ++fx) {
    for (PitchClass fk : consonances.values()) {
      const auto syms =
          names(defaultWorld().counterpointSymmetries(dn(fx, fk.value())));
      const std::set<std::string> sym_set(syms.begin(), syms.end());
      const DualSet successors =
          defaultWorld().admissibleSuccessors(dn(fx, fk.value()));
      for (int tx = 0; tx < 12; ++tx) {
        for (PitchClass tk : consonances.values()) {
          const auto t = defaultWorld().transitionSymmetries(
              dn(fx, fk.value()), dn(tx, tk.value()));
          // In the local frame at the source cantus the successor must lie
          // in g(K[eps]) for every listed g.
          const DualNumber shifted = dn(tx - fx, tk.value());
          for (const DualSymmetry& g : t.symmetries) {
            CHECK(sym_set.count(g.str()) == 1);
            CHECK(consonances.contains(g.inverse().apply(shifted).eps));
          }
          CHECK((t.cardinality() > 0) ==
                successors.contains(dn(tx, tk.value())));
        }
      }
    }
  }
}

TEST_CASE("admissible successors: frozen values and containment") {
  const DualSet cons = defaultWorld().consonantPlane();

  const DualSet s07 = defaultWorld().admissibleSuccessors(dn(0, 7));
  CHECK(s07.contains(dn(0, 4)));
  CHECK(s07.isSubsetOf(cons));

  CHECK(defaultWorld().admissibleSuccessors(dn(0, 0)).size() == 70);

  // Exact set for 0+e.3, frozen from the brute-force oracle.
  const std::set<mt::Point> expected = mt::oracleSuccessorsLocal({0, 3});
  CHECK(expected.size() == 64);
  const DualSet s03 = defaultWorld().admissibleSuccessors(dn(0, 3));
  CHECK(s03.size() == 64);
  for (const mt::Point& p : expected) {
    CHECK(s03.contains(dn(p.first, p.second)));
  }
  // A few members pinned literally.
  CHECK(s03.contains(dn(0, 0)));
  CHECK(s03.contains(dn(0, 8)));
  CHECK(!s03.contains(dn(0, 3)));
  CHECK(!s03.contains(dn(0, 9)));
  CHECK(!s03.contains(dn(3, 3)));
  CHECK(!s03.contains(dn(6, 9)));
}

TEST_CASE("sequence analysis covers the first succession") {
  const std::vector<DualNumber> confitebor = {
      dn(0, 7), dn(0, 4), dn(10, 7), dn(10, 4), dn(9, 7),
      dn(9, 3), dn(7, 7), dn(7, 4),  dn(5, 7)};
  const SequenceAnalysis analysis = defaultWorld().analyzeSequence(confitebor);
  REQUIRE(analysis.transitions.size() == 8);
  for (const TransitionAnalysis& t : analysis.transitions) {
    CHECK(t.cardinality() == 1);
  }
  CHECK(analysis.min_cardinality == 1);
  CHECK(analysis.max_cardinality == 1);
  CHECK(analysis.mean_cardinality == doctest::Approx(1.0));
}

TEST_CASE("a single repeated pair equals its transition record") {
  const std::vector<DualNumber> pair = {dn(4, 7), dn(4, 7)};
  const SequenceAnalysis analysis = defaultWorld().analyzeSequence(pair);
  REQUIRE(analysis.transitions.size() == 1);
  const auto direct = defaultWorld().transitionSymmetries(dn(4, 7), dn(4, 7));
  CHECK(names(analysis.transitions[0].symmetries) == names(direct.symmetries));
}

TEST_CASE("sequence errors name the offending index") {
  const std::vector<DualNumber> bad = {dn(0, 7), dn(0, 6), dn(0, 4)};
  CHECK_THROWS_WITH_AS(defaultWorld().analyzeSequence(bad),
                       "sequence interval #2 (0+e.6) is dissonant",
                       std::invalid_argument);
  const std::vector<DualNumber> single = {dn(0, 7)};
  CHECK_THROWS_AS(defaultWorld().analyzeSequence(single), std::invalid_argument);
}

TEST_CASE("successor counts: 72 entries, all at least 42, cantus-invariant") {
  const SuccessorCountReport report = defaultWorld().successorCountReport();
  REQUIRE(report.entries.size() == 72);
  CHECK(report.allMeetBound());
  CHECK(report.min_count == 54);

  // Frozen per-interval counts; under the localized variant they do not
  // depend on the cantus.
  const std::map<int, int> expected = {{0, 70}, {3, 64}, {4, 54},
                                       {7, 60}, {8, 70}, {9, 64}};
  for (const auto& entry : report.entries) {
    CHECK(entry.count == expected.at(entry.interval.eps.value()));
    int total = 0;
    for (int c : entry.by_cantus) total += c;
    CHECK(total == entry.count);
  }
}

TEST_CASE("the global variant also clears the bound") {
  const CounterpointWorld global =
      CounterpointWorld::standard(PolarityVariant::kGlobal);
  const SuccessorCountReport report = global.successorCountReport();
  CHECK(report.allMeetBound());
}

TEST_CASE("a world over a different strong dichotomy behaves structurally") {
  // {1,2,4,7,9,11} is strong with unique polarity e^7*11; lift it to the
  // dual plane and run the same machinery.
  const Dichotomy d(PcSet::of({1, 2, 4, 7, 9, 11}));
  const auto pols = polarities(d);
  REQUIRE(pols.size() == 1);
  CHECK(pols.front() == AffineMap(11, 7));
  const CounterpointWorld world(
      d,
      DualSymmetry::h(pols.front().shift().value(),
                      pols.front().scale().value(), 0),
      PolarityVariant::kLocalized);

  // Successor counts frozen from an exhaustive search over H.
  const std::map<int, int> expected_counts = {{1, 48}, {2, 48}, {4, 66},
                                              {7, 60}, {9, 66}, {11, 48}};
  for (const auto& [interval, count] : expected_counts) {
    const auto syms = world.counterpointSymmetries(dn(0, interval));
    CHECK(!syms.empty());
    CHECK(world.admissibleSuccessors(dn(0, interval)).size() == count);
    CHECK(world.admissibleSuccessors(dn(0, interval))
              .isSubsetOf(world.consonantPlane()));
  }
}

TEST_CASE("variant names round-trip") {
  CHECK(polarityVariantName(PolarityVariant::kGlobal) == "global");
  CHECK(parsePolarityVariant("localized") == PolarityVariant::kLocalized);
  CHECK(!parsePolarityVariant("local").has_value());
}
