// Test-only brute-force reference implementations. These deliberately use
// plain integers and std::set with no precomputation or bitmask machinery,
// so they stay independent of the library code paths they check.
#pragma once

#include <set>
#include <utility>
#include <vector>

namespace musym::testing {

using Point = std::pair<int, int>;  // (cantus, interval)

struct OracleAffine {
  int u = 1;
  int t = 0;
  friend auto operator<=>(const OracleAffine&, const OracleAffine&) = default;
};

std::vector<OracleAffine> oracleAffineMaps();
int oracleApply(const OracleAffine& m, int x);
std::set<int> oracleApply(const OracleAffine& m, const std::set<int>& s);
std::vector<OracleAffine> oracleStabilizer(const std::set<int>& s);
bool oracleRigid(const std::set<int>& s);
std::vector<OracleAffine> oraclePolarities(const std::set<int>& half);

struct OracleH {
  int u = 1;
  int v = 0;
  int t = 0;
  friend auto operator<=>(const OracleH&, const OracleH&) = default;
};

std::vector<OracleH> oracleHElements();
Point oracleHApply(const OracleH& g, const Point& p);
std::set<Point> oracleImage(const OracleH& g, const std::set<Point>& s);
std::set<int> oracleConsonances();
std::set<Point> oracleConsPlane();
std::set<Point> oracleFullPlane();

/// Counterpoint symmetries in the frame where the cantus sits at 0
/// (the table-calibrated localized semantics).
std::vector<OracleH> oracleCptSymsLocal(int interval);
/// The literal absolute-coordinate reading.
std::vector<OracleH> oracleCptSymsGlobal(const Point& xi);
std::set<Point> oracleSuccessorsLocal(const Point& xi);

std::set<int> oracleScale(int tonic);
std::set<int> oracleDegreeTriad(int tonic, int degree);

/// All minimum-size subsets M of Z/12Z with m(M) = M, cadence ⊆ M, and
/// M ∩ scale(target) rigid; empty when none exists.
std::vector<std::set<int>> oracleMinimalQuanta(int target_tonic,
                                               const OracleAffine& m,
                                               const std::set<int>& cadence);

}  // namespace musym::testing
