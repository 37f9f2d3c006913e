#pragma once

#include <bitset>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "musym/pitch.h"

namespace musym {

/// @brief A dual number base + ε.eps over Z/12Z, with ε² = 0.
///
/// As a counterpoint interval, base is the cantus firmus pitch class and
/// eps the interval of the discantus above it.
struct DualNumber {
  PitchClass base;
  PitchClass eps;

  friend bool operator==(const DualNumber&, const DualNumber&) = default;
  friend auto operator<=>(const DualNumber& a, const DualNumber& b) {
    if (auto c = a.base <=> b.base; c != 0) return c;
    return a.eps <=> b.eps;
  }

  /// Text form "<base>+e.<eps>", e.g. "0+e.7".
  std::string str() const;
  static std::optional<DualNumber> parse(std::string_view text);
};

DualNumber dualAdd(DualNumber p, DualNumber q);
/// (a+ε.b)(c+ε.d) = ac + ε.(ad+bc).
DualNumber dualMul(DualNumber p, DualNumber q);

/// @brief An affine symmetry of the dual plane:
///   (x + ε.y) -> (u·x + w) + ε.(v·x + u·y + t)
/// with scale u + ε.v (u a unit) and shift w + ε.t.
///
/// The subgroup H consists of the symmetries with no cantus translation
/// (w = 0), written e^{ε.t}∘(u+ε.v); all counterpoint searches run over H.
class DualSymmetry {
 public:
  constexpr DualSymmetry() = default;

  /// @throws std::invalid_argument if scale_u is not a unit mod 12.
  DualSymmetry(int scale_u, int scale_v, int cantus_shift, int eps_shift);

  /// H element e^{ε.t}∘(u+ε.v).
  static DualSymmetry h(int eps_shift, int scale_u, int scale_v) {
    return DualSymmetry(scale_u, scale_v, 0, eps_shift);
  }
  static DualSymmetry identity() { return DualSymmetry(); }

  PitchClass scaleU() const { return scale_u_; }
  PitchClass scaleV() const { return scale_v_; }
  PitchClass cantusShift() const { return cantus_shift_; }
  PitchClass epsShift() const { return eps_shift_; }
  bool inH() const { return cantus_shift_.value() == 0; }

  DualNumber apply(DualNumber xi) const;

  /// compose(a, b) acts as a∘b (b first).
  static DualSymmetry compose(const DualSymmetry& a, const DualSymmetry& b);
  DualSymmetry inverse() const;

  friend bool operator==(const DualSymmetry&, const DualSymmetry&) = default;
  /// Ordering by (eps shift, scale u, scale v, cantus shift); H sets display
  /// in this order.
  friend auto operator<=>(const DualSymmetry& a, const DualSymmetry& b) {
    if (auto c = a.eps_shift_ <=> b.eps_shift_; c != 0) return c;
    if (auto c = a.scale_u_ <=> b.scale_u_; c != 0) return c;
    if (auto c = a.scale_v_ <=> b.scale_v_; c != 0) return c;
    return a.cantus_shift_ <=> b.cantus_shift_;
  }

  /// Canonical text form for H elements: "e[6]*(7+6e)". A symmetry with a
  /// cantus translation prints as "e[w+te]*(u+ve)".
  std::string str() const;
  /// Display form: "e^{ε.6}∘(7+ε.6)", or "e^{ε.0}∘7" when v = 0.
  std::string pretty() const;
  /// Parses the canonical H form; "(u)" may stand for "(u+0e)".
  static std::optional<DualSymmetry> parse(std::string_view text);

  /// The 576 elements of H, ordered by (eps shift, scale u, scale v).
  static const std::vector<DualSymmetry>& subgroupH();

 private:
  PitchClass scale_u_{1};
  PitchClass scale_v_{0};
  PitchClass cantus_shift_{0};
  PitchClass eps_shift_{0};
};

/// @brief A subset of the 144-element dual plane as a membership mask.
/// Exhaustive intersections dominate the counterpoint search, so set algebra
/// must be exact and cheap.
class DualSet {
 public:
  DualSet() = default;

  /// {x + ε.k : x ∈ Z/12Z, k ∈ intervals}; e.g. cylinder(K) = K[ε].
  static DualSet cylinder(PcSet intervals);

  bool contains(DualNumber d) const { return bits_.test(index(d)); }
  void add(DualNumber d) { bits_.set(index(d)); }

  int size() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }
  DualSet complement() const;
  bool isSubsetOf(const DualSet& other) const { return (bits_ & ~other.bits_).none(); }

  friend DualSet operator&(const DualSet& a, const DualSet& b);
  friend DualSet operator|(const DualSet& a, const DualSet& b);
  friend bool operator==(const DualSet&, const DualSet&) = default;

  /// Elementwise image; a bijection on the plane, so |image| = |*this|.
  DualSet imageUnder(const DualSymmetry& g) const;
  /// Shifts every element's cantus coordinate by delta.
  DualSet translatedBy(PitchClass delta) const;

  /// Members ordered by (base, eps).
  std::vector<DualNumber> values() const;

  /// Members in the eps fiber over the given cantus.
  PcSet intervalsAt(PitchClass cantus) const;

 private:
  static std::size_t index(DualNumber d) {
    return static_cast<std::size_t>(d.base.value()) * 12 + d.eps.value();
  }

  std::bitset<144> bits_;
};

}  // namespace musym
