#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "musym/pitch.h"

namespace musym {

/// @brief An affine symmetry of Z/12Z: x -> scale*x + shift, written e^t*u.
///
/// The scale must be a unit mod 12 (one of 1, 5, 7, 11), so every AffineMap
/// is a bijection. There are 48 of them; they form the ambient group for
/// polarities, rigidity checks, and modulators.
class AffineMap {
 public:
  /// Identity map e^0*1.
  constexpr AffineMap() = default;

  /// @throws std::invalid_argument if scale is not a unit mod 12.
  AffineMap(int scale, int shift);

  static AffineMap identity() { return AffineMap(); }
  /// T_n: x -> x + n.
  static AffineMap transpose(PitchClass n) { return AffineMap(1, n.value()); }
  /// I_n: x -> -x + n.
  static AffineMap inversion(PitchClass n) { return AffineMap(11, n.value()); }

  PitchClass scale() const { return scale_; }
  PitchClass shift() const { return shift_; }

  PitchClass apply(PitchClass x) const { return scale_ * x + shift_; }
  PcSet apply(PcSet s) const;

  /// compose(a, b) acts as a∘b: b first, then a.
  static AffineMap compose(const AffineMap& a, const AffineMap& b);
  AffineMap inverse() const;

  bool isIdentity() const { return scale_.value() == 1 && shift_.value() == 0; }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
  /// Ordering by (shift, scale); fixes display order of map sets.
  friend auto operator<=>(const AffineMap& a, const AffineMap& b) {
    if (auto c = a.shift_ <=> b.shift_; c != 0) return c;
    return a.scale_ <=> b.scale_;
  }

  /// Canonical text form "e6*11". parse() also accepts the alias "e6*-1"
  /// (any integer congruent to a unit is reduced mod 12).
  std::string str() const;
  /// Display form, e.g. "e^6·-1" for scale 11, "e^2·5" otherwise.
  std::string pretty() const;
  static std::optional<AffineMap> parse(std::string_view text);

  /// All 48 maps, ordered by (shift, scale).
  static const std::array<AffineMap, 48>& all();

 private:
  PitchClass scale_{1};
  PitchClass shift_{0};
};

/// Every map g among the 48 with g(s) = s setwise. Always contains the
/// identity.
std::vector<AffineMap> stabilizer(PcSet s);

/// True iff the only symmetry of s is the identity.
bool isRigid(PcSet s);

/// @brief A 6/6 partition of Z/12Z, oriented: the stored half is distinguished
/// from its complement.
class Dichotomy {
 public:
  /// @throws std::invalid_argument unless half has exactly 6 elements.
  explicit Dichotomy(PcSet half);

  const PcSet& half() const { return half_; }
  PcSet complement() const { return half_.complement(); }

  /// The consonance/dissonance dichotomy (K/D) with K = {0,3,4,7,8,9}.
  static const Dichotomy& consonances();

  friend bool operator==(const Dichotomy&, const Dichotomy&) = default;

 private:
  PcSet half_;
};

/// All maps g with g(half) = complement. No involution assumption.
std::vector<AffineMap> polarities(const Dichotomy& d);

/// True iff the dichotomy admits exactly one polarity.
bool isStrongDichotomy(const Dichotomy& d);

}  // namespace musym
