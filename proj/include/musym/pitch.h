#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace musym {

/// @brief A residue class mod 12. All arithmetic wraps.
class PitchClass {
 public:
  static constexpr int kModulus = 12;

  constexpr PitchClass() = default;
  constexpr explicit PitchClass(int value) : value_(normalize(value)) {}

  constexpr int value() const { return value_; }

  constexpr PitchClass operator+(PitchClass other) const {
    return PitchClass(value_ + other.value_);
  }
  constexpr PitchClass operator-(PitchClass other) const {
    return PitchClass(value_ - other.value_);
  }
  constexpr PitchClass operator*(PitchClass other) const {
    return PitchClass(value_ * other.value_);
  }
  constexpr PitchClass operator-() const { return PitchClass(-value_); }

  auto operator<=>(const PitchClass&) const = default;

 private:
  static constexpr std::uint8_t normalize(int value) {
    int r = value % kModulus;
    if (r < 0) r += kModulus;
    return static_cast<std::uint8_t>(r);
  }

  std::uint8_t value_ = 0;
};

/// @brief A set of pitch classes, stored as a 12-bit membership mask.
class PcSet {
 public:
  constexpr PcSet() = default;

  static constexpr PcSet fromBits(std::uint16_t bits) {
    PcSet s;
    s.bits_ = static_cast<std::uint16_t>(bits & 0x0fff);
    return s;
  }
  static PcSet of(std::initializer_list<int> values);
  static constexpr PcSet full() { return fromBits(0x0fff); }

  constexpr std::uint16_t bits() const { return bits_; }
  bool contains(PitchClass pc) const { return (bits_ >> pc.value()) & 1; }
  void add(PitchClass pc) { bits_ |= static_cast<std::uint16_t>(1u << pc.value()); }
  void remove(PitchClass pc) { bits_ &= static_cast<std::uint16_t>(~(1u << pc.value())); }

  int size() const;
  bool empty() const { return bits_ == 0; }
  constexpr PcSet complement() const { return fromBits(static_cast<std::uint16_t>(~bits_)); }
  bool isSubsetOf(const PcSet& other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr PcSet operator&(PcSet a, PcSet b) { return fromBits(a.bits_ & b.bits_); }
  friend constexpr PcSet operator|(PcSet a, PcSet b) { return fromBits(a.bits_ | b.bits_); }
  friend constexpr bool operator==(PcSet a, PcSet b) { return a.bits_ == b.bits_; }

  /// Members in ascending residue order.
  std::vector<PitchClass> values() const;

  /// Canonical text form: comma-separated ascending residues, e.g. "0,3,4,7,8,9".
  std::string str() const;
  static std::optional<PcSet> parse(std::string_view text);

 private:
  std::uint16_t bits_ = 0;
};

/// Note-name helpers. Canonical output spelling uses sharps (C, C#, D, ...).
/// Input accepts sharps and flats, e.g. "Eb" and "D#" both map to 3.
std::string_view pitchName(PitchClass pc);
std::optional<PitchClass> parsePitchName(std::string_view name);

}  // namespace musym
