#include "musym/pitch.h"

#include <array>
#include <bit>
#include <cctype>

namespace musym {
namespace {

constexpr std::array<std::string_view, 12> kSharpNames = {
    "C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"};

// Natural-letter residues; accidentals offset from these.
constexpr int kLetterResidue[7] = {9, 11, 0, 2, 4, 5, 7};  // A..G

bool parseInt(std::string_view text, int* out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
    if (i == text.size()) return false;
  }
  long value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    value = value * 10 + (text[i] - '0');
    if (value > 1000000) return false;
  }
  *out = static_cast<int>(negative ? -value : value);
  return true;
}

}  // namespace

PcSet PcSet::of(std::initializer_list<int> values) {
  PcSet s;
  for (int v : values) s.add(PitchClass(v));
  return s;
}

int PcSet::size() const { return std::popcount(bits_); }

std::vector<PitchClass> PcSet::values() const {
  std::vector<PitchClass> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v = 0; v < PitchClass::kModulus; ++v) {
    if (contains(PitchClass(v))) out.push_back(PitchClass(v));
  }
  return out;
}

std::string PcSet::str() const {
  std::string out;
  for (PitchClass pc : values()) {
    if (!out.empty()) out += ',';
    out += std::to_string(pc.value());
  }
  return out;
}

std::optional<PcSet> PcSet::parse(std::string_view text) {
  PcSet s;
  std::size_t pos = 0;
  // Leading/trailing whitespace around the whole form is tolerated.
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (pos == end) return s;  // empty set
  while (pos < end) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos || comma > end) comma = end;
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
      token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.remove_suffix(1);
    int value = 0;
    if (!parseInt(token, &value) || value < 0 || value > 11) return std::nullopt;
    s.add(PitchClass(value));
    pos = comma + 1;
    if (comma == end) break;
  }
  return s;
}

std::string_view pitchName(PitchClass pc) {
  return kSharpNames[static_cast<std::size_t>(pc.value())];
}

std::optional<PitchClass> parsePitchName(std::string_view name) {
  if (name.empty() || name.size() > 2) return std::nullopt;
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  if (letter < 'A' || letter > 'G') return std::nullopt;
  int residue = kLetterResidue[letter - 'A'];
  if (name.size() == 2) {
    if (name[1] == '#') {
      residue += 1;
    } else if (name[1] == 'b') {
      residue -= 1;
    } else {
      return std::nullopt;
    }
  }
  return PitchClass(residue);
}

}  // namespace musym
