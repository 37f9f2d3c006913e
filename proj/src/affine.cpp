#include "musym/affine.h"

#include <cctype>
#include <stdexcept>

namespace musym {
namespace {

bool isUnit(int value) {
  int r = ((value % 12) + 12) % 12;
  return r == 1 || r == 5 || r == 7 || r == 11;
}

bool parseIntToken(std::string_view text, int* out) {
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

AffineMap::AffineMap(int scale, int shift)
    : scale_(scale), shift_(shift) {
  if (!isUnit(scale)) {
    throw std::invalid_argument("affine scale must be a unit mod 12, got " +
                                std::to_string(scale));
  }
}

PcSet AffineMap::apply(PcSet s) const {
  PcSet out;
  for (PitchClass pc : s.values()) out.add(apply(pc));
  return out;
}

AffineMap AffineMap::compose(const AffineMap& a, const AffineMap& b) {
  // a(b(x)) = ua*(ub*x + tb) + ta
  return AffineMap((a.scale_ * b.scale_).value(),
                   (a.scale_ * b.shift_ + a.shift_).value());
}

AffineMap AffineMap::inverse() const {
  // Units mod 12 are self-inverse.
  PitchClass uinv = scale_;
  return AffineMap(uinv.value(), (-(uinv * shift_)).value());
}

std::string AffineMap::str() const {
  return "e" + std::to_string(shift_.value()) + "*" +
         std::to_string(scale_.value());
}

std::string AffineMap::pretty() const {
  std::string u = scale_.value() == 11 ? "-1" : std::to_string(scale_.value());
  return "e^" + std::to_string(shift_.value()) + "·" + u;
}

std::optional<AffineMap> AffineMap::parse(std::string_view text) {
  if (text.empty() || text[0] != 'e') return std::nullopt;
  text.remove_prefix(1);
  std::size_t star = text.find('*');
  if (star == std::string_view::npos) return std::nullopt;
  int shift = 0;
  int scale = 0;
  if (!parseIntToken(text.substr(0, star), &shift)) return std::nullopt;
  if (!parseIntToken(text.substr(star + 1), &scale)) return std::nullopt;
  if (!isUnit(scale)) return std::nullopt;
  return AffineMap(((scale % 12) + 12) % 12, shift);
}

const std::array<AffineMap, 48>& AffineMap::all() {
  static const std::array<AffineMap, 48> maps = [] {
    std::array<AffineMap, 48> out;
    std::size_t i = 0;
    for (int t = 0; t < 12; ++t) {
      for (int u : {1, 5, 7, 11}) out[i++] = AffineMap(u, t);
    }
    return out;
  }();
  return maps;
}

std::vector<AffineMap> stabilizer(PcSet s) {
  std::vector<AffineMap> out;
  for (const AffineMap& g : AffineMap::all()) {
    if (g.apply(s) == s) out.push_back(g);
  }
  return out;
}

bool isRigid(PcSet s) {
  const auto stab = stabilizer(s);
  return stab.size() == 1 && stab.front().isIdentity();
}

Dichotomy::Dichotomy(PcSet half) : half_(half) {
  if (half.size() != 6) {
    throw std::invalid_argument("dichotomy half must have 6 elements, got " +
                                std::to_string(half.size()));
  }
}

const Dichotomy& Dichotomy::consonances() {
  static const Dichotomy k(PcSet::of({0, 3, 4, 7, 8, 9}));
  return k;
}

std::vector<AffineMap> polarities(const Dichotomy& d) {
  const PcSet complement = d.complement();
  std::vector<AffineMap> out;
  for (const AffineMap& g : AffineMap::all()) {
    if (g.apply(d.half()) == complement) out.push_back(g);
  }
  return out;
}

bool isStrongDichotomy(const Dichotomy& d) { return polarities(d).size() == 1; }

}  // namespace musym
