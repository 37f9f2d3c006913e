#include "musym/dual.h"

#include <cctype>
#include <stdexcept>

namespace musym {
namespace {

bool isUnit(int value) {
  int r = ((value % 12) + 12) % 12;
  return r == 1 || r == 5 || r == 7 || r == 11;
}

bool parseSmallInt(std::string_view text, int* out) {
  if (text.empty() || text.size() > 4) return false;
  int value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    value = value * 10 + (c - '0');
  }
  *out = value;
  return true;
}

std::string_view trimmed(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

}  // namespace

std::string DualNumber::str() const {
  return std::to_string(base.value()) + "+e." + std::to_string(eps.value());
}

std::optional<DualNumber> DualNumber::parse(std::string_view text) {
  text = trimmed(text);
  std::size_t plus = text.find("+e.");
  if (plus == std::string_view::npos) return std::nullopt;
  int base = 0;
  int eps = 0;
  if (!parseSmallInt(text.substr(0, plus), &base)) return std::nullopt;
  if (!parseSmallInt(text.substr(plus + 3), &eps)) return std::nullopt;
  if (base > 11 || eps > 11) return std::nullopt;
  return DualNumber{PitchClass(base), PitchClass(eps)};
}

DualNumber dualAdd(DualNumber p, DualNumber q) {
  return {p.base + q.base, p.eps + q.eps};
}

DualNumber dualMul(DualNumber p, DualNumber q) {
  return {p.base * q.base, p.base * q.eps + p.eps * q.base};
}

DualSymmetry::DualSymmetry(int scale_u, int scale_v, int cantus_shift,
                           int eps_shift)
    : scale_u_(scale_u),
      scale_v_(scale_v),
      cantus_shift_(cantus_shift),
      eps_shift_(eps_shift) {
  if (!isUnit(scale_u)) {
    throw std::invalid_argument(
        "dual symmetry scale must have unit real part, got " +
        std::to_string(scale_u));
  }
}

DualNumber DualSymmetry::apply(DualNumber xi) const {
  return {scale_u_ * xi.base + cantus_shift_,
          scale_v_ * xi.base + scale_u_ * xi.eps + eps_shift_};
}

DualSymmetry DualSymmetry::compose(const DualSymmetry& a,
                                   const DualSymmetry& b) {
  // scale: (ua+ε.va)(ub+ε.vb); shift: (ua+ε.va)(wb+ε.tb) + (wa+ε.ta)
  DualNumber scale = dualMul({a.scale_u_, a.scale_v_}, {b.scale_u_, b.scale_v_});
  DualNumber shift = dualAdd(
      dualMul({a.scale_u_, a.scale_v_}, {b.cantus_shift_, b.eps_shift_}),
      {a.cantus_shift_, a.eps_shift_});
  return DualSymmetry(scale.base.value(), scale.eps.value(),
                      shift.base.value(), shift.eps.value());
}

DualSymmetry DualSymmetry::inverse() const {
  // (u+ε.v)^-1 = u^-1 - ε.(u^-1 v u^-1); units mod 12 are self-inverse.
  PitchClass uinv = scale_u_;
  PitchClass vinv = -(uinv * scale_v_ * uinv);
  DualNumber shift_inv = dualMul({uinv, vinv}, {-cantus_shift_, -eps_shift_});
  return DualSymmetry(uinv.value(), vinv.value(), shift_inv.base.value(),
                      shift_inv.eps.value());
}

std::string DualSymmetry::str() const {
  std::string shift = inH() ? std::to_string(eps_shift_.value())
                            : std::to_string(cantus_shift_.value()) + "+" +
                                  std::to_string(eps_shift_.value()) + "e";
  return "e[" + shift + "]*(" + std::to_string(scale_u_.value()) + "+" +
         std::to_string(scale_v_.value()) + "e)";
}

std::string DualSymmetry::pretty() const {
  std::string scale =
      scale_v_.value() == 0
          ? std::to_string(scale_u_.value())
          : "(" + std::to_string(scale_u_.value()) + "+ε." +
                std::to_string(scale_v_.value()) + ")";
  std::string shift =
      inH() ? "ε." + std::to_string(eps_shift_.value())
            : std::to_string(cantus_shift_.value()) + "+ε." +
                  std::to_string(eps_shift_.value());
  return "e^{" + shift + "}∘" + scale;
}

std::optional<DualSymmetry> DualSymmetry::parse(std::string_view text) {
  text = trimmed(text);
  if (text.size() < 7 || text.substr(0, 2) != "e[") return std::nullopt;
  std::size_t close = text.find(']');
  if (close == std::string_view::npos) return std::nullopt;
  int eps_shift = 0;
  if (!parseSmallInt(text.substr(2, close - 2), &eps_shift) || eps_shift > 11)
    return std::nullopt;
  std::string_view rest = text.substr(close + 1);
  if (rest.size() < 4 || rest.substr(0, 2) != "*(" || rest.back() != ')')
    return std::nullopt;
  std::string_view scale = rest.substr(2, rest.size() - 3);
  int u = 0;
  int v = 0;
  std::size_t plus = scale.find('+');
  if (plus == std::string_view::npos) {
    if (!parseSmallInt(scale, &u)) return std::nullopt;
  } else {
    std::string_view vpart = scale.substr(plus + 1);
    if (vpart.empty() || vpart.back() != 'e') return std::nullopt;
    if (!parseSmallInt(scale.substr(0, plus), &u)) return std::nullopt;
    if (!parseSmallInt(vpart.substr(0, vpart.size() - 1), &v)) return std::nullopt;
  }
  if (u > 11 || v > 11 || !isUnit(u)) return std::nullopt;
  return DualSymmetry::h(eps_shift, u, v);
}

const std::vector<DualSymmetry>& DualSymmetry::subgroupH() {
  static const std::vector<DualSymmetry> elements = [] {
    std::vector<DualSymmetry> out;
    out.reserve(576);
    for (int t = 0; t < 12; ++t) {
      for (int u : {1, 5, 7, 11}) {
        for (int v = 0; v < 12; ++v) out.push_back(DualSymmetry::h(t, u, v));
      }
    }
    return out;
  }();
  return elements;
}

DualSet DualSet::cylinder(PcSet intervals) {
  DualSet out;
  for (int x = 0; x < 12; ++x) {
    for (PitchClass k : intervals.values()) {
      out.add({PitchClass(x), k});
    }
  }
  return out;
}

DualSet DualSet::complement() const {
  DualSet out;
  out.bits_ = ~bits_;
  return out;
}

DualSet operator&(const DualSet& a, const DualSet& b) {
  DualSet out;
  out.bits_ = a.bits_ & b.bits_;
  return out;
}

DualSet operator|(const DualSet& a, const DualSet& b) {
  DualSet out;
  out.bits_ = a.bits_ | b.bits_;
  return out;
}

DualSet DualSet::imageUnder(const DualSymmetry& g) const {
  DualSet out;
  for (int x = 0; x < 12; ++x) {
    for (int y = 0; y < 12; ++y) {
      DualNumber d{PitchClass(x), PitchClass(y)};
      if (contains(d)) out.add(g.apply(d));
    }
  }
  return out;
}

DualSet DualSet::translatedBy(PitchClass delta) const {
  DualSet out;
  for (int x = 0; x < 12; ++x) {
    for (int y = 0; y < 12; ++y) {
      DualNumber d{PitchClass(x), PitchClass(y)};
      if (contains(d)) out.add({d.base + delta, d.eps});
    }
  }
  return out;
}

std::vector<DualNumber> DualSet::values() const {
  std::vector<DualNumber> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int x = 0; x < 12; ++x) {
    for (int y = 0; y < 12; ++y) {
      DualNumber d{PitchClass(x), PitchClass(y)};
      if (contains(d)) out.push_back(d);
    }
  }
  return out;
}

PcSet DualSet::intervalsAt(PitchClass cantus) const {
  PcSet out;
  for (int y = 0; y < 12; ++y) {
    if (contains({cantus, PitchClass(y)})) out.add(PitchClass(y));
  }
  return out;
}

}  // namespace musym
