#include "musym/events.h"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "musym/errors.h"
#include "musym/neo_riemannian.h"

namespace musym {
namespace {

struct Line {
  std::size_t number = 0;  // 1-based
  std::string_view text;
};

// Content lines, CRLF-tolerant, with full-line '#' comments and blanks
// dropped. Column numbers reported against the original line text.
std::vector<Line> contentLines(std::string_view text) {
  std::vector<Line> out;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_number;
    std::size_t first = 0;
    while (first < line.size() &&
           std::isspace(static_cast<unsigned char>(line[first])))
      ++first;
    if (first < line.size() && line[first] != '#') {
      out.push_back({line_number, line});
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return out;
}

std::string_view trimField(std::string_view field) {
  while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front())))
    field.remove_prefix(1);
  while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back())))
    field.remove_suffix(1);
  return field;
}

struct Field {
  std::string_view text;
  std::size_t column;  // 1-based column of the raw field start
};

std::vector<Field> splitFields(std::string_view line, char sep) {
  std::vector<Field> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = line.find(sep, pos);
    if (next == std::string_view::npos) next = line.size();
    out.push_back({line.substr(pos, next - pos), pos + 1});
    if (next == line.size()) break;
    pos = next + 1;
  }
  return out;
}

bool parsePlainInt(std::string_view text, long long* out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
    if (i == text.size()) return false;
  }
  long long value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    value = value * 10 + (text[i] - '0');
    if (value > 1'000'000'000) return false;
  }
  *out = negative ? -value : value;
  return true;
}

int parsePitchField(const Line& line, const Field& field) {
  long long value = 0;
  if (!parsePlainInt(trimField(field.text), &value)) {
    throw InputError(line.number, field.column,
                     "expected an integer pitch, got '" +
                         std::string(trimField(field.text)) + "'");
  }
  if (value < 0 || value > 127) {
    throw InputError(line.number, field.column,
                     "pitch out of range 0-127: " + std::to_string(value));
  }
  return static_cast<int>(value);
}

Rational parseOnsetField(const Line& line, const Field& field) {
  auto onset = Rational::parse(trimField(field.text));
  if (!onset) {
    throw InputError(line.number, field.column,
                     "expected a rational onset like 3 or 3/2, got '" +
                         std::string(trimField(field.text)) + "'");
  }
  return *onset;
}

}  // namespace

Rational Rational::of(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  return Rational{num / g, den / g};
}

std::optional<Rational> Rational::parse(std::string_view text) {
  std::size_t slash = text.find('/');
  long long num = 0;
  long long den = 1;
  if (slash == std::string_view::npos) {
    if (!parsePlainInt(text, &num)) return std::nullopt;
  } else {
    if (!parsePlainInt(text.substr(0, slash), &num)) return std::nullopt;
    if (!parsePlainInt(text.substr(slash + 1), &den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return Rational::of(num, den);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

ParsedEvents parseEvents(std::string_view text) {
  const std::vector<Line> lines = contentLines(text);
  if (lines.empty()) {
    throw InputError("input contains no events");
  }
  const std::string_view header = trimField(lines.front().text);

  ParsedEvents out;
  if (header == "onset,lower,upper") {
    out.format = EventFormat::kVoices;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const Line& line = lines[i];
      auto fields = splitFields(line.text, ',');
      if (fields.size() != 3) {
        throw InputError(line.number, 1,
                         "expected onset,lower,upper (3 fields), got " +
                             std::to_string(fields.size()));
      }
      VoiceEvent event;
      event.onset = parseOnsetField(line, fields[0]);
      event.lower_pitch = parsePitchField(line, fields[1]);
      event.upper_pitch = parsePitchField(line, fields[2]);
      if (!out.voices.empty() && event.onset < out.voices.back().onset) {
        throw InputError(line.number, fields[0].column,
                         "onsets must be non-decreasing");
      }
      out.voices.push_back(event);
    }
    return out;
  }

  if (header == "onset,pcs" || header == "onset,pcs,label") {
    out.format = EventFormat::kChords;
    const bool labeled = header == "onset,pcs,label";
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const Line& line = lines[i];
      auto fields = splitFields(line.text, ',');
      if (fields.size() != (labeled ? 3u : 2u)) {
        throw InputError(line.number, 1,
                         "expected " + std::string(labeled ? "3" : "2") +
                             " fields per chord line, got " +
                             std::to_string(fields.size()));
      }
      ChordEvent event;
      event.onset = parseOnsetField(line, fields[0]);
      PcSet pcs;
      for (const Field& part : splitFields(fields[1].text, '|')) {
        long long value = 0;
        std::string_view token = trimField(part.text);
        if (!parsePlainInt(token, &value) || value < 0 || value > 11) {
          throw InputError(line.number, fields[1].column + part.column - 1,
                           "expected a residue 0-11, got '" +
                               std::string(token) + "'");
        }
        pcs.add(PitchClass(static_cast<int>(value)));
      }
      if (pcs.empty()) {
        throw InputError(line.number, fields[1].column,
                         "chord pitch-class set must be nonempty");
      }
      event.pcs = pcs;
      if (labeled) event.label = std::string(trimField(fields[2].text));
      out.chords.push_back(event);
    }
    return out;
  }

  // Headerless interval list, one x+e.y token per line.
  out.format = EventFormat::kIntervals;
  for (const Line& line : lines) {
    std::string_view token = trimField(line.text);
    auto interval = DualNumber::parse(token);
    if (!interval) {
      if (token.find(',') != std::string_view::npos) {
        throw InputError(line.number, 1,
                         "mixed formats: expected an interval like 0+e.7");
      }
      throw InputError(line.number, 1,
                       "expected an interval like 0+e.7, got '" +
                           std::string(token) + "'");
    }
    out.intervals.push_back(*interval);
  }
  return out;
}

std::string renderEvents(const ParsedEvents& events) {
  std::string out;
  switch (events.format) {
    case EventFormat::kVoices:
      out = "onset,lower,upper\n";
      for (const VoiceEvent& e : events.voices) {
        out += e.onset.str() + "," + std::to_string(e.lower_pitch) + "," +
               std::to_string(e.upper_pitch) + "\n";
      }
      break;
    case EventFormat::kChords: {
      const bool labeled =
          std::any_of(events.chords.begin(), events.chords.end(),
                      [](const ChordEvent& e) { return !e.label.empty(); });
      out = labeled ? "onset,pcs,label\n" : "onset,pcs\n";
      for (const ChordEvent& e : events.chords) {
        std::string pcs;
        for (PitchClass pc : e.pcs.values()) {
          if (!pcs.empty()) pcs += '|';
          pcs += std::to_string(pc.value());
        }
        out += e.onset.str() + "," + pcs;
        if (labeled) out += "," + e.label;
        out += "\n";
      }
      break;
    }
    case EventFormat::kIntervals:
      for (const DualNumber& d : events.intervals) out += d.str() + "\n";
      break;
  }
  return out;
}

ExtractionResult extractIntervals(std::span<const VoiceEvent> events) {
  ExtractionResult result;
  const PcSet consonances = Dichotomy::consonances().half();
  for (const VoiceEvent& event : events) {
    if (event.upper_pitch < event.lower_pitch) {
      result.warnings.push_back(
          "event at onset " + event.onset.str() +
          ": upper voice below lower voice; interval reduced mod 12");
    }
    DualNumber interval{PitchClass(event.lower_pitch),
                        PitchClass(event.upper_pitch - event.lower_pitch)};
    if (!result.intervals.empty() &&
        result.intervals.back().interval == interval) {
      continue;  // collapse consecutive duplicates
    }
    result.intervals.push_back(
        {interval, consonances.contains(interval.eps)});
  }
  return result;
}

ChordLabel labelChord(PcSet pcs) {
  ChordLabel label;
  if (auto triad = Triad::fromPitches(pcs)) {
    label.quality = triad->mode() == Mode::kMajor ? ChordLabel::Quality::kMajor
                                                  : ChordLabel::Quality::kMinor;
    label.name = triad->name();
  } else {
    // Diminished triads: {r, r+3, r+6}.
    for (int r = 0; r < 12; ++r) {
      PcSet dim;
      dim.add(PitchClass(r));
      dim.add(PitchClass(r + 3));
      dim.add(PitchClass(r + 6));
      if (dim == pcs) {
        label.quality = ChordLabel::Quality::kDiminished;
        std::string name(pitchName(PitchClass(r)));
        for (char& c : name)
          c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        label.name = name + "°";
        break;
      }
    }
  }
  if (!pcs.empty()) {
    for (int tonic = 0; tonic < 12; ++tonic) {
      const Tonality t = Tonality::major(PitchClass(tonic));
      for (int d = 0; d < 7; ++d) {
        if (pcs.isSubsetOf(t.degreeTriad(d))) label.degrees.push_back({t, d});
      }
    }
  }
  return label;
}

}  // namespace musym
