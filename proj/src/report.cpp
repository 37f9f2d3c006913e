#include "musym/report.h"

#include <algorithm>
#include <cstdio>

#include "musym/errors.h"
#include "musym/events.h"

namespace musym {
namespace {

// Code-point count; every character these reports emit is single-width.
std::size_t utf8Length(const std::string& text) {
  std::size_t n = 0;
  for (unsigned char c : text) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::string csvEscape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string formatMean(double mean) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", mean);
  return buffer;
}

std::string symmetrySetCell(const std::vector<DualSymmetry>& symmetries) {
  std::string out = "{";
  for (std::size_t i = 0; i < symmetries.size(); ++i) {
    if (i > 0) out += ", ";
    out += symmetries[i].pretty();
  }
  out += "}";
  return out;
}

nlohmann::ordered_json symmetryJson(const std::vector<DualSymmetry>& symmetries) {
  auto canonical = nlohmann::ordered_json::array();
  auto pretty = nlohmann::ordered_json::array();
  for (const DualSymmetry& g : symmetries) {
    canonical.push_back(g.str());
    pretty.push_back(g.pretty());
  }
  return {{"canonical", canonical}, {"pretty", pretty}};
}

std::string pivotCell(const Tonality& target, const std::vector<int>& pivots) {
  if (pivots.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (i > 0) out += ", ";
    out += romanNumeral(pivots[i]);
    const ChordLabel label = labelChord(target.degreeTriad(pivots[i]));
    if (label.known()) {
      out += "=";
      out += label.name;
    }
  }
  return out;
}

nlohmann::ordered_json degreeListJson(const Tonality& t,
                                      const std::vector<int>& degrees) {
  auto arr = nlohmann::ordered_json::array();
  for (int d : degrees) {
    const ChordLabel label = labelChord(t.degreeTriad(d));
    arr.push_back({{"degree", std::string(romanNumeral(d))},
                   {"chord", label.name},
                   {"pcs", t.degreeTriad(d).str()}});
  }
  return arr;
}

}  // namespace

std::string_view reportKindName(ReportKind kind) {
  switch (kind) {
    case ReportKind::kCounterpoint: return "counterpoint";
    case ReportKind::kModulation: return "modulation";
    case ReportKind::kPlr: return "plr";
    case ReportKind::kVerify: return "verify";
  }
  return "counterpoint";
}

std::string_view reportFormatName(ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: return "json";
    case ReportFormat::kCsv: return "csv";
    case ReportFormat::kMarkdown: return "md";
  }
  return "md";
}

std::optional<ReportFormat> parseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "md" || name == "markdown") return ReportFormat::kMarkdown;
  return std::nullopt;
}

std::string renderReport(const AnalysisReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: {
      nlohmann::ordered_json j;
      j["kind"] = std::string(reportKindName(report.kind));
      j["title"] = report.title;
      auto metadata = nlohmann::ordered_json::object();
      for (const auto& [key, value] : report.metadata) metadata[key] = value;
      j["metadata"] = metadata;
      j["annotations"] = report.annotations;
      j["columns"] = report.columns;
      j["rows"] = report.rows;
      j["detail"] = report.detail;
      return j.dump(2) + "\n";
    }
    case ReportFormat::kCsv: {
      std::string out;
      for (std::size_t i = 0; i < report.columns.size(); ++i) {
        if (i > 0) out += ',';
        out += csvEscape(report.columns[i]);
      }
      out += '\n';
      for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i > 0) out += ',';
          out += csvEscape(row[i]);
        }
        out += '\n';
      }
      return out;
    }
    case ReportFormat::kMarkdown: {
      std::string out;
      if (!report.title.empty()) {
        out += "# " + report.title + "\n\n";
      }
      for (const auto& [key, value] : report.metadata) {
        out += "- " + key + ": " + value + "\n";
      }
      if (!report.metadata.empty()) out += '\n';
      if (!report.columns.empty()) {
        // Cells are padded so the raw text reads as an aligned table.
        std::vector<std::size_t> widths;
        for (const auto& column : report.columns) {
          widths.push_back(utf8Length(column));
        }
        for (const auto& row : report.rows) {
          for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
            widths[i] = std::max(widths[i], utf8Length(row[i]));
          }
        }
        auto emitRow = [&](const std::vector<std::string>& cells) {
          out += '|';
          for (std::size_t i = 0; i < widths.size(); ++i) {
            const std::string& cell = i < cells.size() ? cells[i] : "";
            out += ' ' + cell;
            out += std::string(widths[i] - utf8Length(cell), ' ');
            out += " |";
          }
          out += '\n';
        };
        emitRow(report.columns);
        out += '|';
        for (std::size_t width : widths) {
          out += ' ' + std::string(std::max<std::size_t>(3, width), '-') + " |";
        }
        out += '\n';
        for (const auto& row : report.rows) emitRow(row);
      }
      if (!report.annotations.empty()) {
        out += '\n';
        for (const auto& note : report.annotations) out += "> " + note + "\n";
      }
      return out;
    }
  }
  return {};
}

AnalysisReport reportFromJson(const std::string& json_text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(json_text);
  AnalysisReport report;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "modulation") {
    report.kind = ReportKind::kModulation;
  } else if (kind == "plr") {
    report.kind = ReportKind::kPlr;
  } else if (kind == "verify") {
    report.kind = ReportKind::kVerify;
  } else {
    report.kind = ReportKind::kCounterpoint;
  }
  report.title = j.at("title").get<std::string>();
  for (const auto& [key, value] : j.at("metadata").items()) {
    report.metadata.emplace_back(key, value.get<std::string>());
  }
  report.annotations = j.at("annotations").get<std::vector<std::string>>();
  report.columns = j.at("columns").get<std::vector<std::string>>();
  report.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
  report.detail = j.at("detail");
  return report;
}

AnalysisReport buildSequenceReport(const CounterpointWorld& world,
                                   std::string_view title,
                                   std::span<const DualNumber> sequence) {
  const SequenceAnalysis analysis = world.analyzeSequence(sequence);

  AnalysisReport report;
  report.kind = ReportKind::kCounterpoint;
  report.title = std::string(title);
  std::string sequence_text;
  for (const DualNumber& d : sequence) {
    if (!sequence_text.empty()) sequence_text += ' ';
    sequence_text += d.str();
  }
  report.metadata.emplace_back("variant",
                               std::string(polarityVariantName(world.variant())));
  report.metadata.emplace_back("sequence", sequence_text);
  report.metadata.emplace_back(
      "parsimony", "min=" + std::to_string(analysis.min_cardinality) +
                       " max=" + std::to_string(analysis.max_cardinality) +
                       " mean=" + formatMean(analysis.mean_cardinality));
  report.columns = {"Set of symmetries", "Cardinality"};
  auto transitions = nlohmann::ordered_json::array();
  for (const TransitionAnalysis& t : analysis.transitions) {
    report.rows.push_back(
        {symmetrySetCell(t.symmetries), std::to_string(t.cardinality())});
    nlohmann::ordered_json entry;
    entry["from"] = t.from.str();
    entry["to"] = t.to.str();
    entry["symmetries"] = symmetryJson(t.symmetries);
    entry["cardinality"] = t.cardinality();
    transitions.push_back(entry);
  }
  report.detail["transitions"] = transitions;
  report.detail["parsimony"] = {{"min", analysis.min_cardinality},
                                {"max", analysis.max_cardinality},
                                {"mean", analysis.mean_cardinality}};
  return report;
}

AnalysisReport buildSuccessorReport(const CounterpointWorld& world,
                                    DualNumber interval) {
  const DualSet successors = world.admissibleSuccessors(interval);

  AnalysisReport report;
  report.kind = ReportKind::kCounterpoint;
  report.title = "Admissible successors of " + interval.str();
  report.metadata.emplace_back("variant",
                               std::string(polarityVariantName(world.variant())));
  report.metadata.emplace_back("interval", interval.str());
  report.metadata.emplace_back("count", std::to_string(successors.size()));
  report.columns = {"Cantus", "Intervals"};
  auto list = nlohmann::ordered_json::array();
  for (int cantus = 0; cantus < 12; ++cantus) {
    const PcSet fiber = successors.intervalsAt(PitchClass(cantus));
    report.rows.push_back({std::to_string(cantus), fiber.str()});
  }
  for (const DualNumber& d : successors.values()) list.push_back(d.str());
  report.detail["successors"] = list;
  report.detail["count"] = successors.size();
  return report;
}

AnalysisReport buildTheoremReport(const CounterpointWorld& world) {
  const SuccessorCountReport counts = world.successorCountReport();

  AnalysisReport report;
  report.kind = ReportKind::kCounterpoint;
  report.title = "Admissible-successor counts";
  report.metadata.emplace_back("variant",
                               std::string(polarityVariantName(world.variant())));
  report.metadata.emplace_back("bound",
                               std::to_string(SuccessorCountReport::kBound));
  report.metadata.emplace_back("min_count", std::to_string(counts.min_count));
  report.metadata.emplace_back("all_meet_bound",
                               counts.allMeetBound() ? "yes" : "no");
  report.columns = {"Interval", "Successors", ">= 42"};
  auto entries = nlohmann::ordered_json::array();
  for (const auto& entry : counts.entries) {
    report.rows.push_back(
        {entry.interval.str(), std::to_string(entry.count),
         entry.count >= SuccessorCountReport::kBound ? "yes" : "no"});
    nlohmann::ordered_json e;
    e["interval"] = entry.interval.str();
    e["count"] = entry.count;
    e["by_cantus"] = entry.by_cantus;
    entries.push_back(e);
  }
  report.detail["entries"] = entries;
  return report;
}

AnalysisReport buildModulationReport(
    std::string_view title, std::span<const ModulationSweepEntry> entries) {
  AnalysisReport report;
  report.kind = ReportKind::kModulation;
  report.title = std::string(title);
  report.columns = {"Modulation", "m", "Cadence", "M", "M∩T", "Pivots"};
  auto detail_entries = nlohmann::ordered_json::array();
  for (const ModulationSweepEntry& entry : entries) {
    const std::string modulation =
        entry.source.name() + "→" + entry.target.name();
    nlohmann::ordered_json e;
    e["modulation"] = entry.source.name() + "->" + entry.target.name();
    e["modulator"] = entry.modulator.str();
    e["modulator_pretty"] = entry.modulator.pretty();
    e["cadence"] = entry.cadence.str();
    if (entry.result) {
      const ModulationResult& r = *entry.result;
      report.rows.push_back({modulation, r.modulator.pretty(), r.cadence.str(),
                             r.quantum.str(), r.targetIntersection().str(),
                             pivotCell(r.target, r.pivots)});
      e["quantum"] = r.quantum.str();
      e["intersection"] = r.targetIntersection().str();
      e["intersection_rigid"] = isRigid(r.targetIntersection());
      e["pivots"] = degreeListJson(r.target, r.pivots);
      e["source_cover"] = degreeListJson(r.source, r.source_cover);
      auto alternates = nlohmann::ordered_json::array();
      for (const PcSet& alt : r.alternates) alternates.push_back(alt.str());
      e["alternate_quanta"] = alternates;
    } else {
      report.rows.push_back({modulation, entry.modulator.pretty(),
                             entry.cadence.str(), "-", "-", "none"});
      e["quantum"] = nullptr;
    }
    detail_entries.push_back(e);
  }
  report.detail["entries"] = detail_entries;
  return report;
}

AnalysisReport buildCadenceReport(const Tonality& key) {
  AnalysisReport report;
  report.kind = ReportKind::kModulation;
  report.title = "Cadential sets of " + key.name();
  report.columns = {"Cadence", "Degrees", "Triads"};
  auto entries = nlohmann::ordered_json::array();
  for (const CadentialSet& cadence : cadentialSets(key)) {
    std::string degrees;
    std::string triads;
    for (std::size_t i = 0; i < cadence.degrees.size(); ++i) {
      if (i > 0) {
        degrees += ',';
        triads += ", ";
      }
      degrees += romanNumeral(cadence.degrees[i]);
      const PcSet triad = key.degreeTriad(cadence.degrees[i]);
      const ChordLabel label = labelChord(triad);
      triads += label.name + "={" + triad.str() + "}";
    }
    report.rows.push_back({cadence.label, degrees, triads});
    nlohmann::ordered_json e;
    e["label"] = cadence.label;
    e["degrees"] = degreeListJson(key, cadence.degrees);
    e["notes"] = cadence.notes(key).str();
    entries.push_back(e);
  }
  report.detail["cadences"] = entries;
  return report;
}

AnalysisReport buildWordReport(std::span<const WordToken> word, Triad input,
                               Triad output) {
  AnalysisReport report;
  report.kind = ReportKind::kPlr;
  report.title = "Word application";
  report.columns = {"Input", "Word", "Output"};
  report.rows.push_back({input.name(), wordStr(word), output.name()});
  report.detail["input"] = input.name();
  report.detail["word"] = wordStr(word);
  report.detail["output"] = output.name();
  report.detail["output_pcs"] = output.pitches().str();
  return report;
}

AnalysisReport buildVerifyReport(const GroupVerification& v) {
  AnalysisReport report;
  report.kind = ReportKind::kVerify;
  report.title = "TI/PLR duality verification";
  report.columns = {"Property", "Value"};
  auto yesno = [](bool b) { return std::string(b ? "true" : "false"); };
  report.rows = {
      {"ti_order", std::to_string(v.ti_order)},
      {"plr_order", std::to_string(v.plr_order)},
      {"dual_commute", yesno(v.dual_commute)},
      {"ti_simply_transitive", yesno(v.ti_simply_transitive)},
      {"plr_simply_transitive", yesno(v.plr_simply_transitive)},
      {"isomorphic", yesno(v.isomorphic)},
  };
  report.detail["ti_order"] = v.ti_order;
  report.detail["plr_order"] = v.plr_order;
  report.detail["dual_commute"] = v.dual_commute;
  report.detail["ti_simply_transitive"] = v.ti_simply_transitive;
  report.detail["plr_simply_transitive"] = v.plr_simply_transitive;
  report.detail["isomorphic"] = v.isomorphic;
  report.detail["all_pass"] = v.allPass();
  return report;
}

}  // namespace musym
