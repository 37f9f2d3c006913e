#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "musym/counterpoint.h"
#include "musym/dual.h"
#include "musym/modulation.h"
#include "musym/neo_riemannian.h"

namespace musym {

enum class ReportKind { kCounterpoint, kModulation, kPlr, kVerify };
enum class ReportFormat { kJson, kCsv, kMarkdown };

std::string_view reportKindName(ReportKind kind);
std::string_view reportFormatName(ReportFormat format);
std::optional<ReportFormat> parseReportFormat(std::string_view name);

/// @brief A structured analysis result. The column/row strings drive the
/// CSV and markdown renderings; `detail` carries the lossless payload that
/// the JSON rendering embeds.
struct AnalysisReport {
  ReportKind kind = ReportKind::kCounterpoint;
  std::string title;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> annotations;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();
};

/// Deterministic, byte-stable rendering of a report.
std::string renderReport(const AnalysisReport& report, ReportFormat format);

/// Round-trips the JSON rendering back into a report.
AnalysisReport reportFromJson(const std::string& json_text);

// Builders ------------------------------------------------------------------

/// Succession analysis in the two-column layout "Set of symmetries /
/// Cardinality", one row per transition.
AnalysisReport buildSequenceReport(const CounterpointWorld& world,
                                   std::string_view title,
                                   std::span<const DualNumber> sequence);

/// Admissible successors of one interval, grouped by successor cantus.
AnalysisReport buildSuccessorReport(const CounterpointWorld& world,
                                    DualNumber interval);

/// The 72-consonance successor-count sweep with the >= 42 bound.
AnalysisReport buildTheoremReport(const CounterpointWorld& world);

/// Modulation rows in the summary-table layout: Modulation, m, Cadence, M,
/// M∩T, Pivots. Entries without a quantum render a "none" row.
AnalysisReport buildModulationReport(
    std::string_view title, std::span<const ModulationSweepEntry> entries);

/// The five cadential sets of a key with their triads.
AnalysisReport buildCadenceReport(const Tonality& key);

/// A single word application.
AnalysisReport buildWordReport(std::span<const WordToken> word, Triad input,
                               Triad output);

/// The TI/PLR duality verification record.
AnalysisReport buildVerifyReport(const GroupVerification& v);

}  // namespace musym
