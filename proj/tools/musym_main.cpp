/// @file
/// @brief Command-line interface: counterpoint analysis, modulation quanta,
/// PLR/TI words, and the embedded fixture suite.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "musym/config.h"
#include "musym/counterpoint.h"
#include "musym/errors.h"
#include "musym/events.h"
#include "musym/fixtures.h"
#include "musym/modulation.h"
#include "musym/neo_riemannian.h"
#include "musym/report.h"

namespace {

using namespace musym;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

struct CliOptions {
  std::string config_path;
  std::string format;
};

Config resolveCliConfig(const CliOptions& options) {
  return resolveConfig(options.config_path.empty()
                           ? std::nullopt
                           : std::optional<std::string>(options.config_path));
}

ReportFormat resolveFormat(const CliOptions& options, const Config& config) {
  if (options.format.empty()) return config.default_format;
  auto format = parseReportFormat(options.format);
  if (!format) {
    throw InputError("unknown format '" + options.format +
                     "' (expected json, csv, or md)");
  }
  return *format;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot read file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Tonality parseKeyOption(const std::string& text) {
  auto key = Tonality::parse(text);
  if (!key) {
    throw InputError("unknown key name '" + text + "' (expected C, C#, Db, ...)");
  }
  return *key;
}

std::vector<DualNumber> intervalsFromFile(const std::string& path) {
  const ParsedEvents events = parseEvents(readFile(path));
  switch (events.format) {
    case EventFormat::kIntervals:
      return events.intervals;
    case EventFormat::kVoices: {
      const ExtractionResult extraction = extractIntervals(events.voices);
      for (const std::string& warning : extraction.warnings) {
        std::cerr << "warning: " << warning << "\n";
      }
      std::vector<DualNumber> out;
      out.reserve(extraction.intervals.size());
      for (const ExtractedInterval& e : extraction.intervals) {
        out.push_back(e.interval);
      }
      return out;
    }
    case EventFormat::kChords:
      throw InputError(
          "chord-stream input has no two-voice intervals; counterpoint "
          "analysis needs voice events or an interval list");
  }
  return {};
}

int runCli(int argc, char** argv) {
  CLI::App app{
      "Exact counterpoint symmetries, modulation quanta, and PLR/TI duality "
      "over Z/12Z"};
  app.require_subcommand(1);
  app.fallthrough();

  CliOptions options;
  app.add_option("--config", options.config_path,
                 "Config file (key=value: polarity_variant, default_format)");
  app.add_option("--format", options.format, "Output format: json, csv, md");

  int exit_code = kExitOk;
  std::string analyze_path;
  std::string successors_interval;
  std::string mod_from;
  std::string mod_to;
  std::string mod_cadence;
  std::string mod_modulator;
  std::string cadences_key;
  std::string word_text;
  std::string triad_text;

  auto emit = [&](const AnalysisReport& report) {
    const Config config = resolveCliConfig(options);
    std::cout << renderReport(report, resolveFormat(options, config));
  };

  CLI::App* cpt = app.add_subcommand("cpt", "Two-voice counterpoint analysis");
  cpt->require_subcommand(1);

  CLI::App* analyze =
      cpt->add_subcommand("analyze", "Symmetry table for an interval file");
  analyze->add_option("file", analyze_path, "Interval list or voice events")
      ->required();
  analyze->callback([&] {
    const Config config = resolveCliConfig(options);
    const CounterpointWorld world =
        CounterpointWorld::standard(config.polarity_variant);
    const std::vector<DualNumber> sequence = intervalsFromFile(analyze_path);
    emit(buildSequenceReport(world, analyze_path, sequence));
  });

  CLI::App* successors =
      cpt->add_subcommand("successors", "Admissible successors of an interval");
  successors->add_option("interval", successors_interval, "Interval like 0+e.7")
      ->required();
  successors->callback([&] {
    auto interval = DualNumber::parse(successors_interval);
    if (!interval) {
      throw InputError("bad interval '" + successors_interval +
                       "' (expected x+e.y)");
    }
    const Config config = resolveCliConfig(options);
    const CounterpointWorld world =
        CounterpointWorld::standard(config.polarity_variant);
    emit(buildSuccessorReport(world, *interval));
  });

  CLI::App* theorem = cpt->add_subcommand(
      "theorem", "Successor counts for all 72 consonances (bound 42)");
  theorem->callback([&] {
    const Config config = resolveCliConfig(options);
    const CounterpointWorld world =
        CounterpointWorld::standard(config.polarity_variant);
    emit(buildTheoremReport(world));
  });

  CLI::App* mod = app.add_subcommand("mod", "Quantum modulation analysis");
  mod->require_subcommand(1);

  CLI::App* quantum = mod->add_subcommand("quantum", "Minimal modulation quantum");
  quantum->add_option("--from", mod_from, "Source major key")->required();
  quantum->add_option("--to", mod_to, "Target major key")->required();
  quantum->add_option("--cadence", mod_cadence, "Cadence label k1..k5")
      ->required();
  quantum->add_option("--modulator", mod_modulator,
                      "Modulator like e6*11 (default: all modulators)");
  quantum->callback([&] {
    const Tonality source = parseKeyOption(mod_from);
    const Tonality target = parseKeyOption(mod_to);
    auto cadence = cadentialSetByLabel(target, mod_cadence);
    if (!cadence) {
      throw InputError("unknown cadence label '" + mod_cadence +
                       "' (expected k1..k5)");
    }
    std::vector<AffineMap> modulators;
    if (mod_modulator.empty()) {
      modulators = findModulators(source, target);
      if (modulators.empty()) {
        throw InputError("no affine map carries " + source.name() + " onto " +
                         target.name());
      }
    } else {
      auto m = AffineMap::parse(mod_modulator);
      if (!m) {
        throw InputError("bad modulator '" + mod_modulator +
                         "' (expected e<t>*<u>)");
      }
      modulators.push_back(*m);
    }
    std::vector<ModulationSweepEntry> entries;
    for (const AffineMap& m : modulators) {
      auto result = modulationQuantum(source, target, m, *cadence);
      entries.push_back({source, target, m, *cadence, std::move(result)});
    }
    emit(buildModulationReport(
        "Modulation " + source.name() + "→" + target.name(), entries));
  });

  CLI::App* cadences = mod->add_subcommand("cadences", "Cadential sets of a key");
  cadences->add_option("--key", cadences_key, "Major key")->required();
  cadences->callback([&] { emit(buildCadenceReport(parseKeyOption(cadences_key))); });

  CLI::App* sweep = mod->add_subcommand(
      "sweep", "Every modulator with every cadence of the target");
  sweep->add_option("--from", mod_from, "Source major key")->required();
  sweep->add_option("--to", mod_to, "Target major key")->required();
  sweep->callback([&] {
    const Tonality source = parseKeyOption(mod_from);
    const Tonality target = parseKeyOption(mod_to);
    const auto entries = modulationSweep(source, target);
    emit(buildModulationReport(
        "Modulation sweep " + source.name() + "→" + target.name(),
        entries));
  });

  CLI::App* nr = app.add_subcommand("nr", "Neo-Riemannian PLR/TI operations");
  nr->require_subcommand(1);

  CLI::App* apply = nr->add_subcommand("apply", "Apply a word to a triad");
  apply->add_option("--word", word_text, "Word like R,T7")->required();
  apply
      ->add_option("--triad", triad_text,
                   "Triad like C, f#, or deg:V@C (case encodes mode)")
      ->required();
  apply->callback([&] {
    auto word = parseWord(word_text);
    if (!word) {
      throw InputError("bad word '" + word_text +
                       "' (expected tokens P, L, R, Tn, In)");
    }
    const Triad input = parseTriadSpec(triad_text);
    emit(buildWordReport(*word, input, wordApply(*word, input)));
  });

  CLI::App* verify =
      nr->add_subcommand("verify", "TI/PLR duality and regularity checks");
  verify->callback([&] { emit(buildVerifyReport(verifyGroupProperties())); });

  CLI::App* fixtures_cmd =
      app.add_subcommand("fixtures", "Embedded golden corpus");
  fixtures_cmd->require_subcommand(1);

  CLI::App* run = fixtures_cmd->add_subcommand(
      "run", "Run every fixture and diff against expected values");
  run->callback([&] {
    const FixtureRun result = runFixtureSuite();
    emit(result.report);
    if (result.total_mismatches > 0) exit_code = kExitMismatch;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return runCli(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NotATriadError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
