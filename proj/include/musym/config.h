#pragma once

#include <optional>
#include <string>

#include "musym/counterpoint.h"
#include "musym/report.h"

namespace musym {

/// Runtime configuration. Resolution order: built-in defaults, then the
/// config file (if given), then MUSYM_* environment variables; CLI flags
/// override all of these.
struct Config {
  PolarityVariant polarity_variant = kDefaultPolarityVariant;
  ReportFormat default_format = ReportFormat::kMarkdown;
};

/// Parses key=value lines ('#' comments allowed). Keys: polarity_variant
/// (global|localized), default_format (json|csv|md).
/// @throws InputError on unknown keys or bad values.
Config parseConfigText(std::string_view text);

/// @throws InputError if the file cannot be read or parsed.
Config loadConfigFile(const std::string& path);

/// Applies MUSYM_POLARITY_VARIANT and MUSYM_DEFAULT_FORMAT when set.
/// @throws InputError on bad values.
void applyEnvOverrides(Config& config);

/// File (optional) then environment.
Config resolveConfig(const std::optional<std::string>& path);

}  // namespace musym
