#include "musym/config.h"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "musym/errors.h"

namespace musym {
namespace {

std::string_view trimmed(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

void applyKey(Config& config, std::string_view key, std::string_view value,
              const std::string& where) {
  if (key == "polarity_variant") {
    auto variant = parsePolarityVariant(value);
    if (!variant) {
      throw InputError(where + ": polarity_variant must be global or "
                               "localized, got '" +
                       std::string(value) + "'");
    }
    config.polarity_variant = *variant;
  } else if (key == "default_format") {
    auto format = parseReportFormat(value);
    if (!format) {
      throw InputError(where + ": default_format must be json, csv, or md, "
                               "got '" +
                       std::string(value) + "'");
    }
    config.default_format = *format;
  } else {
    throw InputError(where + ": unknown config key '" + std::string(key) + "'");
  }
}

}  // namespace

Config parseConfigText(std::string_view text) {
  Config config;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_number;
    std::string_view content = trimmed(line);
    if (!content.empty() && content[0] != '#') {
      std::size_t eq = content.find('=');
      if (eq == std::string_view::npos) {
        throw InputError("config line " + std::to_string(line_number) +
                         ": expected key=value");
      }
      applyKey(config, trimmed(content.substr(0, eq)),
               trimmed(content.substr(eq + 1)),
               "config line " + std::to_string(line_number));
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return config;
}

Config loadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot read config file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseConfigText(buffer.str());
}

void applyEnvOverrides(Config& config) {
  if (const char* value = std::getenv("MUSYM_POLARITY_VARIANT")) {
    applyKey(config, "polarity_variant", value, "MUSYM_POLARITY_VARIANT");
  }
  if (const char* value = std::getenv("MUSYM_DEFAULT_FORMAT")) {
    applyKey(config, "default_format", value, "MUSYM_DEFAULT_FORMAT");
  }
}

Config resolveConfig(const std::optional<std::string>& path) {
  Config config;
  if (path) config = loadConfigFile(*path);
  applyEnvOverrides(config);
  return config;
}

}  // namespace musym
