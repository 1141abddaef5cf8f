// Flat key = value scenario files (a TOML subset): strings quoted, reals
// bare, 3-vectors as [x, y, z]. '#' starts a comment.
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include <kepler/scenario.hpp>
#include <kepler/vec3.hpp>

namespace kepler::bench {

using ConfigValue = std::variant<std::string, double, Vec3>;
using ConfigMap = std::map<std::string, ConfigValue, std::less<>>;

/// Parses the flat grammar; throws ConfigError with the offending line number.
ConfigMap parse_config(std::istream& in);

/// Reads and parses a config file; throws IoError if unreadable.
ConfigMap parse_config_file(const std::string& path);

/// Builds a Scenario from parsed keys. Recognized keys: label, method, q0,
/// p0, m, k, step, n_steps, n_periods, sample_stride. Unknown keys and type
/// mismatches throw ConfigError. The result is validated.
Scenario scenario_from_config(const ConfigMap& config);

}  // namespace kepler::bench
