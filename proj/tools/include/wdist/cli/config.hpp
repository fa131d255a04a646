// Copyright 2026 The wdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WDIST_CLI_CONFIG_HPP
#define WDIST_CLI_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wdist/errors.hpp"
#include "wdist/table_io.hpp"

namespace wdist::cli {

/// Invalid configuration value or unknown key; `key()` names the culprit.
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what) : Error(key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

enum class ParamKind { Real, Integer, Text, RealList };

using ParamValue = std::variant<double, long long, std::string, std::vector<double>>;

/// One parameter of a subcommand. Keys use underscores; the matching flag
/// is the key with dashes ("n_max" <-> "--n-max").
struct ParamSpec {
  std::string key;
  ParamKind kind = ParamKind::Real;
  std::string default_value;
  std::string help;
  /// Throws ConfigError (or DomainError) for out-of-domain values.
  std::function<void(const ParamValue&)> check;
};

/// Flat key/value document read from disk, values still as text.
struct ConfigFile {
  std::filesystem::path path;
  std::optional<std::string> command;
  /// In file order; list values are joined with commas.
  std::vector<std::pair<std::string, std::string>> entries;
};

inline constexpr std::uint64_t kDefaultSeed = 20260101;

/// Validated parameters of one invocation.
struct RunConfig {
  std::string command;
  std::vector<std::pair<std::string, ParamValue>> params;
  std::optional<std::filesystem::path> out;
  TableFormat format = TableFormat::Csv;
  std::uint64_t seed = kDefaultSeed;
  bool dry_run = false;

  double real(const std::string& key) const;
  long long integer(const std::string& key) const;
  const std::string& text(const std::string& key) const;
  const std::vector<double>& list(const std::string& key) const;

  /// "key=value" lines in parameter order, plus format and seed.
  std::string canonical() const;
  /// FNV-1a 64 of canonical(), as 16 hex digits.
  std::string hash() const;
};

/// Reads a TOML-style file of `key = value` lines (numbers, quoted
/// strings, [a, b] arrays, # comments). Tables/sections are rejected.
ConfigFile load_config(const std::filesystem::path& path);

/// Parses and checks one value; throws ConfigError naming `spec.key`.
ParamValue parse_param(const ParamSpec& spec, const std::string& text);

std::string to_string(const ParamValue& value);

/// Merges sources with precedence flags > file > defaults. Rejects file
/// keys that the subcommand does not define and a file `command` that
/// names a different subcommand.
RunConfig resolve_config(const std::string& command, const std::vector<ParamSpec>& specs,
                         const std::vector<std::pair<std::string, std::string>>& flags, const ConfigFile* file);

}  // namespace wdist::cli

#endif  // WDIST_CLI_CONFIG_HPP
