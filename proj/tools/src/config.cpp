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

#include "wdist/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "CLI11.hpp"

namespace wdist::cli {

namespace {

const std::vector<std::string> kCommonKeys{"out", "format", "seed"};

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

bool valid_key(const std::string& key) {
  return !key.empty() && std::all_of(key.begin(), key.end(), [](unsigned char c) {
    return std::isalnum(c) != 0 || c == '_' || c == '-';
  });
}

template <class T>
const T& get(const RunConfig& cfg, const std::string& key) {
  for (const auto& [k, v] : cfg.params) {
    if (k == key) {
      if (const T* p = std::get_if<T>(&v)) return *p;
      throw ConfigError(key, "parameter has a different type");
    }
  }
  throw ConfigError(key, "no such parameter for '" + cfg.command + "'");
}

double parse_real(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v)) {
    throw ConfigError(key, "expected a finite number, got '" + text + "'");
  }
  return v;
}

}  // namespace

double RunConfig::real(const std::string& key) const { return get<double>(*this, key); }
long long RunConfig::integer(const std::string& key) const { return get<long long>(*this, key); }
const std::string& RunConfig::text(const std::string& key) const { return get<std::string>(*this, key); }
const std::vector<double>& RunConfig::list(const std::string& key) const { return get<std::vector<double>>(*this, key); }

std::string to_string(const ParamValue& value) {
  struct Visitor {
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(const std::vector<double>& v) const {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i > 0 ? "," : "") + format_number(v[i]);
      return s;
    }
  };
  return std::visit(Visitor{}, value);
}

std::string RunConfig::canonical() const {
  std::string s = "command=" + command + "\n";
  for (const auto& [k, v] : params) s += k + "=" + to_string(v) + "\n";
  s += "format=" + std::string(wdist::to_string(format)) + "\n";
  s += "seed=" + std::to_string(seed) + "\n";
  return s;
}

std::string RunConfig::hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ConfigFile load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path.string() + "'");
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_config(in);
  } catch (const std::exception& e) {
    throw ConfigError("config", std::string("parse error: ") + e.what());
  }
  ConfigFile file;
  file.path = path;
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;
    if (!item.parents.empty()) throw ConfigError(item.parents.front(), "sections are not supported; use flat keys");
    if (!valid_key(item.name)) throw ConfigError(item.name, "malformed line (expected key = value)");
    const std::string key = normalize_key(item.name);
    std::string value;
    for (std::size_t i = 0; i < item.inputs.size(); ++i) value += (i > 0 ? "," : "") + item.inputs[i];
    if (key == "command") {
      file.command = value;
      continue;
    }
    for (const auto& [k, v] : file.entries) {
      if (k == key) throw ConfigError(key, "duplicate key");
    }
    file.entries.emplace_back(key, value);
  }
  return file;
}

ParamValue parse_param(const ParamSpec& spec, const std::string& text) {
  ParamValue value;
  switch (spec.kind) {
    case ParamKind::Real: value = parse_real(spec.key, text); break;
    case ParamKind::Integer: {
      const std::string t = trim(text);
      char* end = nullptr;
      const long long v = std::strtoll(t.c_str(), &end, 10);
      if (t.empty() || end != t.c_str() + t.size()) {
        throw ConfigError(spec.key, "expected an integer, got '" + text + "'");
      }
      value = v;
      break;
    }
    case ParamKind::Text: value = trim(text); break;
    case ParamKind::RealList: {
      std::vector<double> list;
      if (!trim(text).empty()) {
        std::string cur;
        for (char c : text + ",") {
          if (c == ',') {
            list.push_back(parse_real(spec.key, cur));
            cur.clear();
          } else {
            cur += c;
          }
        }
      }
      value = std::move(list);
      break;
    }
  }
  if (spec.check) {
    try {
      spec.check(value);
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(spec.key, e.what());
    }
  }
  return value;
}

RunConfig resolve_config(const std::string& command, const std::vector<ParamSpec>& specs,
                         const std::vector<std::pair<std::string, std::string>>& flags, const ConfigFile* file) {
  auto lookup = [](const std::vector<std::pair<std::string, std::string>>& kv,
                   const std::string& key) -> std::optional<std::string> {
    for (const auto& [k, v] : kv) {
      if (k == key) return v;
    }
    return std::nullopt;
  };
  if (file != nullptr) {
    if (file->command && *file->command != command) {
      throw ConfigError("command", "config is for '" + *file->command + "', not '" + command + "'");
    }
    for (const auto& [k, v] : file->entries) {
      const bool known = std::any_of(specs.begin(), specs.end(), [&](const ParamSpec& s) { return s.key == k; }) ||
                         std::find(kCommonKeys.begin(), kCommonKeys.end(), k) != kCommonKeys.end();
      if (!known) throw ConfigError(k, "unknown key for '" + command + "'");
    }
  }
  auto pick = [&](const std::string& key) -> std::optional<std::string> {
    if (auto v = lookup(flags, key)) return v;
    if (file != nullptr) return lookup(file->entries, key);
    return std::nullopt;
  };

  RunConfig cfg;
  cfg.command = command;
  for (const auto& spec : specs) cfg.params.emplace_back(spec.key, parse_param(spec, pick(spec.key).value_or(spec.default_value)));
  if (auto out = pick("out"); out && !out->empty()) cfg.out = *out;
  if (auto fmt = pick("format")) {
    try {
      cfg.format = parse_format(trim(*fmt));
    } catch (const Error& e) {
      throw ConfigError("format", e.what());
    }
  }
  if (auto seed = pick("seed")) {
    const std::string t = trim(*seed);
    char* end = nullptr;
    const unsigned long long v = std::strtoull(t.c_str(), &end, 10);
    if (t.empty() || t[0] == '-' || end != t.c_str() + t.size()) throw ConfigError("seed", "expected a non-negative integer");
    cfg.seed = v;
  }
  return cfg;
}

}  // namespace wdist::cli
