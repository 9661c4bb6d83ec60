#include "app/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "probjam/format.hpp"

namespace probjam::app {

namespace {

const std::set<std::string, std::less<>> kPowerKeys = {
    "p_a", "p_min", "p_max", "p_m", "sigma_w2", "sigma_b2", "pm_over_sigma"};

const std::set<std::string, std::less<>> kPlainKeys = {
    "epsilon", "p_j",   "rate", "gamma",    "n",        "trials",  "seed", "hypothesis_mix",
    "threads", "start", "stop", "step",     "start_db", "stop_db", "step_db"};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& key, const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("key '" + key + "': not a number: '" + text + "'");
  }
  return value;
}

}  // namespace

void Config::set(const std::string& raw_key, const std::string& raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  if (key.empty()) throw ConfigError("empty key");
  if (value.empty()) throw ConfigError("key '" + key + "': empty value");

  constexpr std::string_view suffix = "_db";
  if (key.size() > suffix.size() && key.ends_with(suffix)) {
    const std::string base = key.substr(0, key.size() - suffix.size());
    if (kPowerKeys.count(base)) {
      const double db = parse_double(key, value);
      entries_[base] = format_double(std::pow(10.0, db / 10.0));
      return;
    }
  }
  if (!kPowerKeys.count(key) && !kPlainKeys.count(key)) {
    throw ConfigError("unknown key '" + key + "'");
  }
  entries_[key] = value;
}

void Config::apply_override(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw ConfigError("override '" + assignment + "' is not of the form key=value");
  }
  set(assignment.substr(0, eq), assignment.substr(eq + 1));
}

void Config::merge(const Config& other) {
  for (const auto& [k, v] : other.entries_) entries_[k] = v;
}

Config Config::parse_text(std::string_view text, const std::string& origin) {
  Config cfg;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string norm = key.ends_with("_db") && kPowerKeys.count(key.substr(0, key.size() - 3))
                           ? key.substr(0, key.size() - 3)
                           : key;
    if (!seen.insert(norm).second) {
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": duplicate key '" + norm + "'");
    }
    try {
      cfg.set(key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

Config Config::parse_json(std::string_view text, const std::string& origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(origin + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(origin + ": top level must be an object");
  Config cfg;
  std::set<std::string> seen;
  for (const auto& [key, value] : doc.items()) {
    std::string norm = key.ends_with("_db") && kPowerKeys.count(key.substr(0, key.size() - 3))
                           ? key.substr(0, key.size() - 3)
                           : key;
    if (!seen.insert(norm).second) throw ConfigError(origin + ": duplicate key '" + norm + "'");
    std::string repr;
    if (value.is_number_integer() || value.is_number_unsigned()) {
      repr = value.dump();
    } else if (value.is_number()) {
      repr = format_double(value.get<double>());
    } else if (value.is_string()) {
      repr = value.get<std::string>();
    } else {
      throw ConfigError(origin + ": key '" + key + "' must be a number or string");
    }
    cfg.set(key, repr);
  }
  return cfg;
}

Config Config::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool json = path.ends_with(".json") || (first != std::string::npos && text[first] == '{');
  return json ? parse_json(text, path) : parse_text(text, path);
}

double Config::number(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw ConfigError("missing required key '" + key + "'");
  return parse_double(key, it->second);
}

double Config::number_or(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

std::uint64_t Config::integer(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw ConfigError("missing required key '" + key + "'");
  const std::string& text = it->second;
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("key '" + key + "': not a non-negative integer: '" + text + "'");
  }
  return value;
}

std::uint64_t Config::integer_or(const std::string& key, std::uint64_t fallback) const {
  return has(key) ? integer(key) : fallback;
}

}  // namespace probjam::app
