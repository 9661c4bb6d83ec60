#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace probjam::app {

/// Malformed, unknown or missing configuration. Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat configuration: `key = value` lines (`#` starts a comment) or a JSON object.
/// Power keys may be given in dB with a `_db` suffix; they are stored linear.
class Config {
 public:
  static Config parse_text(std::string_view text, const std::string& origin = "<text>");
  static Config parse_json(std::string_view text, const std::string& origin = "<json>");
  /// JSON when the file ends in .json or starts with '{', key=value otherwise.
  static Config load_file(const std::string& path);

  /// Later calls win. Accepts `key=value` via `apply_override`.
  void set(const std::string& key, const std::string& value);
  void apply_override(const std::string& assignment);
  /// Copies every entry of `other` over this one.
  void merge(const Config& other);

  [[nodiscard]] bool has(const std::string& key) const { return entries_.count(key) > 0; }
  [[nodiscard]] double number(const std::string& key) const;
  [[nodiscard]] double number_or(const std::string& key, double fallback) const;
  [[nodiscard]] std::uint64_t integer(const std::string& key) const;
  [[nodiscard]] std::uint64_t integer_or(const std::string& key, std::uint64_t fallback) const;

  [[nodiscard]] const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace probjam::app
