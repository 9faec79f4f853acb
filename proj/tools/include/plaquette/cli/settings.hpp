#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plaquette::cli {

/// Bad flags, config keys or ranges. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Shortest decimal that round-trips, '.' separator, at most 17 digits.
std::string format_number(double value);

double parse_double(std::string_view text, std::string_view what);
long long parse_integer(std::string_view text, std::string_view what);

/// "a,b,c" | "lin:a:b:N" | "log:a:b:N". Result is non-empty and strictly increasing.
std::vector<double> parse_range(std::string_view text, std::string_view what);

/// Flat "key = value" document; '#' starts a comment line.
std::map<std::string, std::string> parse_config_text(std::string_view text);
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

/// Keys recognised in config files and as flags (underscores become dashes for flags).
const std::vector<std::string>& known_keys();

/// Config-file values overlaid by command-line flags.
class Settings {
 public:
  Settings() = default;
  Settings(std::map<std::string, std::string> file, std::map<std::string, std::string> flags);

  bool has(const std::string& key) const { return values_.contains(key); }
  std::optional<std::string> get(const std::string& key) const;
  std::string get_or(const std::string& key, std::string fallback) const;

  double number(const std::string& key, double fallback) const;
  long long integer(const std::string& key, long long fallback) const;
  std::vector<double> range(const std::string& key, std::string fallback) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace plaquette::cli
