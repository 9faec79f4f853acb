#include "plaquette/cli/settings.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace plaquette::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string quoted(std::string_view what) { return "'" + std::string(what) + "'"; }

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, std::string_view what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw UsageError("invalid number for " + quoted(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

long long parse_integer(std::string_view text, std::string_view what) {
  text = trim(text);
  long long value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw UsageError("invalid integer for " + quoted(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_range(std::string_view text, std::string_view what) {
  text = trim(text);
  std::vector<double> out;
  if (text.starts_with("lin:") || text.starts_with("log:")) {
    const bool log = text.starts_with("log:");
    const auto parts = split(text.substr(4), ':');
    if (parts.size() != 3) throw UsageError("range " + quoted(what) + " must look like lin:a:b:N or log:a:b:N");
    const double a = parse_double(parts[0], what);
    const double b = parse_double(parts[1], what);
    const long long count = parse_integer(parts[2], what);
    if (count < 1 || count > 1000000) throw UsageError("range " + quoted(what) + " needs 1 <= N <= 1e6 points");
    if (log && !(a > 0.0 && b > 0.0)) throw UsageError("log range " + quoted(what) + " needs positive ends");
    if (count == 1 && a != b) throw UsageError("range " + quoted(what) + " with one point needs a == b");
    out.reserve(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i) {
      const double f = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
      if (i == 0) {
        out.push_back(a);
      } else if (i == count - 1) {
        out.push_back(b);
      } else if (log) {
        out.push_back(std::exp(std::log(a) + f * (std::log(b) - std::log(a))));
      } else {
        out.push_back(a + f * (b - a));
      }
    }
  } else {
    for (const auto part : split(text, ',')) out.push_back(parse_double(part, what));
  }
  if (out.empty()) throw UsageError("range " + quoted(what) + " is empty");
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (!(out[i] > out[i - 1])) throw UsageError("range " + quoted(what) + " must be strictly increasing");
  }
  return out;
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys{"hbar", "beta2", "coupling_g", "nu_tilde", "hbar_beta2", "n_max",
                                             "trunc", "grid", "out", "format", "state", "n", "s", "k"};
  return keys;
}

std::map<std::string, std::string> parse_config_text(std::string_view text) {
  std::map<std::string, std::string> values;
  std::size_t lineno = 0;
  for (auto line : split(text, '\n')) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (std::ranges::find(known_keys(), key) == known_keys().end()) {
      throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (values.contains(key)) throw UsageError("config key '" + key + "' given twice");
    values[key] = value;
  }
  return values;
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

Settings::Settings(std::map<std::string, std::string> file, std::map<std::string, std::string> flags)
    : values_(std::move(file)) {
  for (auto& [k, v] : flags) values_[k] = std::move(v);
}

std::optional<std::string> Settings::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string Settings::get_or(const std::string& key, std::string fallback) const {
  return get(key).value_or(std::move(fallback));
}

double Settings::number(const std::string& key, double fallback) const {
  const auto v = get(key);
  return v ? parse_double(*v, key) : fallback;
}

long long Settings::integer(const std::string& key, long long fallback) const {
  const auto v = get(key);
  return v ? parse_integer(*v, key) : fallback;
}

std::vector<double> Settings::range(const std::string& key, std::string fallback) const {
  return parse_range(get_or(key, std::move(fallback)), key);
}

}  // namespace plaquette::cli
