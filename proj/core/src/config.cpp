#include <kepler/config.hpp>

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include <kepler/errors.hpp>

namespace kepler::bench {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

double parse_number(std::string_view text, std::size_t line) {
  const std::string buf(text);
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty() || errno == ERANGE) {
    fail(line, "expected a number, got '" + buf + "'");
  }
  return value;
}

ConfigValue parse_value(std::string_view text, std::size_t line) {
  if (text.empty()) {
    fail(line, "missing value");
  }
  if (text.front() == '"') {
    if (text.size() < 2 || text.back() != '"') {
      fail(line, "unterminated string");
    }
    const std::string_view body = text.substr(1, text.size() - 2);
    if (body.find('"') != std::string_view::npos) {
      fail(line, "embedded quotes are not supported");
    }
    return std::string(body);
  }
  if (text.front() == '[') {
    if (text.back() != ']') {
      fail(line, "unterminated array");
    }
    std::string_view body = text.substr(1, text.size() - 2);
    Vec3 v;
    double* const slots[3] = {&v.x, &v.y, &v.z};
    std::size_t count = 0;
    while (true) {
      const std::size_t comma = body.find(',');
      const std::string_view item = trim(body.substr(0, comma));
      if (count == 3) {
        fail(line, "expected exactly 3 array elements");
      }
      *slots[count++] = parse_number(item, line);
      if (comma == std::string_view::npos) {
        break;
      }
      body.remove_prefix(comma + 1);
    }
    if (count != 3) {
      fail(line, "expected exactly 3 array elements, got " + std::to_string(count));
    }
    return v;
  }
  return parse_number(text, line);
}

// Strips a trailing comment, respecting quoted strings.
std::string_view strip_comment(std::string_view s) {
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') {
      in_string = !in_string;
    } else if (s[i] == '#' && !in_string) {
      return s.substr(0, i);
    }
  }
  return s;
}

}  // namespace

ConfigMap parse_config(std::istream& in) {
  ConfigMap out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(strip_comment(raw));
    if (line.empty()) {
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(line_no, "expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    if (key.empty()) {
      fail(line_no, "empty key");
    }
    for (char c : key) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.') {
        fail(line_no, "invalid key character '" + std::string(1, c) + "'");
      }
    }
    if (out.contains(std::string(key))) {
      fail(line_no, "duplicate key '" + std::string(key) + "'");
    }
    out.emplace(std::string(key), parse_value(trim(line.substr(eq + 1)), line_no));
  }
  return out;
}

ConfigMap parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config file '" + path + "'");
  }
  return parse_config(in);
}

namespace {

template <typename T>
const T* get_as(const ConfigMap& config, std::string_view key, const char* type_name) {
  const auto it = config.find(key);
  if (it == config.end()) {
    return nullptr;
  }
  const T* value = std::get_if<T>(&it->second);
  if (value == nullptr) {
    throw ConfigError("config key '" + std::string(key) + "' must be a " + type_name);
  }
  return value;
}

std::uint64_t as_count(double value, std::string_view key) {
  if (!(value >= 0.0) || value != std::floor(value) || value > 1e18) {
    throw ConfigError("config key '" + std::string(key) +
                      "' must be a non-negative integer");
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace

Scenario scenario_from_config(const ConfigMap& config) {
  static constexpr std::string_view known[] = {"label", "method", "q0", "p0",
                                               "m", "k", "step", "n_steps",
                                               "n_periods", "sample_stride"};
  for (const auto& [key, value] : config) {
    bool ok = false;
    for (std::string_view k : known) {
      ok = ok || k == key;
    }
    if (!ok) {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }

  Scenario sc;
  if (const auto* label = get_as<std::string>(config, "label", "string")) {
    sc.label = *label;
  }
  if (const auto* method = get_as<std::string>(config, "method", "string")) {
    const auto parsed = method_from_name(*method);
    if (!parsed) {
      throw ConfigError("config key 'method' must be one of mtpi, rk4, leapfrog, "
                        "composition4; got '" + *method + "'");
    }
    sc.method = *parsed;
  }
  if (const auto* q0 = get_as<Vec3>(config, "q0", "3-vector")) {
    sc.q0 = *q0;
  }
  if (const auto* p0 = get_as<Vec3>(config, "p0", "3-vector")) {
    sc.p0 = *p0;
  }
  if (const auto* m = get_as<double>(config, "m", "number")) {
    sc.params.m = *m;
  }
  if (const auto* k = get_as<double>(config, "k", "number")) {
    sc.params.k = *k;
  }
  if (const auto* step = get_as<double>(config, "step", "number")) {
    sc.step = *step;
  }
  if (const auto* n_steps = get_as<double>(config, "n_steps", "number")) {
    sc.n_steps = as_count(*n_steps, "n_steps");
  }
  if (const auto* n_periods = get_as<double>(config, "n_periods", "number")) {
    sc.n_periods = *n_periods;
  }
  if (const auto* stride = get_as<double>(config, "sample_stride", "number")) {
    sc.sample_stride = as_count(*stride, "sample_stride");
  }
  validate(sc);
  return sc;
}

}  // namespace kepler::bench
