#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "accelqc/errors.hpp"
#include "accelqc/sweep.hpp"

namespace accelqc {

/// Option map shared by the config file and the command line. Keys are the long flag
/// names without the leading dashes, e.g. "fixed-r".
using OptionMap = std::map<std::string, std::string>;

inline constexpr std::array<std::string_view, 14> kSweepOptionKeys{
    "preset", "scenario", "pt",    "alpha",   "sweep",    "fixed-r",        "fixed-t",
    "range-start", "range-end", "t-max", "steps", "measures", "measured-party", "out"};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::replace(s.begin(), s.end(), '_', '-');
  return s;
}

inline bool is_known_key(std::string_view key) {
  return std::find(kSweepOptionKeys.begin(), kSweepOptionKeys.end(), key) != kSweepOptionKeys.end();
}

}  // namespace detail

/// `key = value` lines; `#` starts a comment. Unknown or repeated keys are errors.
inline OptionMap parse_config(std::istream& in) {
  OptionMap out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = detail::trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = detail::trim(std::string_view(body).substr(0, eq));
    const std::string value = detail::trim(std::string_view(body).substr(eq + 1));
    if (!detail::is_known_key(key))
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (value.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty value for '" + key + "'");
    if (!out.emplace(key, value).second)
      throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
  }
  return out;
}

inline OptionMap load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  return parse_config(in);
}

/// Command-line values win over config values.
inline OptionMap merge_options(const OptionMap& config, const OptionMap& command_line) {
  OptionMap out = config;
  for (const auto& [k, v] : command_line) out[k] = v;
  return out;
}

inline double parse_real(std::string_view key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("option '" + std::string(key) + "': '" + text + "' is not a number");
  }
}

inline int parse_integer(std::string_view key, const std::string& text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError("option '" + std::string(key) + "': '" + text + "' is not an integer");
  return v;
}

inline Scenario parse_scenario(const std::string& text) {
  const std::string s = detail::lower(text);
  if (s == "first-only" || s == "first") return Scenario::FirstOnly;
  if (s == "both") return Scenario::Both;
  throw ConfigError("scenario must be first-only or both, got '" + text + "'");
}

inline std::optional<PTTarget> parse_pt_target(const std::string& text) {
  const std::string s = detail::lower(text);
  if (s == "none") return std::nullopt;
  if (s == "on-a") return PTTarget::OnA;
  if (s == "on-b") return PTTarget::OnB;
  if (s == "on-both") return PTTarget::OnBoth;
  throw ConfigError("pt must be none, on-a, on-b or on-both, got '" + text + "'");
}

inline SweepVariable parse_sweep_variable(const std::string& text) {
  const std::string s = detail::lower(text);
  if (s == "r") return SweepVariable::R;
  if (s == "t") return SweepVariable::T;
  throw ConfigError("sweep must be r or t, got '" + text + "'");
}

inline Subsystem parse_party(const std::string& text) {
  const std::string s = detail::lower(text);
  if (s == "a") return Subsystem::A;
  if (s == "b") return Subsystem::B;
  throw ConfigError("measured-party must be A or B, got '" + text + "'");
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = detail::trim(std::string_view(text).substr(start, comma - start));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

/**
 * Turns merged options into the curves to compute. With `preset` the figure preset is
 * used (only steps, t-max and measured-party may modify it); otherwise a custom sweep is
 * built, one curve per listed alpha, each written as sweep_alpha=<value>.
 */
inline std::vector<PresetCurve> resolve_sweep(const OptionMap& opts) {
  const auto get = [&](std::string_view key) -> const std::string* {
    const auto it = opts.find(std::string(key));
    return it == opts.end() ? nullptr : &it->second;
  };
  for (const auto& [k, v] : opts)
    if (!detail::is_known_key(k)) throw ConfigError("unknown option '" + k + "'");

  const int steps = get("steps") ? parse_integer("steps", *get("steps")) : kDefaultSteps;
  const double t_max = get("t-max") ? parse_real("t-max", *get("t-max")) : kDefaultTimeMax;
  if (steps < 2) throw DomainError("steps must be >= 2, got " + std::to_string(steps));
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("t-max must be positive and finite");
  const Subsystem party = get("measured-party") ? parse_party(*get("measured-party")) : Subsystem::A;

  std::vector<PresetCurve> curves;
  if (const std::string* preset = get("preset")) {
    for (const std::string_view key :
         {"scenario", "pt", "alpha", "sweep", "fixed-r", "fixed-t", "range-start", "range-end", "measures"})
      if (get(key)) throw ConfigError("option '" + std::string(key) + "' cannot be combined with a preset");
    curves = figure_preset(*preset, steps, t_max).curves;
  } else {
    if (!get("scenario")) throw ConfigError("a custom sweep needs --scenario (or use --preset)");
    SweepSpec base;
    base.scenario = parse_scenario(*get("scenario"));
    base.pt_target = get("pt") ? parse_pt_target(*get("pt")) : std::nullopt;
    base.sweep = get("sweep") ? parse_sweep_variable(*get("sweep")) : SweepVariable::R;
    base.steps = steps;
    const bool over_r = base.sweep == SweepVariable::R;
    if (over_r && get("fixed-r")) throw ConfigError("fixed-r conflicts with sweeping r");
    if (!over_r && get("fixed-t")) throw ConfigError("fixed-t conflicts with sweeping t");
    const char* fixed_key = over_r ? "fixed-t" : "fixed-r";
    base.fixed_value = get(fixed_key) ? parse_real(fixed_key, *get(fixed_key)) : 0.0;
    base.range_start = get("range-start") ? parse_real("range-start", *get("range-start")) : 0.0;
    base.range_end =
        get("range-end") ? parse_real("range-end", *get("range-end")) : (over_r ? kMaxAcceleration : t_max);
    if (const std::string* measures = get("measures")) {
      base.want_negativity = base.want_naqc = false;
      for (const std::string& m : split_list(*measures)) {
        const std::string key = detail::lower(m);
        if (key == "negativity")
          base.want_negativity = true;
        else if (key == "naqc")
          base.want_naqc = true;
        else
          throw ConfigError("unknown measure '" + m + "' (expected negativity, naqc)");
      }
    }
    std::vector<std::string> alphas = get("alpha") ? split_list(*get("alpha")) : std::vector<std::string>{"0"};
    if (alphas.empty()) throw ConfigError("alpha list is empty");
    for (const std::string& a : alphas) {
      SweepSpec spec = base;
      spec.alpha = parse_real("alpha", a);
      curves.push_back({"sweep_alpha=" + detail::format_value(spec.alpha), spec});
    }
  }
  for (auto& curve : curves) {
    curve.spec.measured_party = party;
    validate(curve.spec);
  }
  return curves;
}

}  // namespace accelqc
