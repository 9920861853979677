#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "accelqc/errors.hpp"
#include "accelqc/measures.hpp"
#include "accelqc/ptsym.hpp"
#include "accelqc/unruh.hpp"

namespace accelqc {

enum class SweepVariable { R, T };

inline constexpr int kDefaultSteps = 200;
inline constexpr double kDefaultTimeMax = 10.0;

/// One curve: which qubits are accelerated, which carry the PT operation, and which of
/// r / t runs along the axis while the other stays at `fixed_value`.
struct SweepSpec {
  Scenario scenario = Scenario::FirstOnly;
  std::optional<PTTarget> pt_target;  // empty: no PT operation
  double alpha = 0.0;
  SweepVariable sweep = SweepVariable::R;
  double fixed_value = 0.0;
  double range_start = 0.0;
  double range_end = kMaxAcceleration;
  int steps = kDefaultSteps;
  bool want_negativity = true;
  bool want_naqc = true;
  Subsystem measured_party = Subsystem::A;
};

struct MeasureRecord {
  double r = 0.0;
  double t = 0.0;
  double alpha = 0.0;
  Scenario scenario = Scenario::FirstOnly;
  std::optional<PTTarget> pt_target;
  std::optional<double> negativity;
  std::optional<double> naqc;

  friend bool operator==(const MeasureRecord&, const MeasureRecord&) = default;
};

inline std::string_view scenario_label(Scenario s) {
  switch (s) {
    case Scenario::None:
      return "none";
    case Scenario::FirstOnly:
      return "first_only";
    case Scenario::Both:
      return "both";
  }
  return "?";
}

inline std::string_view pt_target_label(const std::optional<PTTarget>& p) {
  if (!p) return "none";
  switch (*p) {
    case PTTarget::OnA:
      return "on_a";
    case PTTarget::OnB:
      return "on_b";
    case PTTarget::OnBoth:
      return "on_both";
  }
  return "?";
}

inline void validate(const SweepSpec& spec) {
  if (spec.steps < 2) throw DomainError("a sweep needs at least 2 steps, got " + std::to_string(spec.steps));
  if (!spec.want_negativity && !spec.want_naqc) throw DomainError("a sweep needs at least one measure");
  if (spec.scenario == Scenario::None) throw DomainError("a sweep needs an acceleration scenario");
  const auto check_r = [](double r) { check_acceleration(r); };
  const auto check_t = [](double t) {
    if (!std::isfinite(t) || t < 0.0) throw DomainError("interaction time " + std::to_string(t) + " must be >= 0");
  };
  if (spec.sweep == SweepVariable::R) {
    check_r(spec.range_start);
    check_r(spec.range_end);
    check_t(spec.fixed_value);
  } else {
    check_t(spec.range_start);
    check_t(spec.range_end);
    check_r(spec.fixed_value);
  }
  if (spec.pt_target) check_pt_params({spec.alpha, 0.0});
}

/// Grid value k of `steps`, the last one pinned to range_end.
inline double grid_point(const SweepSpec& spec, int k) {
  if (k == spec.steps - 1) return spec.range_end;
  return spec.range_start + (spec.range_end - spec.range_start) * static_cast<double>(k) / (spec.steps - 1);
}

inline MeasureRecord evaluate_point(const SweepSpec& spec, double r, double t) {
  TwoQubitState state = accelerate(bell_phi_plus(), {r, spec.scenario});
  if (spec.pt_target) state = evolve(state, {spec.alpha, t}, *spec.pt_target);
  MeasureRecord rec{r, t, spec.alpha, spec.scenario, spec.pt_target, std::nullopt, std::nullopt};
  if (spec.want_negativity) rec.negativity = negativity(state);
  if (spec.want_naqc) rec.naqc = naqc(state, spec.measured_party);
  return rec;
}

/// One record per grid point in ascending sweep order. A failing point aborts the sweep
/// with a SweepError of the same category naming the point.
inline std::vector<MeasureRecord> run_sweep(const SweepSpec& spec) {
  validate(spec);
  std::vector<MeasureRecord> out;
  out.reserve(static_cast<std::size_t>(spec.steps));
  for (int k = 0; k < spec.steps; ++k) {
    const double x = grid_point(spec, k);
    const double r = spec.sweep == SweepVariable::R ? x : spec.fixed_value;
    const double t = spec.sweep == SweepVariable::T ? x : spec.fixed_value;
    try {
      out.push_back(evaluate_point(spec, r, t));
    } catch (const Error& e) {
      throw SweepError(e.kind(), "sweep failed at grid point " + std::to_string(k) + " (r=" + std::to_string(r) +
                                     ", t=" + std::to_string(t) + ", alpha=" + std::to_string(spec.alpha) +
                                     "): " + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------------------
// Figure presets

struct PresetCurve {
  std::string file_stem;  // <preset>_<param>=<value>, or just <preset> for single curves
  SweepSpec spec;
};

struct FigurePreset {
  std::string name;
  std::vector<PresetCurve> curves;
};

namespace detail {

inline std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

struct PresetShape {
  std::string_view name;
  Scenario scenario;
  std::optional<PTTarget> pt;
  double alpha;
  SweepVariable sweep;
  bool negativity;  // otherwise naqc
};

inline constexpr double kPi6 = std::numbers::pi / 6;
inline constexpr double kPi4 = std::numbers::pi / 4;
inline constexpr double kPi3 = std::numbers::pi / 3;
inline constexpr auto kNeg = true;
inline constexpr auto kNaqc = false;

inline const std::vector<PresetShape>& preset_table() {
  using enum Scenario;
  using enum SweepVariable;
  constexpr auto OnA = PTTarget::OnA;
  constexpr auto OnBoth = PTTarget::OnBoth;
  static const std::vector<PresetShape> table{
      {"fig1a", FirstOnly, std::nullopt, 0.0, R, kNeg},
      {"fig1b", Both, std::nullopt, 0.0, R, kNeg},
      {"fig2a", FirstOnly, std::nullopt, 0.0, R, kNaqc},
      {"fig2b", Both, std::nullopt, 0.0, R, kNaqc},
      {"fig3a", FirstOnly, OnA, kPi6, R, kNeg},
      {"fig3b", FirstOnly, OnA, kPi4, R, kNeg},
      {"fig3c", FirstOnly, OnA, kPi3, R, kNeg},
      {"fig4a", FirstOnly, OnA, kPi6, T, kNeg},
      {"fig4b", FirstOnly, OnA, kPi4, T, kNeg},
      {"fig4c", FirstOnly, OnA, kPi3, T, kNeg},
      {"fig5a", FirstOnly, OnBoth, kPi6, R, kNeg},
      {"fig5b", FirstOnly, OnBoth, kPi6, T, kNeg},
      {"fig6a", Both, OnA, kPi6, R, kNeg},
      {"fig6b", Both, OnA, kPi6, T, kNeg},
      {"fig6c", Both, OnBoth, kPi6, R, kNeg},
      {"fig6d", Both, OnBoth, kPi6, T, kNeg},
      {"fig7a", FirstOnly, OnA, kPi6, R, kNaqc},
      {"fig7b", FirstOnly, OnA, kPi4, R, kNaqc},
      {"fig7c", FirstOnly, OnA, kPi3, R, kNaqc},
      {"fig8a", FirstOnly, OnA, kPi6, T, kNaqc},
      {"fig8b", FirstOnly, OnA, kPi4, T, kNaqc},
      {"fig8c", FirstOnly, OnA, kPi3, T, kNaqc},
      {"fig9a", FirstOnly, OnBoth, kPi6, R, kNaqc},
      {"fig9b", FirstOnly, OnBoth, kPi4, R, kNaqc},
      {"fig9c", FirstOnly, OnBoth, kPi3, R, kNaqc},
      {"fig10a", FirstOnly, OnBoth, kPi6, T, kNaqc},
      {"fig10b", FirstOnly, OnBoth, kPi4, T, kNaqc},
      {"fig10c", FirstOnly, OnBoth, kPi3, T, kNaqc},
      {"fig11a", Both, OnA, kPi6, R, kNaqc},
      {"fig11b", Both, OnA, kPi4, R, kNaqc},
      {"fig11c", Both, OnA, kPi3, R, kNaqc},
      {"fig12a", Both, OnA, kPi6, T, kNaqc},
      {"fig12b", Both, OnA, kPi4, T, kNaqc},
      {"fig12c", Both, OnA, kPi3, T, kNaqc},
      {"fig13a", Both, OnBoth, kPi6, R, kNaqc},
      {"fig13b", Both, OnBoth, kPi4, R, kNaqc},
      {"fig13c", Both, OnBoth, kPi3, R, kNaqc},
      {"fig14a", Both, OnBoth, kPi6, T, kNaqc},
      {"fig14b", Both, OnBoth, kPi4, T, kNaqc},
      {"fig14c", Both, OnBoth, kPi3, T, kNaqc},
  };
  return table;
}

}  // namespace detail

/// Curve parameters shared by the r sweeps (fixed t) and the t sweeps (fixed r).
inline constexpr std::array<double, 3> kPresetTimes{0.1, 0.4, 0.9};
inline constexpr std::array<double, 3> kPresetAccelerations{0.2, 0.4, 0.6};

inline std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& shape : detail::preset_table()) names.emplace_back(shape.name);
  return names;
}

/**
 * Sweep specs reproducing one figure panel. Panels without the PT operation have a
 * single r curve; the others carry one curve per t in {0.1, 0.4, 0.9} (r sweeps over
 * [0, pi/4]) or per r in {0.2, 0.4, 0.6} (t sweeps over [0, t_max]).
 */
inline FigurePreset figure_preset(std::string_view name, int steps = kDefaultSteps,
                                  double t_max = kDefaultTimeMax) {
  for (const auto& shape : detail::preset_table()) {
    if (shape.name != name) continue;
    FigurePreset preset{std::string(name), {}};
    SweepSpec base;
    base.scenario = shape.scenario;
    base.pt_target = shape.pt;
    base.alpha = shape.alpha;
    base.sweep = shape.sweep;
    base.steps = steps;
    base.want_negativity = shape.negativity;
    base.want_naqc = !shape.negativity;
    base.range_start = 0.0;
    base.range_end = shape.sweep == SweepVariable::R ? kMaxAcceleration : t_max;

    if (!shape.pt) {
      preset.curves.push_back({preset.name, base});
      return preset;
    }
    const bool over_r = shape.sweep == SweepVariable::R;
    const auto& values = over_r ? kPresetTimes : kPresetAccelerations;
    for (const double v : values) {
      SweepSpec spec = base;
      spec.fixed_value = v;
      preset.curves.push_back({preset.name + (over_r ? "_t=" : "_r=") + detail::format_value(v), spec});
    }
    return preset;
  }
  throw UnknownPresetError("unknown preset '" + std::string(name) + "'");
}

}  // namespace accelqc
