#include <array>
#include <numbers>
#include <string>

#include "mixspin/analysis.hpp"
#include "mixspin/errors.hpp"

namespace mixspin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kCurvePoints = 600;
constexpr int kTrigCurvePoints = 400;
constexpr int kSurfacePoints = 201;

// cell midpoints of (lo, hi); mirror-symmetric about the centre
std::vector<double> open_grid(double lo, double hi, int count) {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) v[static_cast<std::size_t>(k)] = lo + (hi - lo) * (k + 0.5) / count;
  return v;
}

Axis list_axis(Param p, std::vector<double> values) { return Axis{p, std::move(values)}; }

FigurePreset make(std::string id, std::string title, CouplingKind kind, std::map<Param, double> fixed,
                  std::vector<Axis> axes, std::vector<std::string> stated, std::vector<std::string> defaults) {
  SweepSpec spec{Coupling(kind), EvalMode::Canonical, std::move(axes), std::move(fixed)};
  return FigurePreset{std::move(id), std::move(title), std::move(spec), std::move(stated), std::move(defaults)};
}

std::vector<FigurePreset> build_presets() {
  using CK = CouplingKind;
  const std::vector<double> t_family_low = {0.001, 0.25, 0.5, 1.0};
  const std::vector<double> b_family = {0.5, 1.0, 2.0, 4.0};
  const std::vector<double> t_family_2 = {0.05, 0.15, 0.25};

  std::vector<FigurePreset> p;
  p.push_back(make("1a", "inverse-square: N vs R, curves in T, B = 1", CK::InverseSquare, {{Param::B, 1.0}},
                   {list_axis(Param::T, {0.25, 0.5, 1.0, 2.0}), list_axis(Param::R, half_open_grid(3.0, kCurvePoints))},
                   {"B=1"}, {"T curves {0.25,0.5,1,2}", "R grid (0,3], 600 points"}));
  p.push_back(make("1b", "inverse-square: N vs R, curves in B, T = 1", CK::InverseSquare, {{Param::T, 1.0}},
                   {list_axis(Param::B, b_family), list_axis(Param::R, half_open_grid(3.0, kCurvePoints))},
                   {"T=1"}, {"B curves {0.5,1,2,4}", "R grid (0,3], 600 points"}));
  p.push_back(make("2a", "inverse-square: N vs B, curves in T, R = 0.5", CK::InverseSquare, {{Param::R, 0.5}},
                   {list_axis(Param::T, t_family_2), list_axis(Param::B, half_open_grid(6.0, kCurvePoints))},
                   {"R=0.5", "T curves {0.05,0.15,0.25}"}, {"B grid (0,6], 600 points"}));
  p.push_back(make("2b", "inverse-square: N vs B, curves in T, R = 1.5", CK::InverseSquare, {{Param::R, 1.5}},
                   {list_axis(Param::T, t_family_2), list_axis(Param::B, half_open_grid(2.0, kCurvePoints))},
                   {"R=1.5", "T curves {0.05,0.15,0.25}"}, {"B grid (0,2], 600 points"}));
  p.push_back(make("3a", "inverse-square: N vs T, curves in B, R = 0.5", CK::InverseSquare, {{Param::R, 0.5}},
                   {list_axis(Param::B, {0.5, 2.0, 4.0}), list_axis(Param::T, half_open_grid(5.0, kCurvePoints))},
                   {"R=0.5", "B curves {0.5,2,4}"}, {"T grid (0,5], 600 points"}));
  p.push_back(make("3b", "inverse-square: N vs T, curves in B, R = 1.5", CK::InverseSquare, {{Param::R, 1.5}},
                   {list_axis(Param::B, {0.05, 0.15, 0.35}), list_axis(Param::T, half_open_grid(0.6, kCurvePoints))},
                   {"R=1.5", "B curves {0.05,0.15,0.35}"}, {"T grid (0,0.6], 600 points"}));
  p.push_back(make("4", "inverse-square: N over (T, B), R = 0.5", CK::InverseSquare, {{Param::R, 0.5}},
                   {list_axis(Param::T, half_open_grid(5.0, kSurfacePoints)),
                    list_axis(Param::B, half_open_grid(6.0, kSurfacePoints))},
                   {"R=0.5"}, {"T grid (0,5], 201 points", "B grid (0,6], 201 points"}));
  p.push_back(make("5a", "trig: N vs R, curves in T, B = 1", CK::Trigonometric, {{Param::B, 1.0}},
                   {list_axis(Param::T, t_family_low), list_axis(Param::R, open_grid(0.0, kPi, kTrigCurvePoints))},
                   {"B=1"}, {"T curves {0.001,0.25,0.5,1}", "R cell midpoints of (0,pi), 400 points"}));
  p.push_back(make("5b", "trig: N vs R, curves in B, T = 1", CK::Trigonometric, {{Param::T, 1.0}},
                   {list_axis(Param::B, b_family), list_axis(Param::R, open_grid(0.0, kPi, kTrigCurvePoints))},
                   {"T=1"}, {"B curves {0.5,1,2,4}", "R cell midpoints of (0,pi), 400 points"}));
  p.push_back(make("6", "trig: N over (T, R), B = 1", CK::Trigonometric, {{Param::B, 1.0}},
                   {list_axis(Param::T, half_open_grid(2.0, kSurfacePoints)),
                    list_axis(Param::R, open_grid(0.0, kPi, kSurfacePoints))},
                   {"B=1"}, {"T grid (0,2], 201 points", "R cell midpoints of (0,pi), 201 points"}));
  p.push_back(make("7", "trig: N over (B, R), T = 0.001", CK::Trigonometric, {{Param::T, 0.001}},
                   {list_axis(Param::B, half_open_grid(2.0, kSurfacePoints)),
                    list_axis(Param::R, open_grid(0.0, kPi, kSurfacePoints))},
                   {"T=0.001"}, {"B grid (0,2], 201 points", "R cell midpoints of (0,pi), 201 points"}));
  p.push_back(make("8", "trig: N over (T, B), R = pi/2", CK::Trigonometric, {{Param::R, 0.5 * kPi}},
                   {list_axis(Param::T, half_open_grid(1.0, kSurfacePoints)),
                    list_axis(Param::B, half_open_grid(2.0, kSurfacePoints))},
                   {"R=pi/2"}, {"T grid (0,1], 201 points", "B grid (0,2], 201 points"}));
  p.push_back(make("9a", "hyperbolic: N vs R, curves in T, B = 1", CK::Hyperbolic, {{Param::B, 1.0}},
                   {list_axis(Param::T, t_family_low), list_axis(Param::R, half_open_grid(kPi, kCurvePoints))},
                   {"B=1", "T=0.001 curve"}, {"T curves 0.25,0.5,1", "R grid (0,pi], 600 points"}));
  p.push_back(make("9b", "hyperbolic: N vs R, curves in B, T = 1", CK::Hyperbolic, {{Param::T, 1.0}},
                   {list_axis(Param::B, b_family), list_axis(Param::R, half_open_grid(kPi, kCurvePoints))},
                   {"T=1", "R range (0,pi]"}, {"B curves {0.5,1,2,4}", "600 R points"}));
  p.push_back(make("10", "hyperbolic: N over (T, R), B = 1.5", CK::Hyperbolic, {{Param::B, 1.5}},
                   {list_axis(Param::T, half_open_grid(1.0, kSurfacePoints)),
                    Axis{Param::R, LinearRange{-kPi, kPi, kSurfacePoints}}},
                   {"B=1.5", "R range [-pi,pi]"}, {"T grid (0,1], 201 points", "201 R points (R=0 row is singular)"}));
  p.push_back(make("11", "hyperbolic: N over (B, R), T = 0.1", CK::Hyperbolic, {{Param::T, 0.1}},
                   {list_axis(Param::B, half_open_grid(4.0, kSurfacePoints)),
                    Axis{Param::R, LinearRange{-kPi, kPi, kSurfacePoints}}},
                   {"T=0.1", "R range [-pi,pi]"}, {"B grid (0,4], 201 points", "201 R points (R=0 row is singular)"}));
  return p;
}

const std::vector<FigurePreset>& presets() {
  static const std::vector<FigurePreset> table = build_presets();
  return table;
}

constexpr std::array<std::string_view, 16> kIds = {"1a", "1b", "2a", "2b", "3a", "3b", "4",  "5a",
                                                   "5b", "6",  "7",  "8",  "9a", "9b", "10", "11"};

}  // namespace

std::span<const std::string_view> figure_ids() { return kIds; }

const FigurePreset& figure_preset_info(std::string_view id) {
  for (const FigurePreset& p : presets())
    if (p.id == id) return p;
  std::string valid;
  for (std::string_view v : kIds) valid += std::string(valid.empty() ? "" : ", ") + std::string(v);
  throw ArgumentError("unknown figure id '" + std::string(id) + "'; valid ids: " + valid);
}

SweepSpec figure_preset(std::string_view id) { return figure_preset_info(id).spec; }

}  // namespace mixspin
