#pragma once

// Parameter sweeps, critical-threshold search, plateau detection, figure
// presets and cross-mode audits.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mixspin/closed_form.hpp"
#include "mixspin/couplings.hpp"
#include "mixspin/negativity.hpp"

namespace mixspin {

// Sweep coordinates. J replaces R for the constant coupling.
enum class Param { R, J, B, T };

std::string_view to_string(Param p);

struct LinearRange {
  double start;
  double stop;
  int count;

  std::vector<double> values() const;
};

struct Axis {
  Param param;
  std::variant<std::vector<double>, LinearRange> grid;

  std::vector<double> values() const;
  std::size_t size() const;
};

// Evenly spaced points on (0, stop]: stop * k / count for k = 1..count.
std::vector<double> half_open_grid(double stop, int count);

struct SweepSpec {
  Coupling coupling{CouplingKind::InverseSquare};
  EvalMode mode = EvalMode::Canonical;
  std::vector<Axis> axes;
  std::map<Param, double> fixed;

  // Throws ArgumentError when the spec is inconsistent.
  void validate() const;
  std::size_t point_count() const;
};

enum class RecordStatus { Ok, DomainError, EvaluationOverflow };

std::string_view to_string(RecordStatus s);

struct SweepRecord {
  CouplingKind kind = CouplingKind::InverseSquare;
  EvalMode mode = EvalMode::Canonical;
  std::optional<double> r;  // absent for the constant coupling
  double j = 0.0;
  double b = 0.0;
  double t = 0.0;
  double negativity = 0.0;
  double log_z = 0.0;
  double neg_block_12 = 0.0;
  double neg_block_56 = 0.0;
  RecordStatus status = RecordStatus::Ok;
};

// One evaluation point. For the constant coupling `r_or_j` is J and the
// coupling's j0 is ignored.
SweepRecord evaluate_point(const Coupling& coupling, EvalMode mode, double r_or_j, double b, double t);

// Same as evaluate_point but also returns the partially transposed elements.
// The oracle's elements are read off the 6x6 partial transpose.
PtElements elements_for(const Coupling& coupling, EvalMode mode, double r_or_j, double b, double t);

// Grid evaluation, one record per point in row-major order of the declared
// axes (first axis outermost). The parallel kernel splits the flat index
// across `workers` OpenMP threads; its output is bit-identical to the
// serial reference.
std::vector<SweepRecord> sweep(const SweepSpec& spec, int workers);
std::vector<SweepRecord> sweep_serial(const SweepSpec& spec);

struct CriticalPoint {
  Param axis = Param::R;
  double value = 0.0;
  double epsilon = 0.0;
  double lo = 0.0;  // N > epsilon here
  double hi = 0.0;  // N <= epsilon here
  int iterations = 0;
  // The zero set depends only on J/T, so a crossing in B is an epsilon
  // contour rather than a true boundary.
  bool epsilon_contour = false;
};

inline constexpr int kCoarseScanPoints = 64;

// Scans `from -> to` at 64 points for the first step where N drops from
// above epsilon to at most epsilon, then bisects that step. `from` may exceed
// `to` (e.g. approaching R = 0 from below). Throws NoThreshold when no such
// step exists.
CriticalPoint find_threshold(const Coupling& coupling, EvalMode mode, Param axis,
                             const std::map<Param, double>& fixed, double from, double to, double epsilon);

struct SeriesPoint {
  double x;
  double n;
};

struct Plateau {
  std::size_t first;
  std::size_t last;  // inclusive
  double x_begin;
  double x_end;
  double mean;
};

inline constexpr std::size_t kMinPlateauPoints = 3;

// Maximal runs (at least kMinPlateauPoints long) of N > epsilon whose spread
// stays within value_tol.
std::vector<Plateau> detect_plateau(std::span<const SeriesPoint> series, double value_tol, double epsilon);

struct FigurePreset {
  std::string id;
  std::string title;
  SweepSpec spec;
  std::vector<std::string> stated;    // values fixed by the figure itself
  std::vector<std::string> defaults;  // values this tool had to choose
};

std::span<const std::string_view> figure_ids();
const FigurePreset& figure_preset_info(std::string_view id);
SweepSpec figure_preset(std::string_view id);

struct SampleBox {
  double r_lo, r_hi;
  double b_lo, b_hi;
  double t_lo, t_hi;
  // rejection bound on x = |J| / (sqrt2 T)
  double max_x = std::numeric_limits<double>::infinity();
};

// R in [0.3, 3] (trigonometric: [0.2, pi - 0.2]), B in [0, 4], T in [0.05, 3].
SampleBox default_sample_box(CouplingKind kind);

struct ValidationSample {
  CouplingKind kind;
  double r, j, b, t;
  double n_a, n_b;
  double delta;
};

struct ValidationReport {
  EvalMode mode_a = EvalMode::Canonical;
  EvalMode mode_b = EvalMode::Oracle;
  std::size_t samples = 0;
  double max_abs_delta = 0.0;
  std::optional<ValidationSample> argmax;
  std::vector<ValidationSample> worst;  // up to 10, largest delta first
  std::size_t sign_mismatch_count = 0;
  std::size_t overflow_count = 0;
};

// Samples are drawn round-robin over `kinds` from one SplitMix64 stream:
// sample i uses kinds[i % kinds.size()] and draws R, then B, then T.
ValidationReport validate_modes(EvalMode mode_a, EvalMode mode_b, std::span<const CouplingKind> kinds,
                                std::size_t sample_count, std::uint64_t seed,
                                const std::optional<SampleBox>& box = std::nullopt);

}  // namespace mixspin
