#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mixspin/analysis.hpp"
#include "mixspin/errors.hpp"
#include "mixspin/rng.hpp"

namespace mixspin {

SampleBox default_sample_box(CouplingKind kind) {
  switch (kind) {
    case CouplingKind::Trigonometric: return {0.2, std::numbers::pi - 0.2, 0.0, 4.0, 0.05, 3.0};
    case CouplingKind::Constant: return {-10.0, 10.0, 0.0, 4.0, 0.05, 3.0};  // R range read as J
    default: return {0.3, 3.0, 0.0, 4.0, 0.05, 3.0};
  }
}

namespace {

constexpr std::size_t kWorstListSize = 10;
constexpr int kMaxRejections = 10000;

bool sign_differs(double a, double b) { return a != 0.0 && b != 0.0 && std::signbit(a) != std::signbit(b); }

}  // namespace

ValidationReport validate_modes(EvalMode mode_a, EvalMode mode_b, std::span<const CouplingKind> kinds,
                                std::size_t sample_count, std::uint64_t seed, const std::optional<SampleBox>& box) {
  if (sample_count < 1) throw ArgumentError("validate_modes: sample_count must be at least 1");
  if (kinds.empty()) throw ArgumentError("validate_modes: no coupling kinds given");
  for (CouplingKind k : kinds)
    if (k == CouplingKind::Constant && (mode_a == EvalMode::Published || mode_b == EvalMode::Published))
      throw ArgumentError("validate_modes: published mode has no formulas for the constant coupling");

  ValidationReport rep;
  rep.mode_a = mode_a;
  rep.mode_b = mode_b;
  rep.samples = sample_count;

  SplitMix64 rng(seed);
  std::vector<ValidationSample> all;
  all.reserve(sample_count);

  for (std::size_t i = 0; i < sample_count; ++i) {
    const CouplingKind kind = kinds[i % kinds.size()];
    const SampleBox bx = box.value_or(default_sample_box(kind));
    const Coupling coupling(kind);

    double r = 0.0, b = 0.0, t = 0.0, j = 0.0;
    int tries = 0;
    for (;; ++tries) {
      if (tries == kMaxRejections) throw ArgumentError("validate_modes: sample box admits no point with x <= max_x");
      r = rng.uniform(bx.r_lo, bx.r_hi);
      b = rng.uniform(bx.b_lo, bx.b_hi);
      t = rng.uniform(bx.t_lo, bx.t_hi);
      if (kind != CouplingKind::Constant && !domain_check(coupling, r).ok) continue;
      j = kind == CouplingKind::Constant ? r : coupling_strength(coupling, r);
      if (std::abs(j) / (std::numbers::sqrt2 * t) <= bx.max_x) break;
    }

    const SweepRecord ra = evaluate_point(coupling, mode_a, r, b, t);
    const SweepRecord rb = evaluate_point(coupling, mode_b, r, b, t);
    if (ra.status == RecordStatus::EvaluationOverflow || rb.status == RecordStatus::EvaluationOverflow) {
      ++rep.overflow_count;
      continue;
    }
    if (ra.status != RecordStatus::Ok || rb.status != RecordStatus::Ok) continue;

    const PtElements ea = elements_for(coupling, mode_a, r, b, t);
    const PtElements eb = elements_for(coupling, mode_b, r, b, t);
    if (sign_differs(ea.a12, eb.a12) || sign_differs(ea.a56, eb.a56)) ++rep.sign_mismatch_count;

    all.push_back({kind, r, j, b, t, ra.negativity, rb.negativity, std::abs(ra.negativity - rb.negativity)});
  }

  std::stable_sort(all.begin(), all.end(),
                   [](const ValidationSample& x, const ValidationSample& y) { return x.delta > y.delta; });
  if (!all.empty()) {
    rep.argmax = all.front();
    rep.max_abs_delta = all.front().delta;
  }
  all.resize(std::min(all.size(), kWorstListSize));
  rep.worst = std::move(all);
  return rep;
}

}  // namespace mixspin
