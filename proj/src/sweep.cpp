#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <set>
#include <string>

#include "mixspin/analysis.hpp"
#include "mixspin/errors.hpp"

namespace mixspin {

std::vector<double> LinearRange::values() const {
  std::vector<double> v(static_cast<std::size_t>(std::max(count, 0)));
  if (count == 1) {
    v[0] = start;
    return v;
  }
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = start + step * i;
  if (count > 1) v.back() = stop;
  return v;
}

std::vector<double> Axis::values() const {
  if (const auto* list = std::get_if<std::vector<double>>(&grid)) return *list;
  return std::get<LinearRange>(grid).values();
}

std::size_t Axis::size() const {
  if (const auto* list = std::get_if<std::vector<double>>(&grid)) return list->size();
  return static_cast<std::size_t>(std::max(std::get<LinearRange>(grid).count, 0));
}

std::vector<double> half_open_grid(double stop, int count) {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) v[static_cast<std::size_t>(k - 1)] = stop * k / count;
  return v;
}

namespace {

Param coordinate_param(const Coupling& c) {
  return c.kind() == CouplingKind::Constant ? Param::J : Param::R;
}

}  // namespace

void SweepSpec::validate() const {
  const Param coord = coordinate_param(coupling);
  const std::set<Param> required = {coord, Param::B, Param::T};

  if (mode == EvalMode::Published) {
    if (coupling.kind() == CouplingKind::Constant)
      throw ArgumentError("sweep: published mode has no formulas for the constant coupling");
    if (coupling.j0() != 1.0) throw ArgumentError("sweep: published formulas fix j0 = 1");
  }

  std::set<Param> seen;
  auto claim = [&](Param p, const char* where) {
    if (!required.contains(p))
      throw ArgumentError(std::string("sweep: parameter ") + std::string(to_string(p)) + " does not apply to the " +
                          std::string(to_string(coupling.kind())) + " coupling");
    if (!seen.insert(p).second)
      throw ArgumentError(std::string("sweep: parameter ") + std::string(to_string(p)) + " given twice (" + where + ")");
  };

  for (const Axis& a : axes) {
    claim(a.param, "axis");
    if (const auto* range = std::get_if<LinearRange>(&a.grid)) {
      if (range->count < 2) throw ArgumentError("sweep: range count must be at least 2");
      if (!(range->start < range->stop)) throw ArgumentError("sweep: range start must be below stop");
      if (!std::isfinite(range->start) || !std::isfinite(range->stop))
        throw ArgumentError("sweep: range bounds must be finite");
    } else {
      const auto& list = std::get<std::vector<double>>(a.grid);
      if (list.empty()) throw ArgumentError("sweep: empty value list");
      for (double v : list)
        if (!std::isfinite(v)) throw ArgumentError("sweep: non-finite axis value");
    }
    if (a.param == Param::T)
      for (double v : a.values())
        if (!(v > 0.0)) throw ArgumentError("sweep: temperatures must be positive");
  }
  for (const auto& [p, v] : fixed) {
    claim(p, "fixed");
    if (!std::isfinite(v)) throw ArgumentError("sweep: non-finite fixed value");
    if (p == Param::T && !(v > 0.0)) throw ArgumentError("sweep: temperature must be positive");
  }
  if (seen != required) {
    std::string missing;
    for (Param p : required)
      if (!seen.contains(p)) missing += std::string(missing.empty() ? "" : ", ") + std::string(to_string(p));
    throw ArgumentError("sweep: no value for " + missing);
  }
}

std::size_t SweepSpec::point_count() const {
  std::size_t n = 1;
  for (const Axis& a : axes) n *= a.size();
  return n;
}

namespace {

struct Grid {
  Coupling coupling;
  EvalMode mode;
  std::vector<std::vector<double>> axis_values;
  std::vector<int> axis_slot;  // 0 = coordinate, 1 = B, 2 = T
  std::array<double, 3> fixed{};
  std::size_t total = 0;
};

int slot_of(Param p) {
  switch (p) {
    case Param::R:
    case Param::J: return 0;
    case Param::B: return 1;
    case Param::T: return 2;
  }
  return 0;
}

Grid prepare(const SweepSpec& spec) {
  spec.validate();
  Grid g{spec.coupling, spec.mode, {}, {}, {}, spec.point_count()};
  for (const Axis& a : spec.axes) {
    g.axis_values.push_back(a.values());
    g.axis_slot.push_back(slot_of(a.param));
  }
  for (const auto& [p, v] : spec.fixed) g.fixed[static_cast<std::size_t>(slot_of(p))] = v;
  return g;
}

SweepRecord evaluate_flat(const Grid& g, std::size_t flat) {
  std::array<double, 3> p = g.fixed;
  // row-major: last axis varies fastest
  for (std::size_t a = g.axis_values.size(); a-- > 0;) {
    const auto& vals = g.axis_values[a];
    p[static_cast<std::size_t>(g.axis_slot[a])] = vals[flat % vals.size()];
    flat /= vals.size();
  }
  return evaluate_point(g.coupling, g.mode, p[0], p[1], p[2]);
}

}  // namespace

std::vector<SweepRecord> sweep_serial(const SweepSpec& spec) {
  const Grid g = prepare(spec);
  std::vector<SweepRecord> out(g.total);
  for (std::size_t i = 0; i < g.total; ++i) out[i] = evaluate_flat(g, i);
  return out;
}

std::vector<SweepRecord> sweep(const SweepSpec& spec, int workers) {
  const Grid g = prepare(spec);
  std::vector<SweepRecord> out(g.total);
  const auto n = static_cast<std::ptrdiff_t>(g.total);
  const int threads = std::max(1, workers);
  std::exception_ptr failure;
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = evaluate_flat(g, static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(mixspin_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace mixspin
