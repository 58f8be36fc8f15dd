#include <cmath>
#include <limits>
#include <string>

#include "mixspin/analysis.hpp"
#include "mixspin/errors.hpp"
#include "mixspin/paper_mode.hpp"
#include "mixspin/spin_core.hpp"

namespace mixspin {

std::string_view to_string(EvalMode mode) {
  switch (mode) {
    case EvalMode::Canonical: return "canonical";
    case EvalMode::Published: return "published";
    case EvalMode::Oracle: return "oracle";
  }
  return "?";
}

EvalMode parse_eval_mode(std::string_view name) {
  if (name == "canonical") return EvalMode::Canonical;
  if (name == "published") return EvalMode::Published;
  if (name == "oracle") return EvalMode::Oracle;
  throw ArgumentError("unknown mode '" + std::string(name) + "' (expected canonical|published|oracle)");
}

std::string_view to_string(Param p) {
  switch (p) {
    case Param::R: return "R";
    case Param::J: return "J";
    case Param::B: return "B";
    case Param::T: return "T";
  }
  return "?";
}

std::string_view to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::Ok: return "Ok";
    case RecordStatus::DomainError: return "DomainError";
    case RecordStatus::EvaluationOverflow: return "EvaluationOverflow";
  }
  return "?";
}

namespace {

void check_published_coupling(const Coupling& c) {
  if (c.kind() == CouplingKind::Constant)
    throw ArgumentError("published mode has no formulas for the constant coupling");
  if (c.j0() != 1.0) throw ArgumentError("published formulas fix j0 = 1");
}

void check_thermal(double b, double t) {
  if (!std::isfinite(b) || !std::isfinite(t))
    throw DomainError(DomainReason::NonFinite, "non-finite B or T");
  if (t <= 0.0) throw DomainError(DomainReason::NonPositiveTemperature, "temperature must be positive");
}

double exchange_for(const Coupling& c, double r_or_j) {
  return c.kind() == CouplingKind::Constant ? r_or_j : coupling_strength(c, r_or_j);
}

PtElements oracle_elements(double j, double b, double t) {
  const DenseSym6 h = build_hamiltonian(j, b);
  const DenseSym6 pt = partial_transpose(gibbs_state(h, t)).reordered(BasisOrder::Paper);
  PtElements e;
  e.a11 = pt(0, 0);
  e.a22 = pt(1, 1);
  e.a33 = pt(2, 2);
  e.a44 = pt(3, 3);
  e.a55 = pt(4, 4);
  e.a66 = pt(5, 5);
  e.a12 = pt(0, 1);
  e.a56 = pt(4, 5);
  e.log_z = thermal_log_partition(h, t);
  return e;
}

}  // namespace

PtElements elements_for(const Coupling& coupling, EvalMode mode, double r_or_j, double b, double t) {
  check_thermal(b, t);
  if (mode == EvalMode::Published) {
    check_published_coupling(coupling);
    return pt_elements_published(coupling.kind(), r_or_j, b, t);
  }
  const double j = exchange_for(coupling, r_or_j);
  return mode == EvalMode::Canonical ? pt_elements(j, b, t) : oracle_elements(j, b, t);
}

SweepRecord evaluate_point(const Coupling& coupling, EvalMode mode, double r_or_j, double b, double t) {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  SweepRecord rec;
  rec.kind = coupling.kind();
  rec.mode = mode;
  rec.b = b;
  rec.t = t;
  rec.j = kNaN;
  rec.negativity = rec.log_z = rec.neg_block_12 = rec.neg_block_56 = kNaN;
  if (coupling.kind() != CouplingKind::Constant) rec.r = r_or_j;
  if (mode == EvalMode::Published) check_published_coupling(coupling);

  try {
    check_thermal(b, t);
    rec.j = exchange_for(coupling, r_or_j);
    if (!std::isfinite(rec.j)) throw DomainError(DomainReason::NonFinite, "non-finite exchange strength");

    NegativityResult n;
    switch (mode) {
      case EvalMode::Canonical: {
        const PtElements e = pt_elements(rec.j, b, t);
        n = negativity_from_elements(e, mode);
        rec.log_z = e.log_z;
        break;
      }
      case EvalMode::Published: {
        const PtElements e = pt_elements_published(coupling.kind(), r_or_j, b, t);
        n = negativity_from_elements(e, mode);
        rec.log_z = e.log_z;
        break;
      }
      case EvalMode::Oracle: {
        const DenseSym6 h = build_hamiltonian(rec.j, b);
        n = negativity_of_state(partial_transpose(gibbs_state(h, t)));
        rec.log_z = thermal_log_partition(h, t);
        break;
      }
    }
    rec.negativity = n.negativity;
    rec.neg_block_12 = n.neg_block_12;
    rec.neg_block_56 = n.neg_block_56;
  } catch (const DomainError&) {
    rec.status = RecordStatus::DomainError;
  } catch (const EvaluationOverflow&) {
    rec.status = RecordStatus::EvaluationOverflow;
  }
  return rec;
}

}  // namespace mixspin
