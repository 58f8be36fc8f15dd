#include "mixspin/couplings.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace mixspin {

const char* to_string(DomainReason reason) {
  switch (reason) {
    case DomainReason::Ok: return "Ok";
    case DomainReason::Singular: return "Singular";
    case DomainReason::NonFinite: return "NonFinite";
    case DomainReason::NonPositiveTemperature: return "NonPositiveTemperature";
  }
  return "?";
}

std::string_view to_string(CouplingKind kind) {
  switch (kind) {
    case CouplingKind::InverseSquare: return "inverse-square";
    case CouplingKind::Trigonometric: return "trig";
    case CouplingKind::Hyperbolic: return "hyperbolic";
    case CouplingKind::Constant: return "constant";
  }
  return "?";
}

CouplingKind parse_coupling_kind(std::string_view name) {
  if (name == "inverse-square") return CouplingKind::InverseSquare;
  if (name == "trig") return CouplingKind::Trigonometric;
  if (name == "hyperbolic") return CouplingKind::Hyperbolic;
  if (name == "constant") return CouplingKind::Constant;
  throw ArgumentError("unknown coupling '" + std::string(name) +
                      "' (expected inverse-square|trig|hyperbolic|constant)");
}

Coupling::Coupling(CouplingKind kind, double j0) : kind_(kind), j0_(j0) {
  if (!std::isfinite(j0)) throw ArgumentError("coupling strength j0 must be finite");
}

DomainVerdict domain_check(const Coupling& c, double r) {
  if (!std::isfinite(r)) return {false, DomainReason::NonFinite};
  switch (c.kind()) {
    case CouplingKind::InverseSquare:
    case CouplingKind::Hyperbolic:
      if (std::abs(r) < kSingularTolerance) return {false, DomainReason::Singular};
      break;
    case CouplingKind::Trigonometric: {
      const double n = std::round(r / std::numbers::pi);
      if (std::abs(r - n * std::numbers::pi) < kSingularTolerance) return {false, DomainReason::Singular};
      break;
    }
    case CouplingKind::Constant:
      break;
  }
  return {};
}

namespace {

// sin^2 folded into [0, pi/2] so R and pi - R map to the same argument
double folded_sin_squared(double r) {
  double x = std::fmod(std::abs(r), std::numbers::pi);
  if (x > 0.5 * std::numbers::pi) x = std::numbers::pi - x;
  const double s = std::sin(x);
  return s * s;
}

}  // namespace

double coupling_strength(const Coupling& c, double r) {
  const DomainVerdict v = domain_check(c, r);
  if (!v.ok)
    throw DomainError(v.reason, std::string("coupling_strength: ") + to_string(v.reason) + " R = " +
                                    std::to_string(r) + " for " + std::string(to_string(c.kind())));
  const double a = std::abs(r);
  switch (c.kind()) {
    case CouplingKind::InverseSquare: return c.j0() / (a * a);
    case CouplingKind::Trigonometric: return c.j0() / folded_sin_squared(a);
    case CouplingKind::Hyperbolic: {
      const double s = std::sinh(a);
      return c.j0() / (s * s);
    }
    case CouplingKind::Constant: return c.j0();
  }
  return c.j0();
}

}  // namespace mixspin
