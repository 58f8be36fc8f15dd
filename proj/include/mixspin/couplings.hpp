#pragma once

#include <string_view>

#include "mixspin/errors.hpp"

namespace mixspin {

// Long-range exchange laws J(R). Constant ignores R and returns j0, which
// lets sweeps and tests address the exchange strength directly.
enum class CouplingKind { InverseSquare, Trigonometric, Hyperbolic, Constant };

// CLI names: inverse-square | trig | hyperbolic | constant
std::string_view to_string(CouplingKind kind);
CouplingKind parse_coupling_kind(std::string_view name);

class Coupling {
 public:
  explicit Coupling(CouplingKind kind, double j0 = 1.0);

  CouplingKind kind() const { return kind_; }
  double j0() const { return j0_; }

 private:
  CouplingKind kind_;
  double j0_;
};

struct DomainVerdict {
  bool ok = true;
  DomainReason reason = DomainReason::Ok;
};

// Distance from a singular point below which R is rejected.
inline constexpr double kSingularTolerance = 1e-12;

DomainVerdict domain_check(const Coupling& c, double r);

// J0/R^2, J0/sin^2 R, J0/sinh^2 R or J0. Throws DomainError on a singular
// or non-finite R.
double coupling_strength(const Coupling& c, double r);

}  // namespace mixspin
