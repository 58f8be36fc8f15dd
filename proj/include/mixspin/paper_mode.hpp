#pragma once

// The element formulas and partition functions exactly as printed for each
// coupling law (J0 = 1), evaluated raw so that their fidelity and overflow
// behaviour can be audited against the canonical engine. Any non-finite
// sub-expression raises EvaluationOverflow instead of leaking inf or NaN.

#include <array>
#include <variant>

#include "mixspin/closed_form.hpp"
#include "mixspin/couplings.hpp"

namespace mixspin {

struct TrigIntermediates {
  double varphi;     // 3 - 4 cos 2R + cos 4R
  double delta1;     // B cos 2R csc^4 R / 2T
  double delta2;     // B (3 + cos 4R) csc^4 R / 8T
  double mu_minus;
  double mu_plus;
};

struct HyperbolicIntermediates {
  double eta;
  double xi;
};

using PublishedIntermediates = std::variant<std::monostate, TrigIntermediates, HyperbolicIntermediates>;

PublishedIntermediates published_intermediates(CouplingKind kind, double r, double b, double temperature);

// Printed eigenvalues {+3B/2, -3B/2, W+, W-, Q+, Q-}, ascending.
std::array<double, 6> spectrum_published(CouplingKind kind, double r, double b);

// Printed Z (not its logarithm); raises EvaluationOverflow when it is not finite.
double partition_published(CouplingKind kind, double r, double b, double temperature);

// Elements with printed signs; log_z = ln(printed Z). For the trigonometric
// law the trace is not guaranteed to be 1 and is left for the caller to audit.
PtElements pt_elements_published(CouplingKind kind, double r, double b, double temperature);

NegativityResult negativity_published(CouplingKind kind, double r, double b, double temperature);

}  // namespace mixspin
