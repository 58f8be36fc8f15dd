#pragma once

// Analytic engine over the unified parameterization (J, B, T). All three
// long-range laws reduce to the same two-site problem with J = J(R), so the
// formulas live here once and couplings supply J.
//
// Stabilization: every exponential is evaluated relative to the largest
// exponent max{3|B|/2, |B|/2 + |J|/sqrt 2} / T, so nothing overflows for any
// T > 0.

#include <array>
#include <string_view>

#include "mixspin/negativity.hpp"

namespace mixspin {

struct EnergyLevel {
  std::string_view label;
  double energy;
};

struct Spectrum {
  std::array<EnergyLevel, 6> levels;

  std::array<double, 6> sorted_energies() const;
};

// {+3B/2, -3B/2, B/2 -+ J/sqrt2, -B/2 -+ J/sqrt2}
Spectrum spectrum(double j, double b);

// Independent entries of the partially transposed thermal state in the
// block-diagonal ordering (BasisOrder::Paper):
//
//   [a11 a12          ]
//   [a12 a22          ]
//   [        a33      ]
//   [            a44  ]
//   [           a55 a56]
//   [           a56 a66]
struct PtElements {
  double a11 = 0.0, a22 = 0.0, a33 = 0.0, a44 = 0.0, a55 = 0.0, a66 = 0.0;
  double a12 = 0.0, a56 = 0.0;
  double log_z = 0.0;

  double trace() const { return a11 + a22 + a33 + a44 + a55 + a66; }
};

// Coherences carry the sign of J (positive for J > 0).
PtElements pt_elements(double j, double b, double temperature);

double log_partition(double j, double b, double temperature);

NegativityResult negativity_closed(double j, double b, double temperature);

// Smallest eigenvalue of [[d1, od], [od, d2]] for d1, d2 >= 0.
double block_min_eigenvalue(double d1, double d2, double od);

// Block rule shared by the canonical and published engines: each 2x2 block
// contributes |lambda_min| when lambda_min < -1e-16 (d1 + d2). The 1x1
// blocks never contribute.
NegativityResult negativity_from_elements(const PtElements& e, EvalMode mode);

// Boundary of the entangled region: N > 0 iff cosh(|J| / (sqrt2 T)) exceeds
// the golden ratio, independent of B.
inline constexpr double kGoldenRatio = 1.6180339887498948482;
double vanishing_ratio();  // x* = arccosh(golden ratio) ~ 1.0612751

}  // namespace mixspin
