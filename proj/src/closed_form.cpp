#include "mixspin/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mixspin/errors.hpp"

namespace mixspin {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require_positive_temperature(double t, const char* who) {
  if (std::isnan(t) || std::isinf(t))
    throw DomainError(DomainReason::NonFinite, std::string(who) + ": non-finite temperature");
  if (t <= 0.0)
    throw DomainError(DomainReason::NonPositiveTemperature, std::string(who) + ": temperature must be positive");
}

void require_finite(double j, double b, const char* who) {
  if (!std::isfinite(j) || !std::isfinite(b))
    throw DomainError(DomainReason::NonFinite, std::string(who) + ": non-finite J or B");
}

}  // namespace

std::array<double, 6> Spectrum::sorted_energies() const {
  std::array<double, 6> e{};
  for (std::size_t i = 0; i < levels.size(); ++i) e[i] = levels[i].energy;
  std::sort(e.begin(), e.end());
  return e;
}

Spectrum spectrum(double j, double b) {
  require_finite(j, b, "spectrum");
  const double g = j * kInvSqrt2;
  return Spectrum{{{
      {"|1/2,1>", 1.5 * b},
      {"|-1/2,-1>", -1.5 * b},
      {"m=+1/2 symmetric", 0.5 * b - g},
      {"m=+1/2 antisymmetric", 0.5 * b + g},
      {"m=-1/2 symmetric", -0.5 * b - g},
      {"m=-1/2 antisymmetric", -0.5 * b + g},
  }}};
}

PtElements pt_elements(double j, double b, double temperature) {
  require_positive_temperature(temperature, "pt_elements");
  require_finite(j, b, "pt_elements");

  const double x = std::abs(j) * kInvSqrt2 / temperature;
  const double h = 0.5 * b / temperature;  // B / 2T
  const double shift = std::max(3.0 * std::abs(h), std::abs(h) + x);
  const double sign = j < 0.0 ? -1.0 : 1.0;

  // cosh x and sinh x with e^x pulled into the exponent
  const double damp = std::exp(-2.0 * x);
  const double cosh_part = 0.5 * (1.0 + damp);
  const double sinh_part = -0.5 * std::expm1(-2.0 * x);

  const double w_up = std::exp(3.0 * h - shift);     // |-1/2,-1>
  const double w_down = std::exp(-3.0 * h - shift);  // |1/2,1>
  const double w_minus = std::exp(h + x - shift);    // m = -1/2 sector, e^{B/2T} e^x
  const double w_plus = std::exp(-h + x - shift);    // m = +1/2 sector, e^{-B/2T} e^x

  const double d22 = w_plus * cosh_part;
  const double d44 = w_minus * cosh_part;
  const double z = w_up + w_down + 2.0 * d22 + 2.0 * d44;

  PtElements e;
  e.a11 = w_up / z;
  e.a22 = d22 / z;
  e.a33 = e.a22;
  e.a44 = d44 / z;
  e.a55 = e.a44;
  e.a66 = w_down / z;
  e.a12 = sign * w_minus * sinh_part / z;
  e.a56 = sign * w_plus * sinh_part / z;
  e.log_z = shift + std::log(z);
  return e;
}

double log_partition(double j, double b, double temperature) {
  require_positive_temperature(temperature, "log_partition");
  return pt_elements(j, b, temperature).log_z;
}

double block_min_eigenvalue(double d1, double d2, double od) {
  const double lambda_max = 0.5 * (d1 + d2) + std::hypot(0.5 * (d1 - d2), od);
  if (lambda_max <= 0.0) return 0.5 * (d1 + d2) - std::hypot(0.5 * (d1 - d2), od);
  // product of eigenvalues over the larger one; avoids cancellation when
  // lambda_min is small next to the diagonals
  return (d1 * d2 - od * od) / lambda_max;
}

NegativityResult negativity_from_elements(const PtElements& e, EvalMode mode) {
  auto contribution = [](double d1, double d2, double od) {
    const double lambda = block_min_eigenvalue(d1, d2, od);
    return lambda < -1e-16 * (d1 + d2) ? lambda : 0.0;
  };
  NegativityResult r;
  r.mode = mode;
  r.neg_block_12 = contribution(e.a11, e.a22, e.a12);
  r.neg_block_56 = contribution(e.a55, e.a66, e.a56);
  r.negativity = std::abs(r.neg_block_12) + std::abs(r.neg_block_56);
  return r;
}

NegativityResult negativity_closed(double j, double b, double temperature) {
  return negativity_from_elements(pt_elements(j, b, temperature), EvalMode::Canonical);
}

double vanishing_ratio() { return std::acosh(kGoldenRatio); }

}  // namespace mixspin
