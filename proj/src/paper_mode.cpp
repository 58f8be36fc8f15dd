#include "mixspin/paper_mode.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <string>

#include "mixspin/errors.hpp"

namespace mixspin {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

void check_inputs(CouplingKind kind, double r, double b, double t, const char* who) {
  if (kind == CouplingKind::Constant)
    throw ArgumentError(std::string(who) + ": no published formulas for the constant coupling");
  if (!std::isfinite(t) || !std::isfinite(b))
    throw DomainError(DomainReason::NonFinite, std::string(who) + ": non-finite B or T");
  if (t <= 0.0)
    throw DomainError(DomainReason::NonPositiveTemperature, std::string(who) + ": temperature must be positive");
  const DomainVerdict v = domain_check(Coupling(kind), r);
  if (!v.ok)
    throw DomainError(v.reason, std::string(who) + ": " + to_string(v.reason) + " R = " + std::to_string(r));
}

void require_finite(std::initializer_list<double> values, const char* what) {
  for (double v : values)
    if (!std::isfinite(v))
      throw EvaluationOverflow(std::string("published formula overflow in ") + what);
}

struct Raw {
  PtElements e;
  double z;
};

Raw inverse_square(double r, double b, double t) {
  const double arg = 1.0 / (kSqrt2 * r * r * t);
  const double e3 = std::exp(3.0 * b / (2.0 * t));
  const double em3 = std::exp(-3.0 * b / (2.0 * t));
  const double e1 = std::exp(b / (2.0 * t));
  const double em1 = std::exp(-b / (2.0 * t));
  const double ch = std::cosh(arg);
  const double sh = std::sinh(arg);
  const double z = 2.0 * (std::cosh(3.0 * b / (2.0 * t)) + 2.0 * std::cosh(b / (2.0 * t)) * ch);
  require_finite({arg, e3, em3, e1, em1, ch, sh, z}, "inverse-square elements");

  Raw out{{}, z};
  out.e.a11 = e3 / z;
  out.e.a12 = -e1 * sh / z;
  out.e.a22 = em1 * ch / z;
  out.e.a33 = out.e.a22;
  out.e.a44 = e1 * ch / z;
  out.e.a55 = out.e.a44;
  out.e.a56 = -em1 * sh / z;
  out.e.a66 = em3 / z;
  return out;
}

TrigIntermediates trig_intermediates(double r, double b, double t) {
  const double s = std::sin(r);
  const double csc4 = 1.0 / (s * s * s * s);
  const double c2 = std::cos(2.0 * r);
  const double c4 = std::cos(4.0 * r);
  TrigIntermediates m{};
  m.varphi = 3.0 - 4.0 * c2 + c4;
  m.delta1 = b * c2 * csc4 / (2.0 * t);
  m.delta2 = b * (3.0 + c4) * csc4 / (8.0 * t);
  const double mu_arg = csc4 * (3.0 * b + 4.0 * b * c2 + b * c4 + 8.0 * kSqrt2 * std::sqrt(s * s * s * s)) / (16.0 * t);
  m.mu_minus = std::exp(-mu_arg);
  m.mu_plus = std::exp(mu_arg);
  require_finite({csc4, m.varphi, m.delta1, m.delta2, mu_arg, m.mu_minus, m.mu_plus}, "trigonometric intermediates");
  return m;
}

Raw trigonometric(double r, double b, double t) {
  const TrigIntermediates m = trig_intermediates(r, b, t);
  const double d1 = m.delta1;
  const double d2 = m.delta2;
  const double mp = m.mu_plus;
  const double mm = m.mu_minus;

  const double bracket = std::exp(d1 + 2.0 * d2) + std::exp(2.0 * d1 + d2) + mp * std::exp((5.0 * d1 - d2) / 2.0) +
                         mp * mp * std::exp(d2) + mp * std::exp((-d1 + 5.0 * d2) / 2.0) + mp * mp * std::exp(d1);
  const double z = mm * std::exp(-(d1 + d2)) * bracket;

  const double e3 = std::exp(3.0 * b / (2.0 * t));
  const double em3 = std::exp(-3.0 * b / (2.0 * t));
  const double ep1 = std::exp(d1);
  const double ep2 = std::exp(d2);
  const double en1 = std::exp(-d1);
  const double en2 = std::exp(-d2);
  require_finite({bracket, z, e3, em3, ep1, ep2, en1, en2}, "trigonometric elements");

  Raw out{{}, z};
  out.e.a11 = e3 / z;
  out.e.a12 = mm / (2.0 * z) * (-en1 + en2);
  out.e.a22 = mp / (2.0 * z) * (ep1 + ep2);
  out.e.a33 = out.e.a22;
  out.e.a44 = mm / (2.0 * z) * (en1 + en2);
  out.e.a55 = out.e.a44;
  out.e.a56 = mp / (2.0 * z) * (ep1 - ep2);
  out.e.a66 = em3 / z;
  return out;
}

HyperbolicIntermediates hyperbolic_intermediates(double r, double b, double t) {
  const double sh = std::sinh(r);
  const double sinh4 = sh * sh * sh * sh;
  const double csch4 = 1.0 / sinh4;
  HyperbolicIntermediates m{};
  m.eta = std::exp(-(b - kSqrt2 * csch4 * std::sqrt(sinh4)) / (2.0 * t));
  m.xi = std::exp(-(b + kSqrt2 / std::sqrt(sinh4)) / (2.0 * t));
  require_finite({sinh4, csch4, m.eta, m.xi}, "hyperbolic intermediates");
  return m;
}

Raw hyperbolic(double r, double b, double t) {
  const HyperbolicIntermediates m = hyperbolic_intermediates(r, b, t);
  const double eb = std::exp(b / t);
  const double z = 2.0 * std::cosh(3.0 * b / (2.0 * t)) + (1.0 + eb) * (m.xi + m.eta);
  const double e3 = std::exp(3.0 * b / (2.0 * t));
  const double em3 = std::exp(-3.0 * b / (2.0 * t));
  require_finite({eb, z, e3, em3}, "hyperbolic elements");

  Raw out{{}, z};
  out.e.a11 = e3 / z;
  out.e.a12 = m.eta / (2.0 * z) * (1.0 - eb);
  out.e.a22 = m.xi / (2.0 * z) * (1.0 + eb);
  out.e.a33 = out.e.a22;
  out.e.a44 = m.eta / (2.0 * z) * (1.0 + eb);
  out.e.a55 = out.e.a44;
  out.e.a56 = m.xi / (2.0 * z) * (1.0 - eb);
  out.e.a66 = em3 / z;
  return out;
}

Raw evaluate_raw(CouplingKind kind, double r, double b, double t) {
  switch (kind) {
    case CouplingKind::InverseSquare: return inverse_square(r, b, t);
    case CouplingKind::Trigonometric: return trigonometric(r, b, t);
    case CouplingKind::Hyperbolic: return hyperbolic(r, b, t);
    case CouplingKind::Constant: break;
  }
  throw ArgumentError("no published formulas for the constant coupling");
}

}  // namespace

PublishedIntermediates published_intermediates(CouplingKind kind, double r, double b, double temperature) {
  check_inputs(kind, r, b, temperature, "published_intermediates");
  switch (kind) {
    case CouplingKind::Trigonometric: return trig_intermediates(r, b, temperature);
    case CouplingKind::Hyperbolic: return hyperbolic_intermediates(r, b, temperature);
    default: return std::monostate{};
  }
}

std::array<double, 6> spectrum_published(CouplingKind kind, double r, double b) {
  check_inputs(kind, r, b, 1.0, "spectrum_published");
  double w_plus = 0.0, w_minus = 0.0, q_plus = 0.0, q_minus = 0.0;
  switch (kind) {
    case CouplingKind::InverseSquare: {
      const double g = kSqrt2 / (2.0 * r * r);
      w_plus = -b / 2.0 + g;
      w_minus = -b / 2.0 - g;
      q_plus = b / 2.0 + g;
      q_minus = b / 2.0 - g;
      break;
    }
    case CouplingKind::Trigonometric: {
      const double phi = 3.0 - 4.0 * std::cos(2.0 * r) + std::cos(4.0 * r);
      const double root = std::sqrt(phi);
      w_plus = (-b * phi + 4.0 * root) / (2.0 * phi);
      w_minus = (b * phi + 4.0 * root) / (2.0 * phi);
      q_plus = (-b * phi - 4.0 * root) / (2.0 * phi);
      q_minus = (b * phi - 4.0 * root) / (2.0 * phi);
      break;
    }
    case CouplingKind::Hyperbolic: {
      const double sh = std::sinh(r);
      const double g = kSqrt2 / std::sqrt(sh * sh * sh * sh);
      w_plus = 0.5 * (b + g);
      w_minus = 0.5 * (-b + g);
      q_plus = 0.5 * (b - g);
      q_minus = 0.5 * (-b - g);
      break;
    }
    case CouplingKind::Constant: break;
  }
  std::array<double, 6> e = {1.5 * b, -1.5 * b, w_plus, w_minus, q_plus, q_minus};
  std::sort(e.begin(), e.end());
  return e;
}

double partition_published(CouplingKind kind, double r, double b, double temperature) {
  check_inputs(kind, r, b, temperature, "partition_published");
  return evaluate_raw(kind, r, b, temperature).z;
}

PtElements pt_elements_published(CouplingKind kind, double r, double b, double temperature) {
  check_inputs(kind, r, b, temperature, "pt_elements_published");
  Raw raw = evaluate_raw(kind, r, b, temperature);
  if (!(raw.z > 0.0)) throw EvaluationOverflow("published partition function underflowed to zero");
  const PtElements& e = raw.e;
  require_finite({e.a11, e.a22, e.a44, e.a66, e.a12, e.a56}, "normalized elements");
  raw.e.log_z = std::log(raw.z);
  return raw.e;
}

NegativityResult negativity_published(CouplingKind kind, double r, double b, double temperature) {
  return negativity_from_elements(pt_elements_published(kind, r, b, temperature), EvalMode::Published);
}

}  // namespace mixspin
