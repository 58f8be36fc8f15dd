#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mixspin/couplings.hpp"
#include "mixspin/errors.hpp"

using namespace mixspin;

TEST_CASE("coupling strengths at reference points") {
  CHECK(coupling_strength(Coupling(CouplingKind::InverseSquare), 2.0) == 0.25);
  CHECK(coupling_strength(Coupling(CouplingKind::Trigonometric), std::numbers::pi / 2) == doctest::Approx(1.0));
  CHECK(coupling_strength(Coupling(CouplingKind::Hyperbolic), std::asinh(1.0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(coupling_strength(Coupling(CouplingKind::Constant, 3.5), 123.0) == 3.5);
  CHECK(coupling_strength(Coupling(CouplingKind::InverseSquare, 2.0), 2.0) == 0.5);
}

TEST_CASE("domain verdicts") {
  CHECK(domain_check(Coupling(CouplingKind::InverseSquare), 0.0).reason == DomainReason::Singular);
  CHECK(domain_check(Coupling(CouplingKind::Trigonometric), std::numbers::pi).reason == DomainReason::Singular);
  CHECK(domain_check(Coupling(CouplingKind::Trigonometric), -2 * std::numbers::pi).reason == DomainReason::Singular);
  CHECK(domain_check(Coupling(CouplingKind::Hyperbolic), -0.5).ok);
  CHECK(domain_check(Coupling(CouplingKind::Hyperbolic), 5e-13).reason == DomainReason::Singular);
  CHECK(domain_check(Coupling(CouplingKind::Hyperbolic), 2e-12).ok);
  CHECK(domain_check(Coupling(CouplingKind::InverseSquare), NAN).reason == DomainReason::NonFinite);
  CHECK(domain_check(Coupling(CouplingKind::Constant), 0.0).ok);
  // ok iff reason is Ok
  const DomainVerdict v = domain_check(Coupling(CouplingKind::Trigonometric), 1.0);
  CHECK(v.ok);
  CHECK(v.reason == DomainReason::Ok);
}

TEST_CASE("near-pi truncation is not singular") {
  // 3.14159265 sits 3.6e-9 from pi: far outside the 1e-12 guard
  const Coupling trig(CouplingKind::Trigonometric);
  CHECK(domain_check(trig, 3.14159265).ok);
  CHECK(std::isfinite(coupling_strength(trig, 3.14159265)));
}

TEST_CASE("singular R throws with the verdict") {
  const Coupling c(CouplingKind::InverseSquare);
  CHECK_THROWS_AS(coupling_strength(c, 0.0), DomainError);
  try {
    coupling_strength(c, 0.0);
  } catch (const DomainError& e) {
    CHECK(e.reason() == DomainReason::Singular);
  }
}

TEST_CASE("coupling kind names") {
  for (CouplingKind k :
       {CouplingKind::InverseSquare, CouplingKind::Trigonometric, CouplingKind::Hyperbolic, CouplingKind::Constant})
    CHECK(parse_coupling_kind(to_string(k)) == k);
  CHECK(to_string(CouplingKind::Trigonometric) == "trig");
  CHECK_THROWS_AS(parse_coupling_kind("cubic"), ArgumentError);
}

TEST_CASE("non-finite j0 is rejected") { CHECK_THROWS_AS(Coupling(CouplingKind::Hyperbolic, INFINITY), ArgumentError); }
