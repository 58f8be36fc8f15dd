// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 1 if
// any criterion fails.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "mixspin/analysis.hpp"
#include "mixspin/cli.hpp"
#include "mixspin/closed_form.hpp"
#include "mixspin/io.hpp"
#include "mixspin/spin_core.hpp"

using namespace mixspin;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %-32s %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double n_at(CouplingKind k, double r, double b, double t) {
  const SweepRecord rec = evaluate_point(Coupling(k), EvalMode::Canonical, r, b, t);
  if (rec.status != RecordStatus::Ok) throw std::runtime_error("evaluation failed");
  return rec.negativity;
}

const CouplingKind kAllKinds[] = {CouplingKind::InverseSquare, CouplingKind::Trigonometric, CouplingKind::Hyperbolic};

}  // namespace

int main() {
  criterion(1, "oracle equivalence", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const ValidationReport rep = validate_modes(EvalMode::Canonical, EvalMode::Oracle, kAllKinds, 1000, 42);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = rep.max_abs_delta <= 1e-10 && secs < 1.0 && rep.samples == 1000 && rep.overflow_count == 0;
    return Outcome{ok, fmt("max|dN|=%.3g over %zu points, %.3f s", rep.max_abs_delta, rep.samples, secs)};
  });

  criterion(2, "plateau saturation", [] {
    double worst = 0.0;
    for (double r : LinearRange{0.3, 0.8, 100}.values())
      worst = std::max(worst, std::abs(n_at(CouplingKind::InverseSquare, r, 1.0, 0.001) - 0.5));
    return Outcome{worst <= 1e-6, fmt("max|N-0.5|=%.3g on 100 points", worst)};
  });

  criterion(3, "sudden death in R", [] {
    const CriticalPoint cp = find_threshold(Coupling(CouplingKind::InverseSquare), EvalMode::Canonical, Param::R,
                                            {{Param::B, 1.0}, {Param::T, 1.0}}, 0.3, 3.0, 1e-9);
    const double n09 = n_at(CouplingKind::InverseSquare, 0.9, 1.0, 1.0);
    const double j = 1 / (0.9 * 0.9);
    const double lam = min_eigenvalue(partial_transpose(gibbs_state(build_hamiltonian(j, 1.0), 1.0)));
    const bool ok = std::abs(cp.value - 0.8163) <= 1e-3 && n09 == 0.0 && lam >= -1e-14;
    return Outcome{ok, fmt("R_c=%.6f; at R=0.9 N=%g, min eig=%.3g", cp.value, n09, lam)};
  });

  criterion(4, "B-independent T_c", [] {
    const Coupling c(CouplingKind::InverseSquare);
    double tc[3];
    const double bs[3] = {0.5, 2.0, 4.0};
    for (int i = 0; i < 3; ++i)
      tc[i] = find_threshold(c, EvalMode::Canonical, Param::T, {{Param::R, 0.5}, {Param::B, bs[i]}}, 0.01, 10.0, 1e-9)
                  .value;
    const double spread = std::max({tc[0], tc[1], tc[2]}) - std::min({tc[0], tc[1], tc[2]});
    const double tc15 =
        find_threshold(c, EvalMode::Canonical, Param::T, {{Param::R, 1.5}, {Param::B, 0.15}}, 0.001, 2.0, 1e-9).value;
    bool ok = spread <= 1e-6 && std::abs(tc15 - 0.2961) <= 1e-3;
    for (double v : tc) ok = ok && std::abs(v - 2.6651) <= 1e-3;
    return Outcome{ok, fmt("T_c=%.9f,%.9f,%.9f (spread %.2g); R=1.5: %.6f", tc[0], tc[1], tc[2], spread, tc15)};
  });

  criterion(5, "type II valley symmetry", [] {
    double worst = 0.0;
    for (double b : {0.5, 1.0, 2.0})
      for (double t : {0.001, 0.25, 1.0})
        for (int k = 0; k < 400; ++k) {
          const double r = std::numbers::pi * (k + 0.5) / 400;
          worst = std::max(worst, std::abs(n_at(CouplingKind::Trigonometric, r, b, t) -
                                           n_at(CouplingKind::Trigonometric, std::numbers::pi - r, b, t)));
        }
    return Outcome{worst <= 1e-14, fmt("max|N(R)-N(pi-R)|=%.3g on 400-point grids", worst)};
  });

  criterion(6, "type II merge field", [] {
    const double half_pi = std::numbers::pi / 2;
    const double lo = n_at(CouplingKind::Trigonometric, half_pi, 0.70, 0.001);
    const double hi = n_at(CouplingKind::Trigonometric, half_pi, 0.75, 0.001);
    const CriticalPoint cp = find_threshold(Coupling(CouplingKind::Trigonometric), EvalMode::Canonical, Param::B,
                                            {{Param::R, half_pi}, {Param::T, 0.001}}, 0.70, 0.75, 1e-6);
    const bool ok = lo > 0.49 && hi < 1e-6 && cp.value > 0.70 && cp.value < 0.75 &&
                    std::abs(cp.value - 1 / std::numbers::sqrt2) < 0.01;
    return Outcome{ok, fmt("N(B=0.70)=%.6f, N(B=0.75)=%.3g, merge at B=%.6f", lo, hi, cp.value)};
  });

  criterion(7, "type II ridge", [] {
    const double half_pi = std::numbers::pi / 2;
    const double ridge = n_at(CouplingKind::Trigonometric, half_pi, 0.5, 0.01);
    const double off = n_at(CouplingKind::Trigonometric, half_pi, 2.0, 0.01);
    return Outcome{std::abs(ridge - 0.5) <= 1e-6 && off < 1e-9, fmt("N(B=0.5)=%.9f, N(B=2)=%.3g", ridge, off)};
  });

  criterion(8, "type III critical distance", [] {
    const Coupling c(CouplingKind::Hyperbolic);
    auto rc = [&](double t) {
      return find_threshold(c, EvalMode::Canonical, Param::R, {{Param::B, 1.5}, {Param::T, t}}, 0.05, 3.0, 1e-6).value;
    };
    const double cold = rc(0.001), warm = rc(0.05);
    const double target = std::asinh(std::pow(std::numbers::sqrt2 * 1.5, -0.5));
    const bool near = std::abs(cold - 0.6417) <= 1e-2;
    const bool flat = std::abs(cold - warm) <= 0.05;
    return Outcome{near && flat, fmt("R_c(0.001)=%.5f (level crossing %.5f) %s; R_c(0.05)=%.5f, drift %.4f %s", cold,
                                     target, near ? "ok" : "off", warm, std::abs(cold - warm),
                                     flat ? "<= 0.05" : "> 0.05")};
  });

  criterion(9, "published-formula audit", [] {
    const CouplingKind type1[] = {CouplingKind::InverseSquare};
    const CouplingKind type3[] = {CouplingKind::Hyperbolic};
    const ValidationReport r1 = validate_modes(EvalMode::Published, EvalMode::Canonical, type1, 200, 7);

    // worst case in the neighbourhood of R = asinh 1 (J = 1), B = T = 0.2
    const SampleBox near{0.86, 0.90, 0.19, 0.21, 0.19, 0.21};
    const ValidationReport r3 = validate_modes(EvalMode::Published, EvalMode::Canonical, type3, 200, 7, near);
    const ValidationReport wide = validate_modes(EvalMode::Published, EvalMode::Canonical, type3, 200, 7);

    std::ostringstream out, err;
    const int code = cli::run({"validate", "--coupling", "hyperbolic", "--mode", "published", "--against",
                               "canonical", "--samples", "200", "--seed", "7", "--tolerance", "1e-3"},
                              out, err);
    const bool ok = r1.max_abs_delta <= 1e-10 && std::abs(r3.max_abs_delta - 0.10) <= 0.02 &&
                    wide.max_abs_delta > 1e-3 && code == 4;
    return Outcome{ok, fmt("type I max|dN|=%.3g; type III near (0.8814,0.2,0.2) worst=%.4f at R=%.4f B=%.4f T=%.4f; "
                           "default domain worst=%.4f; validate exit %d",
                           r1.max_abs_delta, r3.max_abs_delta, r3.argmax->r, r3.argmax->b, r3.argmax->t,
                           wide.max_abs_delta, code)};
  });

  criterion(10, "dataset regeneration", [] {
    const fs::path dir = fs::temp_directory_path() / ("mixspin_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::pair<const char*, std::size_t> expected[] = {
        {"1a", 2400}, {"1b", 2400}, {"2a", 1800}, {"2b", 1800}, {"3a", 1800}, {"3b", 1800},
        {"4", 40401}, {"5a", 1600}, {"5b", 1600}, {"6", 40401}, {"7", 40401}, {"8", 40401},
        {"9a", 2400}, {"9b", 2400}, {"10", 40401}, {"11", 40401}};

    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& [id, rows] : expected) {
      std::ostringstream out, err;
      if (cli::run({"figure", id, "--out", (dir / (std::string(id) + ".csv")).string()}, out, err) != 0)
        throw std::runtime_error(std::string("figure ") + id + " failed: " + err.str());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool counts_ok = true;
    double n_max = 0.0;
    std::string bad;
    for (const auto& [id, rows] : expected) {
      std::ifstream f(dir / (std::string(id) + ".csv"));
      std::string line;
      std::getline(f, line);
      std::size_t n = 0;
      while (std::getline(f, line)) {
        ++n;
        // negativity is the 7th column
        std::size_t pos = 0;
        for (int c = 0; c < 6; ++c) pos = line.find(',', pos) + 1;
        const std::string cell = line.substr(pos, line.find(',', pos) - pos);
        if (!cell.empty()) n_max = std::max(n_max, std::stod(cell));
      }
      if (n != rows || n != figure_preset(id).point_count()) {
        counts_ok = false;
        bad += std::string(" ") + id;
      }
    }
    fs::remove_all(dir);
    const bool ok = counts_ok && secs < 5.0 && n_max <= 0.5 + 1e-12;
    return Outcome{ok, fmt("16 presets, row counts %s%s, %.3f s total, max N=%.17g", counts_ok ? "exact" : "WRONG:",
                           bad.c_str(), secs, n_max)};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
