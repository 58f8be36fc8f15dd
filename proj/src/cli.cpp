#include "mixspin/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "mixspin/errors.hpp"
#include "mixspin/io.hpp"

namespace mixspin::cli {

namespace {

double parse_real(std::string_view text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(v))
    throw ArgumentError("not a finite real number: '" + std::string(text) + "'");
  return v;
}

}  // namespace

FlagValue parse_flag_value(std::string_view text) {
  if (text.find(':') != std::string_view::npos) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
      throw ArgumentError("range must be start:stop:count, got '" + std::string(text) + "'");
    const double start = parse_real(text.substr(0, c1));
    const double stop = parse_real(text.substr(c1 + 1, c2 - c1 - 1));
    const std::string_view count_text = text.substr(c2 + 1);
    int count = 0;
    const auto res = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (res.ec != std::errc{} || res.ptr != count_text.data() + count_text.size())
      throw ArgumentError("range count must be an integer, got '" + std::string(count_text) + "'");
    if (count < 2) throw ArgumentError("range count must be at least 2");
    if (start == stop) throw ArgumentError("range start and stop must differ");
    return LinearRange{start, stop, count};
  }
  if (text.find(',') != std::string_view::npos) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto next = text.find(',', pos);
      values.push_back(parse_real(text.substr(pos, next == std::string_view::npos ? next : next - pos)));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    return values;
  }
  return parse_real(text);
}

namespace {

struct Options {
  std::string coupling;
  double j0 = 1.0;
  std::string mode;
  std::string r, b, t, j;
  double epsilon = 1e-6;
  std::string format = "csv";
  std::string out;
  int workers = 0;
  std::uint64_t seed = 42;

  std::string figure_id;
  std::string against = "oracle";
  std::size_t samples = 1000;
  double tolerance = 1e-10;
  double max_x = std::numeric_limits<double>::infinity();
};

void add_shared(CLI::App* app, Options& o) {
  app->add_option("--coupling", o.coupling, "inverse-square | trig | hyperbolic | constant")
      ->check(CLI::IsMember({"inverse-square", "trig", "hyperbolic", "constant"}));
  app->add_option("--j0", o.j0, "overall coupling strength J0");
  app->add_option("--mode", o.mode, "canonical | published | oracle")
      ->check(CLI::IsMember({"canonical", "published", "oracle"}));
  app->add_option("--r", o.r, "separation R: real, start:stop:count or a,b,c");
  app->add_option("--b", o.b, "magnetic field B");
  app->add_option("--t", o.t, "temperature T");
  app->add_option("--j", o.j, "exchange strength J (constant coupling only)");
  app->add_option("--epsilon", o.epsilon, "negativity threshold for critical points");
  app->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--out", o.out, "output path (default: standard output)");
  app->add_option("--workers", o.workers, "worker threads (default: $MIXSPIN_WORKERS or all cores)");
  app->add_option("--seed", o.seed, "seed for validation sampling");
}

int resolve_workers(const Options& o) {
  if (o.workers > 0) return o.workers;
  if (const char* env = std::getenv("MIXSPIN_WORKERS")) {
    int w = 0;
    const std::string_view s(env);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), w);
    if (res.ec == std::errc{} && res.ptr == s.data() + s.size() && w > 0) return w;
  }
  return std::max(1, omp_get_max_threads());
}

class UsageError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

struct ParamSource {
  Param param;
  std::string text;
};

// Coordinate, T, B: the row-major axis order used by `sweep`.
std::vector<ParamSource> parameter_sources(const Options& o, const Coupling& c) {
  const bool constant = c.kind() == CouplingKind::Constant;
  if (constant && !o.r.empty()) throw UsageError("the constant coupling takes --j, not --r");
  if (!constant && !o.j.empty()) throw UsageError("--j is only valid with --coupling constant");
  return {{constant ? Param::J : Param::R, constant ? o.j : o.r}, {Param::T, o.t}, {Param::B, o.b}};
}

Coupling coupling_from(const Options& o) {
  return Coupling(parse_coupling_kind(o.coupling.empty() ? "inverse-square" : o.coupling), o.j0);
}

EvalMode mode_from(const Options& o) { return parse_eval_mode(o.mode.empty() ? "canonical" : o.mode); }

void emit(const Options& o, std::ostream& out, const std::string& content) {
  if (o.out.empty())
    out << content;
  else
    write_file_atomic(o.out, content);
}

std::string render_records(const Options& o, std::span<const SweepRecord> records, const OutputMetadata& meta) {
  std::ostringstream os;
  if (o.format == "json")
    write_json(os, records, meta);
  else
    write_csv(os, records);
  return os.str();
}

void reject_nonpositive_temperature(const FlagValue& v) {
  auto check = [](double t) {
    if (!(t > 0.0)) throw DomainError(DomainReason::NonPositiveTemperature, "temperature must be positive");
  };
  if (const auto* d = std::get_if<double>(&v)) check(*d);
  if (const auto* l = std::get_if<std::vector<double>>(&v))
    for (double t : *l) check(t);
  if (const auto* r = std::get_if<LinearRange>(&v)) {
    check(r->start);
    check(r->stop);
  }
}

Axis axis_from(Param p, const FlagValue& v) {
  if (const auto* r = std::get_if<LinearRange>(&v)) return Axis{p, *r};
  if (const auto* l = std::get_if<std::vector<double>>(&v)) return Axis{p, *l};
  return Axis{p, std::vector<double>{std::get<double>(v)}};
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
  const Coupling c = coupling_from(o);
  const EvalMode mode = mode_from(o);
  double values[3] = {};
  const auto sources = parameter_sources(o, c);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (sources[i].text.empty()) throw UsageError("eval needs --" + std::string(i == 0 && c.kind() == CouplingKind::Constant ? "j" : i == 0 ? "r" : i == 1 ? "t" : "b"));
    const FlagValue v = parse_flag_value(sources[i].text);
    if (!std::holds_alternative<double>(v)) throw UsageError("eval takes single values, not ranges or lists");
    values[i] = std::get<double>(v);
  }
  const SweepRecord rec = evaluate_point(c, mode, values[0], values[2], values[1]);
  if (rec.status == RecordStatus::DomainError) {
    const DomainVerdict v = c.kind() == CouplingKind::Constant ? DomainVerdict{} : domain_check(c, values[0]);
    if (!v.ok)
      err << "error: R = " << format_double(values[0]) << " is " << to_string(v.reason) << " for the "
          << to_string(c.kind()) << " coupling\n";
    else
      err << "error: temperature must be positive and all inputs finite\n";
    return kDomain;
  }
  const SweepRecord one[] = {rec};
  emit(o, out, render_records(o, one, {"eval", {}, {}, {}, {}, {}}));
  return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const Coupling c = coupling_from(o);
  SweepSpec spec{c, mode_from(o), {}, {}};
  for (const ParamSource& s : parameter_sources(o, c)) {
    if (s.text.empty()) throw UsageError("sweep needs a value for " + std::string(to_string(s.param)));
    const FlagValue v = parse_flag_value(s.text);
    if (s.param == Param::T) reject_nonpositive_temperature(v);
    if (const auto* d = std::get_if<double>(&v))
      spec.fixed[s.param] = *d;
    else
      spec.axes.push_back(axis_from(s.param, v));
  }
  const auto records = sweep(spec, resolve_workers(o));
  emit(o, out, render_records(o, records, {"sweep", {}, {}, {}, {}, {}}));
  return kOk;
}

int cmd_critical(const Options& o, std::ostream& out) {
  const Coupling c = coupling_from(o);
  std::map<Param, double> fixed;
  std::optional<Param> axis;
  LinearRange bracket{};
  for (const ParamSource& s : parameter_sources(o, c)) {
    if (s.text.empty()) throw UsageError("critical needs a value for " + std::string(to_string(s.param)));
    const FlagValue v = parse_flag_value(s.text);
    if (const auto* r = std::get_if<LinearRange>(&v)) {
      if (axis) throw UsageError("critical takes exactly one range (the search axis)");
      axis = s.param;
      bracket = *r;
    } else if (const auto* d = std::get_if<double>(&v)) {
      if (s.param == Param::T) reject_nonpositive_temperature(v);
      fixed[s.param] = *d;
    } else {
      throw UsageError("critical does not accept value lists");
    }
  }
  if (!axis) throw UsageError("critical needs one parameter given as start:stop:count");
  const CriticalPoint cp = find_threshold(c, mode_from(o), *axis, fixed, bracket.start, bracket.stop, o.epsilon);
  emit(o, out, o.format == "json" ? critical_point_json(cp) : critical_point_csv(cp));
  return kOk;
}

void override_param(SweepSpec& spec, Param p, const FlagValue& v, std::vector<std::string>& notes,
                    const std::string& text) {
  std::erase_if(spec.axes, [p](const Axis& a) { return a.param == p; });
  spec.fixed.erase(p);
  if (const auto* d = std::get_if<double>(&v))
    spec.fixed[p] = *d;
  else
    spec.axes.insert(spec.axes.begin(), axis_from(p, v));
  notes.push_back("override " + std::string(to_string(p)) + "=" + text);
}

int cmd_figure(const Options& o, std::ostream& out) {
  const FigurePreset& preset = figure_preset_info(o.figure_id);
  SweepSpec spec = preset.spec;
  if (!o.mode.empty()) spec.mode = parse_eval_mode(o.mode);
  std::vector<std::string> defaults = preset.defaults;
  const bool constant = spec.coupling.kind() == CouplingKind::Constant;
  const std::pair<Param, const std::string*> overrides[] = {
      {constant ? Param::J : Param::R, constant ? &o.j : &o.r}, {Param::T, &o.t}, {Param::B, &o.b}};
  for (const auto& [p, text] : overrides) {
    if (text->empty()) continue;
    const FlagValue v = parse_flag_value(*text);
    if (p == Param::T) reject_nonpositive_temperature(v);
    override_param(spec, p, v, defaults, *text);
  }
  const auto records = sweep(spec, resolve_workers(o));
  const OutputMetadata meta{"figure", preset.id, preset.title, preset.stated, defaults, {}};
  emit(o, out, render_records(o, records, meta));
  return kOk;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.format == "csv" && !o.out.empty() && o.out.ends_with(".csv"))
    throw UsageError("validate writes a JSON report");
  std::vector<CouplingKind> kinds;
  if (o.coupling.empty())
    kinds = {CouplingKind::InverseSquare, CouplingKind::Trigonometric, CouplingKind::Hyperbolic};
  else
    kinds = {parse_coupling_kind(o.coupling)};

  std::optional<SampleBox> box;
  auto bounds = [&](const std::string& text, double& lo, double& hi) {
    if (text.empty()) return;
    const FlagValue v = parse_flag_value(text);
    const auto* r = std::get_if<LinearRange>(&v);
    if (!r) throw UsageError("validate sampling bounds take start:stop:count (count is ignored)");
    if (!box) box = default_sample_box(kinds.front());
    lo = std::min(r->start, r->stop);
    hi = std::max(r->start, r->stop);
  };
  SampleBox tmp = default_sample_box(kinds.front());
  bounds(o.r, tmp.r_lo, tmp.r_hi);
  bounds(o.b, tmp.b_lo, tmp.b_hi);
  bounds(o.t, tmp.t_lo, tmp.t_hi);
  if (box || std::isfinite(o.max_x)) {
    tmp.max_x = o.max_x;
    if (tmp.t_lo <= 0.0) throw DomainError(DomainReason::NonPositiveTemperature, "temperature must be positive");
    box = tmp;
  }

  const ValidationReport rep =
      validate_modes(mode_from(o), parse_eval_mode(o.against), kinds, o.samples, o.seed, box);
  const bool within = rep.max_abs_delta <= o.tolerance;
  emit(o, out, validation_report_json(rep, o.tolerance, within, o.seed));
  if (!within) {
    err << "validation: max |delta N| = " << format_double(rep.max_abs_delta) << " exceeds tolerance "
        << format_double(o.tolerance) << "\n";
    return kToleranceExceeded;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermal negativity of the two-site (1/2,1) mixed-spin XY model with long-range couplings", "mixspin"};
  app.require_subcommand(1);
  Options o;

  CLI::App* eval = app.add_subcommand("eval", "evaluate one point");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "evaluate a grid (ranges become axes)");
  CLI::App* critical = app.add_subcommand("critical", "locate the epsilon crossing along one range");
  CLI::App* figure = app.add_subcommand("figure", "regenerate a figure dataset preset");
  CLI::App* validate = app.add_subcommand("validate", "audit one evaluation mode against another");
  for (CLI::App* sub : {eval, sweep_cmd, critical, figure, validate}) add_shared(sub, o);
  figure->add_option("id", o.figure_id, "preset id (1a 1b 2a 2b 3a 3b 4 5a 5b 6 7 8 9a 9b 10 11)")->required();
  validate->add_option("--against", o.against, "mode to compare --mode with")
      ->check(CLI::IsMember({"canonical", "published", "oracle"}));
  validate->add_option("--samples", o.samples, "number of sampled points");
  validate->add_option("--tolerance", o.tolerance, "largest acceptable |delta N|");
  validate->add_option("--max-x", o.max_x, "reject samples with |J|/(sqrt2 T) above this");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(o, out, err);
    if (*sweep_cmd) return cmd_sweep(o, out);
    if (*critical) return cmd_critical(o, out);
    if (*figure) return cmd_figure(o, out);
    if (*validate) return cmd_validate(o, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const NoThreshold& e) {
    err << "error: " << e.what() << "\n";
    return kNoThreshold;
  } catch (const ArgumentError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace mixspin::cli
