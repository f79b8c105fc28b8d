#include "zeckvec/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "zeckvec/analytics.hpp"
#include "zeckvec/bridge.hpp"
#include "zeckvec/error.hpp"
#include "zeckvec/export.hpp"
#include "zeckvec/normalize.hpp"

namespace zeckvec::cli {

namespace {

struct Options {
  std::string c;
  bool relaxed = false;
  std::int64_t from = 1;
  std::int64_t to = 10;
  std::string v;
  std::string a;
  std::string trace;
  std::size_t n = 0;
  std::string csv;
  std::string svg;
  std::string json;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::size_t sample = 0;
  std::uint64_t seed = 42;
  std::optional<std::size_t> bound;
  std::size_t node_cap = kDefaultNodeCap;
  std::size_t budget = kDefaultBudget;
  std::size_t r = 0;
  std::optional<std::size_t> coefficient_cap;
  std::size_t show = 3;
};

std::string sig6(double value) {
  std::ostringstream s;
  s << std::setprecision(6) << value;
  return s.str();
}

std::string classification_line(const SrClassification& cls) {
  auto violation = [&] {
    const auto where = std::to_string(cls.first_overfilled.value_or(0));
    return cls.violation == Violation::FullCopy ? "contains a full copy of c ending at position " + where
                                                : "element too large at position " + where;
  };
  switch (cls.kind) {
    case SrKind::SR: return "SR";
    case SrKind::NSR: {
      std::string line = "NSR (not SR: " + violation() + "; lowering a_" + std::to_string(*cls.witness) +
                         " gives an SR";
      if (cls.end_complete) line += "; end complete";
      return line + ")";
    }
    case SrKind::Other: return "Other (not SR: " + violation() + ")";
  }
  return "Other";
}

Mode mode_of(const Options& o) { return o.relaxed ? Mode::Relaxed : Mode::Strict; }

int cmd_seq(const Options& o, std::ostream& out) {
  const Recurrence rec(RecurrenceVector::parse(o.c, mode_of(o)));
  if (o.from > o.to) throw Error(ErrorKind::InvalidArgument, "--from must not exceed --to");
  for (auto n = o.from; n <= o.to; ++n) out << rec.scalar(n) << '\n';
  return kExitOk;
}

int cmd_vec(const Options& o, std::ostream& out) {
  const Recurrence rec(RecurrenceVector::parse(o.c, mode_of(o)));
  if (o.from > o.to) throw Error(ErrorKind::InvalidArgument, "--from must not exceed --to");
  for (auto n = o.from; n <= o.to; ++n) out << rec.term(n).to_string() << '\n';
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const Recurrence rec(RecurrenceVector::parse(o.c, mode_of(o)));
  const auto v = LatticeVector::parse(o.v);
  if (v.dimension() != rec.dimension()) {
    throw Error(ErrorKind::InvalidArgument, "--v needs " + std::to_string(rec.dimension()) + " entries");
  }
  if (o.trace.empty()) {
    out << decompose(rec, v).to_string() << '\n';
    return kExitOk;
  }
  std::vector<TraceRecord> records;
  const auto a = decompose_incremental(rec, v, &records);
  write_file_atomic(o.trace, trace_jsonl(records));
  out << a.to_string() << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Recurrence rec(RecurrenceVector::parse(o.c, mode_of(o)));
  const auto a = CoefficientString::parse(o.a);
  out << classification_line(classify(rec.vector(), a)) << '\n';
  out << "value " << evaluate(rec, a).to_string() << '\n';
  return kExitOk;
}

int cmd_regions(const Options& o, std::ostream& out, std::ostream& err) {
  const Recurrence rec(RecurrenceVector::parse(o.c, mode_of(o)));
  const auto d = region_d(rec, o.n);
  std::vector<std::size_t> layer(o.n + 1, 0);
  for (const auto& m : d.members) ++layer[m.n_first];
  out << "D_" << o.n << ": " << d.size() << " points\n";
  for (std::size_t i = 0; i <= o.n; ++i) out << "R_" << i << ": " << layer[i] << " points\n";
  if (!o.csv.empty()) write_file_atomic(o.csv, region_csv(d, rec.dimension()));
  if (!o.svg.empty()) {
    if (rec.dimension() == 2) {
      write_file_atomic(o.svg, region_svg(d, rec.dimension()));
    } else {
      err << "note: SVG output needs k = 3; wrote CSV only\n";
    }
  }
  return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
  const Recurrence rec(RecurrenceVector::parse(o.c, mode_of(o)));
  if (o.n_min < 1 || o.n_min > o.n_max) {
    throw Error(ErrorKind::InvalidArgument, "need 1 <= --n-min <= --n-max");
  }
  std::optional<Sampling> sampling;
  if (o.sample > 0) sampling = Sampling{o.sample, o.seed};
  std::vector<SummandStats> series;
  out << "n mode mean variance skewness excess_kurtosis\n";
  for (auto n = o.n_min; n <= o.n_max; ++n) {
    series.push_back(summand_distribution(rec, n, sampling));
    const auto& s = series.back();
    out << n << ' ' << to_string(s.mode) << ' ' << sig6(s.mean) << ' ' << sig6(s.variance) << ' '
        << sig6(s.skewness) << ' ' << sig6(s.excess_kurtosis) << '\n';
  }
  if (series.size() >= 3) {
    const auto report = gaussian_diagnostics(rec.vector(), series);
    out << "mean fit: slope " << sig6(report.mean_fit.slope) << " intercept " << sig6(report.mean_fit.intercept)
        << " R^2 " << sig6(report.mean_fit.r_squared) << '\n';
    out << "variance fit: slope " << sig6(report.variance_fit.slope) << " intercept "
        << sig6(report.variance_fit.intercept) << " R^2 " << sig6(report.variance_fit.r_squared) << '\n';
    if (report.lekkerkerker) {
      out << "Lekkerkerker: target " << sig6(report.lekkerkerker->target) << " slope "
          << sig6(report.lekkerkerker->slope) << " deviation " << sig6(report.lekkerkerker->deviation) << '\n';
    }
  }
  out << "moments are population estimators\n";
  if (!o.json.empty()) write_file_atomic(o.json, stats_json(rec.vector(), series));
  if (!o.csv.empty()) write_file_atomic(o.csv, stats_series_csv(series));
  return kExitOk;
}

int cmd_minimality(const Options& o, std::ostream& out) {
  const Recurrence rec(RecurrenceVector::parse(o.c, mode_of(o)));
  const auto bound = o.bound.value_or(o.n + rec.k());
  const auto d = region_d(rec, o.n);
  MinimalityOracle oracle(rec, bound, o.node_cap);
  std::size_t minimal = 0;
  for (const auto& m : d.members) {
    const auto result = check_minimality(rec, m.point, oracle);
    if (result.minimal) ++minimal;
    out << m.point.to_string() << " sr " << result.sr_count << " oracle " << result.oracle_min
        << (result.minimal ? " minimal" : " NOT minimal") << '\n';
  }
  out << "minimal " << minimal << " / " << d.size() << " (support bound " << bound << ")\n";
  return kExitOk;
}

int cmd_probe(const Options& o, std::ostream& out) {
  // Probing is meant for recurrences outside the strict hypotheses.
  const auto c = RecurrenceVector::parse(o.c, Mode::Relaxed);
  const auto a = CoefficientString::parse(o.a);
  const auto report = probe_termination(c, a, o.budget);
  out << "outcome " << to_string(report.outcome) << '\n';
  if (report.reason != StopReason::None) out << "stopped by " << to_string(report.reason) << '\n';
  out << "iterations " << report.iterations << '\n';
  out << "steps " << report.trace.step_count() << " (budget " << o.budget << ")\n";
  out << "max support " << report.max_support << '\n';
  const auto steps = report.trace.steps();
  for (std::size_t i = 0; i < steps.size() && i < o.show; ++i) {
    out << "step " << i + 1 << ' ' << to_string(steps[i].op) << ' ' << steps[i].position << " x" << steps[i].count
        << " -> " << steps[i].result.to_string() << '\n';
  }
  if (report.pattern) {
    out << "recurring window " << report.pattern->window << " (iterations " << report.pattern->first_iteration
        << " and " << report.pattern->repeat_iteration << ", shifted by " << report.pattern->shift << ")\n";
  }
  const auto final_text = report.final_string.to_string();
  out << (report.outcome == ProbeOutcome::Terminated ? "result " : "last string ")
      << (final_text.size() > 400 ? final_text.substr(0, 400) + "..." : final_text) << '\n';
  if (!o.trace.empty()) write_file_atomic(o.trace, trace_jsonl(steps));
  return kExitOk;
}

int cmd_cover(const Options& o, std::ostream& out) {
  const Recurrence rec(RecurrenceVector::parse(o.c, mode_of(o)));
  out << ball_coverage(rec, o.r) << '\n';
  return kExitOk;
}

int cmd_span(const Options& o, std::ostream& out) {
  const Recurrence rec(RecurrenceVector::parse(o.c, mode_of(o)));
  const auto bound = o.bound.value_or(rec.k() + rec.vector().longest_zero_run() + 2);
  const auto report = spanning_probe(rec, o.r, bound, o.coefficient_cap);
  out << "checked " << report.checked << " vectors, support bound " << bound << '\n';
  for (const auto& v : report.failures) out << "no representation found for " << v.to_string() << '\n';
  out << (report.all_representable ? "all representable" : "gaps found") << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vector Zeckendorf representations over linear recurrences", "zeckvec"};
  app.require_subcommand(1);
  Options o;

  auto with_c = [&](CLI::App* sub) {
    sub->add_option("--c", o.c, "recurrence coefficients, e.g. 2,1,1")->required();
    sub->add_flag("--relaxed", o.relaxed, "allow c that is not weakly decreasing");
    return sub;
  };

  auto* seq = with_c(app.add_subcommand("seq", "scalar terms X_from .. X_to"));
  seq->add_option("--from", o.from);
  seq->add_option("--to", o.to)->required();

  auto* vec = with_c(app.add_subcommand("vec", "vector terms X_from .. X_to"));
  vec->add_option("--from", o.from);
  vec->add_option("--to", o.to)->required();

  auto* dec = with_c(app.add_subcommand("decompose", "the SR of a vector"));
  dec->add_option("--v", o.v, "vector, e.g. -4,0")->required()->allow_extra_args(false);
  dec->add_option("--trace", o.trace, "write the increment trace as JSON lines");

  auto* ver = with_c(app.add_subcommand("verify", "classify a coefficient string"));
  ver->add_option("--a", o.a, "coefficients a_1,a_2,...")->required();

  auto* reg = with_c(app.add_subcommand("regions", "enumerate D_n and its layers"));
  reg->add_option("--n", o.n)->required();
  reg->add_option("--csv", o.csv);
  reg->add_option("--svg", o.svg);

  auto* sta = with_c(app.add_subcommand("stats", "summand count statistics"));
  sta->add_option("--n-min", o.n_min)->required();
  sta->add_option("--n-max", o.n_max)->required();
  sta->add_option("--sample", o.sample, "sample size; 0 for exact");
  sta->add_option("--seed", o.seed);
  sta->add_option("--json", o.json);
  sta->add_option("--csv", o.csv);

  auto* mini = with_c(app.add_subcommand("minimality", "compare SR summand counts with a search oracle"));
  mini->add_option("--n", o.n)->required();
  mini->add_option("--bound", o.bound, "support bound (default n + k)");
  mini->add_option("--node-cap", o.node_cap);

  auto* pro = with_c(app.add_subcommand("probe", "run normalization on an NSR with a step budget"));
  pro->add_option("--a", o.a)->required();
  pro->add_option("--budget", o.budget);
  pro->add_option("--trace", o.trace);
  pro->add_option("--show", o.show, "number of steps to print");

  auto* cov = with_c(app.add_subcommand("cover", "smallest n with the radius-r ball inside D_n"));
  cov->add_option("--r", o.r)->required();

  auto* spa = with_c(app.add_subcommand("span", "search representations of every vector in a ball"));
  spa->add_option("--r", o.r)->required();
  spa->add_option("--bound", o.bound);
  spa->add_option("--cap", o.coefficient_cap);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (seq->parsed()) return cmd_seq(o, out);
    if (vec->parsed()) return cmd_vec(o, out);
    if (dec->parsed()) return cmd_decompose(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (reg->parsed()) return cmd_regions(o, out, err);
    if (sta->parsed()) return cmd_stats(o, out);
    if (mini->parsed()) return cmd_minimality(o, out);
    if (pro->parsed()) return cmd_probe(o, out);
    if (cov->parsed()) return cmd_cover(o, out);
    if (spa->parsed()) return cmd_span(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::CapExceeded:
      case ErrorKind::OracleExhausted:
      case ErrorKind::NonTermination:
        return kExitLimit;
      default:
        return kExitInvalid;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace zeckvec::cli
