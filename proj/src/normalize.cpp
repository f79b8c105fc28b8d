#include "zeckvec/normalize.hpp"

#include <algorithm>
#include <unordered_map>

#include "zeckvec/bridge.hpp"
#include "zeckvec/error.hpp"

namespace zeckvec {

std::string_view to_string(TraceOp op) {
  switch (op) {
    case TraceOp::Add: return "add";
    case TraceOp::Carry: return "carry";
    case TraceOp::Borrow: return "borrow";
  }
  return "carry";
}

std::string_view to_string(ProbeOutcome outcome) {
  return outcome == ProbeOutcome::Terminated ? "Terminated" : "BudgetExceeded";
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::None: return "none";
    case StopReason::StepBudget: return "step budget";
    case StopReason::SupportBound: return "support bound";
  }
  return "none";
}

TraceRecord NormalizationTrace::record(TraceOp op, std::size_t position, const BigInt& count,
                                       std::span<const BigInt> digits) {
  TraceRecord rec;
  rec.op = op;
  rec.position = position;
  rec.count = count;
  rec.result = CoefficientString(std::vector<BigInt>(digits.begin(), digits.end()));
  rec.g = coefficient_sum(digits);
  rec.ordinal = step_count_;
  g_history_.push_back(rec.g);
  if (step_count_ < kFullRetention || step_count_ % kThinStride == 0) steps_.push_back(rec);
  ++step_count_;
  return rec;
}

namespace {

void trim(std::vector<BigInt>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

void apply_carry(const RecurrenceVector& c, std::vector<BigInt>& a, std::size_t i, const BigInt& times) {
  const auto k = c.k();
  if (times < 1) throw Error(ErrorKind::InvalidArgument, "carry count must be positive");
  for (std::size_t l = 1; l <= k; ++l) {
    const auto pos = i + l;
    const BigInt have = pos <= a.size() ? a[pos - 1] : BigInt(0);
    if (have < times * c.c(l)) {
      throw Error(ErrorKind::CarryBlocked, "carry into position " + std::to_string(i) + " needs a_" +
                                               std::to_string(pos) + " >= " + BigInt(times * c.c(l)).str());
    }
  }
  if (a.size() < i + k) a.resize(i + k);
  for (std::size_t l = 1; l <= k; ++l) a[i + l - 1] -= times * c.c(l);
  if (i >= 1) a[i - 1] += times;
  trim(a);
}

void apply_borrow(const RecurrenceVector& c, std::vector<BigInt>& a, std::size_t i, const BigInt& times) {
  const auto k = c.k();
  if (times < 1) throw Error(ErrorKind::InvalidArgument, "borrow count must be positive");
  if (i == 0 || i > a.size() || a[i - 1] < times) {
    throw Error(ErrorKind::BorrowBlocked, "cannot borrow " + times.str() + " from position " + std::to_string(i));
  }
  a.resize(std::max(a.size(), i + k));
  a[i - 1] -= times;
  for (std::size_t l = 1; l <= k; ++l) a[i + l - 1] += times * c.c(l);
  trim(a);
}

struct Engine {
  const RecurrenceVector& c;
  std::vector<BigInt> a;
  NormalizationTrace& trace;
  std::vector<TraceRecord>* sink = nullptr;
  std::size_t steps = 0;

  BigInt at(std::size_t p) const { return p >= 1 && p <= a.size() ? a[p - 1] : BigInt(0); }

  void log(TraceOp op, std::size_t pos, const BigInt& count) {
    ++steps;
    auto rec = trace.record(op, pos, count, a);
    if (sink) {
      rec.ordinal = sink->size();
      sink->push_back(std::move(rec));
    }
  }

  void carry(std::size_t i, const BigInt& times) {
    apply_carry(c, a, i, times);
    log(TraceOp::Carry, i, times);
  }

  void borrow(std::size_t i, const BigInt& times) {
    apply_borrow(c, a, i, times);
    log(TraceOp::Borrow, i, times);
  }

  // Carry into q, then keep carrying in front of the terminal copy of c
  // while the prefix up to the last carry is end complete.
  void cascade(std::size_t q) {
    carry(q, 1);
    const auto k = c.k();
    while (q >= 1 && q <= a.size() && is_end_complete(c, std::span<const BigInt>(a.data(), q))) {
      q -= k;
      carry(q, 1);
    }
  }

  void iterate(const ScanResult& s) {
    const auto k = c.k();
    const auto p = s.first_overfilled;
    const auto np = s.chunk_start;
    const auto j0 = s.offset;
    const BigInt most = at(p) - c.c(j0 + 1);

    // Fewest borrows at p after which a_{np+l} >= c_{l+1} for all l < k.
    bool fits = true;
    BigInt need = 0;
    for (std::size_t l = j0 + 1; l < k && fits; ++l) {
      const BigInt deficit = c.c(l + 1) - at(np + l);
      if (deficit <= 0) continue;
      const auto& gain = c.c(l - j0);
      if (gain.is_zero()) {
        fits = false;
      } else {
        need = std::max(need, BigInt((deficit + gain - 1) / gain));
      }
    }
    if (need > most) fits = false;

    const auto before = steps;
    const BigInt times = fits ? need : most;
    if (times > 0) borrow(p, times);
    if (fits) cascade(np - 1);
    if (steps == before) {
      throw Error(ErrorKind::NonTermination, "no rewriting step applies at position " + std::to_string(p));
    }
  }
};

std::string window_key(const std::vector<BigInt>& a, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i <= a.size(); ++i) {
    if (i > from) out += ',';
    out += a[i - 1].str();
  }
  return out;
}

constexpr std::size_t kMaxWindow = 512;

ProbeReport run(const RecurrenceVector& c, std::vector<BigInt> digits, std::size_t budget, bool detect,
                std::vector<TraceRecord>* sink) {
  ProbeReport report;
  report.budget = budget;
  trim(digits);
  Engine engine{c, std::move(digits), report.trace, sink};
  const auto support_limit = engine.a.size() + 50 * c.k();
  const bool relaxed = c.mode() == Mode::Relaxed;
  std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> windows;
  report.max_support = engine.a.size();

  while (true) {
    const auto s = scan(c, engine.a);
    if (s.satisfying) break;
    if (engine.steps >= budget) {
      report.outcome = ProbeOutcome::BudgetExceeded;
      report.reason = StopReason::StepBudget;
      break;
    }
    if (relaxed && engine.a.size() > support_limit) {
      report.outcome = ProbeOutcome::BudgetExceeded;
      report.reason = StopReason::SupportBound;
      break;
    }
    if (detect && !report.pattern && engine.a.size() - s.chunk_start < kMaxWindow) {
      auto key = window_key(engine.a, s.chunk_start);
      const auto [it, fresh] = windows.try_emplace(key, report.iterations, s.chunk_start);
      if (!fresh && it->second.second < s.chunk_start) {
        report.pattern = RecurringPattern{std::move(key), it->second.first, report.iterations,
                                          s.chunk_start - it->second.second};
      }
    }
    ++report.iterations;
    engine.iterate(s);
    report.max_support = std::max(report.max_support, engine.a.size());
  }
  report.final_string = CoefficientString(std::move(engine.a));
  report.trace.terminated = report.outcome == ProbeOutcome::Terminated;
  return report;
}

void require_strict(const RecurrenceVector& c, const char* what) {
  if (c.mode() != Mode::Strict) {
    throw Error(ErrorKind::InvalidRecurrence, std::string(what) + " requires a strict recurrence");
  }
}

}  // namespace

CoefficientString carry(const RecurrenceVector& c, const CoefficientString& a, std::size_t i,
                        const BigInt& times) {
  std::vector<BigInt> digits(a.digits().begin(), a.digits().end());
  apply_carry(c, digits, i, times);
  return CoefficientString(std::move(digits));
}

CoefficientString borrow(const RecurrenceVector& c, const CoefficientString& a, std::size_t i,
                         const BigInt& times) {
  std::vector<BigInt> digits(a.digits().begin(), a.digits().end());
  apply_borrow(c, digits, i, times);
  return CoefficientString(std::move(digits));
}

Resolution resolve_end_complete(const RecurrenceVector& c, const CoefficientString& a) {
  if (!is_end_complete(c, a)) {
    throw Error(ErrorKind::NotEndComplete, "'" + a.to_string() + "' is not end complete");
  }
  Resolution out;
  Engine engine{c, std::vector<BigInt>(a.digits().begin(), a.digits().end()), out.trace};
  engine.cascade(a.length() - c.k());
  out.result = CoefficientString(std::move(engine.a));
  out.trace.terminated = is_sr(c, out.result);
  return out;
}

ProbeReport normalize_nsr(const RecurrenceVector& c, const CoefficientString& a, std::size_t budget) {
  if (classify(c, a).kind != SrKind::NSR) {
    throw Error(ErrorKind::NotNsr, "'" + a.to_string() + "' is not an NSR");
  }
  return run(c, std::vector<BigInt>(a.digits().begin(), a.digits().end()), budget, false, nullptr);
}

ProbeReport probe_termination(const RecurrenceVector& c, const CoefficientString& a, std::size_t budget) {
  if (classify(c, a).kind != SrKind::NSR) {
    throw Error(ErrorKind::NotNsr, "'" + a.to_string() + "' is not an NSR");
  }
  return run(c, std::vector<BigInt>(a.digits().begin(), a.digits().end()), budget, true, nullptr);
}

CoefficientString increment(const RecurrenceVector& c, const CoefficientString& a, std::size_t i,
                            std::size_t budget, std::vector<TraceRecord>* trace) {
  if (i < 1) throw Error(ErrorKind::InvalidArgument, "increment position must be >= 1");
  if (!is_sr(c, a)) {
    throw Error(ErrorKind::NotSatisfying, "'" + a.to_string() + "' is not a c-SR");
  }
  std::vector<BigInt> digits(a.digits().begin(), a.digits().end());
  if (digits.size() < i) digits.resize(i);
  digits[i - 1] += 1;
  if (trace) {
    TraceRecord rec;
    rec.op = TraceOp::Add;
    rec.position = i;
    rec.result = CoefficientString(digits);
    rec.g = coefficient_sum(digits);
    rec.ordinal = trace->size();
    trace->push_back(std::move(rec));
  }
  if (is_sr(c, digits)) return CoefficientString(std::move(digits));
  auto report = run(c, std::move(digits), budget, false, trace);
  if (report.outcome != ProbeOutcome::Terminated) {
    throw Error(ErrorKind::NonTermination, "normalizing '" + a.to_string() + "' + e_" + std::to_string(i) +
                                               " stopped (" + std::string(to_string(report.reason)) +
                                               ") after " + std::to_string(report.trace.step_count()) +
                                               " steps");
  }
  return std::move(report.final_string);
}

CoefficientString decompose(const Recurrence& rec, const LatticeVector& v) {
  require_strict(rec.vector(), "decompose");
  if (v.dimension() != rec.dimension()) {
    throw Error(ErrorKind::InvalidArgument, "vector " + v.to_string() + " has the wrong dimension");
  }
  if (v.is_zero()) return {};
  constexpr std::size_t kMaxSupport = std::size_t{1} << 20;
  for (std::size_t n = std::max<std::size_t>(2 * rec.k(), 8); n <= kMaxSupport; n *= 2) {
    const auto dec = legal_decompose_scalar(rec, s_n_map(rec, static_cast<std::int64_t>(n), v));
    std::vector<BigInt> digits(n - 1);
    for (std::size_t i = 1; i < n; ++i) digits[i - 1] = dec.coefficient(n - i);
    if (evaluate(rec, digits) == v) return CoefficientString(std::move(digits));
  }
  throw Error(ErrorKind::NonTermination, "no representation of " + v.to_string() + " found");
}

CoefficientString decompose_incremental(const Recurrence& rec, const LatticeVector& v,
                                        std::vector<TraceRecord>* trace) {
  const auto& c = rec.vector();
  require_strict(c, "decompose");
  if (v.dimension() != rec.dimension()) {
    throw Error(ErrorKind::InvalidArgument, "vector " + v.to_string() + " has the wrong dimension");
  }
  const auto k = c.k();
  // X_{-k} = -(c_1, ..., c_{k-1}); strict mode has every c_j >= 1.
  BigInt t = 0;
  for (std::size_t j = 1; j < k; ++j) {
    if (v[j - 1] < 0) t = std::max(t, BigInt((-v[j - 1] + c.c(j) - 1) / c.c(j)));
  }
  CoefficientString a;
  for (BigInt s = 0; s < t; ++s) a = increment(c, a, k, kUnlimitedBudget, trace);
  for (std::size_t j = 1; j < k; ++j) {
    const BigInt times = v[j - 1] + t * c.c(j);
    for (BigInt s = 0; s < times; ++s) a = increment(c, a, j, kUnlimitedBudget, trace);
  }
  return a;
}

SpanningReport spanning_probe(const Recurrence& rec, std::size_t radius, std::size_t support_bound,
                              std::optional<std::size_t> coefficient_cap) {
  const auto& c = rec.vector();
  const auto k = c.k();
  const auto dim = rec.dimension();
  if (support_bound < k + c.longest_zero_run()) {
    throw Error(ErrorKind::InvalidArgument,
                "support bound must be at least k + longest zero run of c = " +
                    std::to_string(k + c.longest_zero_run()));
  }
  const auto cap = coefficient_cap.value_or(4 * radius + 4);
  const auto free_positions = support_bound - k + 1;

  constexpr std::size_t kMaxTails = 2'000'000;
  std::size_t tail_count = 1;
  for (std::size_t i = 0; i < free_positions; ++i) {
    if (tail_count > kMaxTails / (cap + 1)) {
      throw Error(ErrorKind::CapExceeded, "spanning search space too large; lower the support bound or cap");
    }
    tail_count *= cap + 1;
  }

  // Distinct values of a_k X_{-k} + ... + a_B X_{-B}, each with one tail.
  std::unordered_map<LatticeVector, std::vector<BigInt>, LatticeVectorHash> tails;
  std::vector<std::size_t> odometer(free_positions, 0);
  while (true) {
    LatticeVector sum(dim);
    std::vector<BigInt> digits(free_positions);
    for (std::size_t i = 0; i < free_positions; ++i) {
      digits[i] = odometer[i];
      sum.add_scaled(digits[i], rec.term(-static_cast<std::int64_t>(k + i)));
    }
    tails.try_emplace(std::move(sum), std::move(digits));
    std::size_t pos = 0;
    while (pos < free_positions && ++odometer[pos] > cap) odometer[pos++] = 0;
    if (pos == free_positions) break;
  }
  std::vector<std::pair<LatticeVector, std::vector<BigInt>>> ordered(tails.begin(), tails.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  SpanningReport report;
  const auto r = static_cast<long long>(radius);
  std::vector<long long> point(dim, -r);
  while (true) {
    LatticeVector v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = point[j];
    ++report.checked;
    bool found = false;
    for (const auto& [sum, digits] : ordered) {
      const auto rest = v - sum;
      if (std::all_of(rest.entries().begin(), rest.entries().end(), [](const BigInt& e) { return e >= 0; })) {
        std::vector<BigInt> full(rest.entries().begin(), rest.entries().end());
        full.insert(full.end(), digits.begin(), digits.end());
        report.witnesses.emplace_back(v, CoefficientString(std::move(full)));
        found = true;
        break;
      }
    }
    if (!found) {
      report.all_representable = false;
      report.failures.push_back(v);
    }
    std::size_t pos = 0;
    while (pos < dim && ++point[pos] > r) point[pos++] = -r;
    if (pos == dim) break;
  }
  return report;
}

}  // namespace zeckvec
