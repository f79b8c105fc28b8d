#include "zeckvec/analytics.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "zeckvec/bridge.hpp"
#include "zeckvec/error.hpp"
#include "zeckvec/normalize.hpp"

namespace zeckvec {

std::string_view to_string(StatsMode mode) { return mode == StatsMode::Exact ? "exact" : "sampled"; }

std::uint64_t SummandStats::total() const {
  std::uint64_t sum = 0;
  for (const auto& [count, freq] : histogram) sum += freq;
  return sum;
}

std::uint64_t scalar_summands(const Recurrence& rec, const BigInt& value) {
  std::uint64_t total = 0;
  BigInt rest = value;
  for (auto idx = rec.scalar_floor_index(rest); idx >= 1 && !rest.is_zero(); --idx) {
    const auto& x = rec.scalar(static_cast<std::int64_t>(idx));
    if (x > rest) continue;
    const BigInt d = rest / x;
    rest -= d * x;
    total += static_cast<std::uint64_t>(d);
  }
  return total;
}

namespace {

// Uniform integer in [0, width) by rejection on the bit length.
BigInt uniform_below(std::mt19937_64& rng, const BigInt& width) {
  const auto bits = boost::multiprecision::msb(width) + 1;
  while (true) {
    BigInt draw = 0;
    std::size_t have = 0;
    while (have < bits) {
      draw <<= 64;
      draw += rng();
      have += 64;
    }
    draw >>= static_cast<unsigned>(have - bits);
    if (draw < width) return draw;
  }
}

void fill_moments(SummandStats& stats) {
  const auto total = static_cast<long double>(stats.total());
  if (total == 0) return;
  long double mean = 0;
  for (const auto& [k, f] : stats.histogram) mean += static_cast<long double>(k) * f;
  mean /= total;
  long double m2 = 0, m3 = 0, m4 = 0;
  for (const auto& [k, f] : stats.histogram) {
    const long double d = static_cast<long double>(k) - mean;
    m2 += f * d * d;
    m3 += f * d * d * d;
    m4 += f * d * d * d * d;
  }
  m2 /= total;
  m3 /= total;
  m4 /= total;
  stats.mean = static_cast<double>(mean);
  stats.variance = static_cast<double>(m2);
  if (m2 > 0) {
    stats.skewness = static_cast<double>(m3 / std::pow(m2, 1.5L));
    stats.excess_kurtosis = static_cast<double>(m4 / (m2 * m2) - 3);
  }
}

}  // namespace

SummandStats summand_distribution(const Recurrence& rec, std::size_t n, std::optional<Sampling> sampling,
                                  std::size_t cap) {
  if (rec.vector().mode() != Mode::Strict) {
    throw Error(ErrorKind::InvalidRecurrence, "summand statistics require a strict recurrence");
  }
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  const auto& low = rec.scalar(static_cast<std::int64_t>(n));
  const BigInt width = rec.scalar(static_cast<std::int64_t>(n) + 1) - low;

  SummandStats stats;
  stats.n = n;
  if (sampling) {
    if (sampling->size == 0) throw Error(ErrorKind::InvalidArgument, "sample size must be positive");
    stats.mode = StatsMode::Sampled;
    stats.sample_size = sampling->size;
    stats.seed = sampling->seed;
    std::mt19937_64 rng(sampling->seed);
    for (std::size_t i = 0; i < sampling->size; ++i) {
      ++stats.histogram[scalar_summands(rec, low + uniform_below(rng, width))];
    }
  } else {
    if (cap == 0) cap = enumeration_cap();
    if (width > cap) {
      throw Error(ErrorKind::CapExceeded, "exact statistics at n = " + std::to_string(n) + " need " +
                                              width.str() + " decompositions, cap is " + std::to_string(cap));
    }
    stats.mode = StatsMode::Exact;
    stats.sample_size = static_cast<std::size_t>(width);
    for (BigInt v = low; v < low + width; ++v) ++stats.histogram[scalar_summands(rec, v)];
  }
  fill_moments(stats);
  return stats;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "a line fit needs at least two points");
  }
  const double count = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / count;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / count;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0) throw Error(ErrorKind::InvalidArgument, "a line fit needs two distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

double lekkerkerker_constant() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  return 1.0 / (phi * phi + 1.0);
}

GaussianReport gaussian_diagnostics(const RecurrenceVector& c, std::span<const SummandStats> stats) {
  if (stats.size() < 3) throw Error(ErrorKind::InvalidArgument, "diagnostics need at least three values of n");
  std::vector<double> ns, means, variances;
  GaussianReport report;
  for (const auto& s : stats) {
    ns.push_back(static_cast<double>(s.n));
    means.push_back(s.mean);
    variances.push_back(s.variance);
    report.shape.push_back({s.n, s.skewness, s.excess_kurtosis});
  }
  report.mean_fit = fit_line(ns, means);
  report.variance_fit = fit_line(ns, variances);
  if (c.k() == 2 && c.c(1) == 1 && c.c(2) == 1) {
    const double target = lekkerkerker_constant();
    report.lekkerkerker = LekkerkerkerCheck{target, report.mean_fit.slope, report.mean_fit.slope - target};
  }
  return report;
}

// ---------------------------------------------------------------------------
// Minimality oracle

MinimalityOracle::MinimalityOracle(const Recurrence& rec, std::size_t support_bound, std::size_t node_cap)
    : rec_(rec), bound_(support_bound), cap_(node_cap) {
  if (support_bound < 1) throw Error(ErrorKind::InvalidArgument, "support bound must be >= 1");
  LatticeVector origin(rec.dimension());
  level_.emplace(origin, 0);
  frontier_.push_back(std::move(origin));
}

void MinimalityOracle::expand() {
  std::vector<LatticeVector> next;
  ++depth_;
  for (const auto& point : frontier_) {
    for (std::size_t i = 1; i <= bound_; ++i) {
      auto candidate = point + rec_.term(-static_cast<std::int64_t>(i));
      if (level_.count(candidate)) continue;
      if (level_.size() >= cap_) {
        throw Error(ErrorKind::OracleExhausted,
                    "minimality search exceeded " + std::to_string(cap_) + " nodes at depth " +
                        std::to_string(depth_));
      }
      level_.emplace(candidate, depth_);
      next.push_back(std::move(candidate));
    }
  }
  frontier_ = std::move(next);
}

std::uint64_t MinimalityOracle::minimum(const LatticeVector& v) {
  while (true) {
    if (const auto it = level_.find(v); it != level_.end()) return it->second;
    if (frontier_.empty()) {
      throw Error(ErrorKind::OracleExhausted, v.to_string() + " is not reachable");
    }
    expand();
  }
}

MinimalityResult check_minimality(const Recurrence& rec, const LatticeVector& v, MinimalityOracle& oracle) {
  MinimalityResult out;
  out.sr_count = static_cast<std::uint64_t>(coefficient_sum(decompose(rec, v)));
  out.oracle_min = oracle.minimum(v);
  out.minimal = out.sr_count == out.oracle_min;
  return out;
}

MinimalityResult check_minimality(const Recurrence& rec, const LatticeVector& v, std::size_t support_bound,
                                  std::size_t node_cap) {
  MinimalityOracle oracle(rec, support_bound, node_cap);
  return check_minimality(rec, v, oracle);
}

}  // namespace zeckvec
