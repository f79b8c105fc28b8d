#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "zeckvec/bigint.hpp"
#include "zeckvec/recurrence.hpp"

namespace zeckvec {

enum class StatsMode { Exact, Sampled };

std::string_view to_string(StatsMode mode);

struct Sampling {
  std::size_t size = 100'000;
  std::uint64_t seed = 42;
};

/// Distribution of the summand count K_n over [X_n, X_{n+1}).
/// Moments are population (biased) estimators.
struct SummandStats {
  std::size_t n = 0;
  StatsMode mode = StatsMode::Exact;
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
  double mean = 0;
  double variance = 0;
  double skewness = 0;
  double excess_kurtosis = 0;
  /// summand count -> frequency
  std::map<std::uint64_t, std::uint64_t> histogram;

  std::uint64_t total() const;
};

/// Exact mode walks every integer of [X_n, X_{n+1}) and throws
/// Error(CapExceeded) if there are more than `cap`; sampled mode draws
/// uniformly from the interval. Requires strict mode.
SummandStats summand_distribution(const Recurrence& rec, std::size_t n,
                                  std::optional<Sampling> sampling = std::nullopt,
                                  std::size_t cap = 0);

/// Number of summands in the greedy decomposition of N.
std::uint64_t scalar_summands(const Recurrence& rec, const BigInt& value);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
};

/// Least squares y = slope * x + intercept. Needs two distinct x.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

struct ShapeAtN {
  std::size_t n = 0;
  double skewness = 0;
  double excess_kurtosis = 0;
};

struct LekkerkerkerCheck {
  double target = 0;
  double slope = 0;
  double deviation = 0;
};

struct GaussianReport {
  LinearFit mean_fit;
  LinearFit variance_fit;
  std::vector<ShapeAtN> shape;
  /// Present when c = (1,1).
  std::optional<LekkerkerkerCheck> lekkerkerker;
};

/// 1 / (phi^2 + 1)
double lekkerkerker_constant();

/// Throws Error(InvalidArgument) for fewer than three values of n.
GaussianReport gaussian_diagnostics(const RecurrenceVector& c, std::span<const SummandStats> stats);

inline constexpr std::size_t kDefaultNodeCap = 1'000'000;

/// Fewest summands over nonnegative strings with support <= bound, by
/// breadth-first growth from 0 adding one X_{-i} (i <= bound) per level.
/// Levels are kept, so one oracle answers many queries.
class MinimalityOracle {
 public:
  MinimalityOracle(const Recurrence& rec, std::size_t support_bound,
                   std::size_t node_cap = kDefaultNodeCap);

  /// Throws Error(OracleExhausted) once more than node_cap vectors are seen
  /// without reaching v.
  std::uint64_t minimum(const LatticeVector& v);

  std::size_t nodes() const noexcept { return level_.size(); }

 private:
  void expand();

  const Recurrence& rec_;
  std::size_t bound_;
  std::size_t cap_;
  std::unordered_map<LatticeVector, std::uint64_t, LatticeVectorHash> level_;
  std::vector<LatticeVector> frontier_;
  std::uint64_t depth_ = 0;
};

struct MinimalityResult {
  std::uint64_t sr_count = 0;
  std::uint64_t oracle_min = 0;
  bool minimal = false;
};

MinimalityResult check_minimality(const Recurrence& rec, const LatticeVector& v, std::size_t support_bound,
                                  std::size_t node_cap = kDefaultNodeCap);
MinimalityResult check_minimality(const Recurrence& rec, const LatticeVector& v, MinimalityOracle& oracle);

}  // namespace zeckvec
