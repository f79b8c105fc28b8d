#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zeckvec/bigint.hpp"
#include "zeckvec/recurrence.hpp"
#include "zeckvec/representation.hpp"

namespace zeckvec {

enum class TraceOp { Add, Carry, Borrow };

std::string_view to_string(TraceOp op);

/// One rewriting step, possibly repeated `count` times at the same position.
/// Carry and Borrow preserve the value; Add increments a_position.
struct TraceRecord {
  TraceOp op = TraceOp::Carry;
  std::size_t position = 0;
  BigInt count = 1;
  CoefficientString result;
  /// G(result)
  BigInt g;
  /// 0-based index of this step in the full (unthinned) sequence.
  std::size_t ordinal = 0;
};

/// Ordered carry/borrow steps. The first `kFullRetention` steps are kept in
/// full, later ones only every `kThinStride`-th; the G history is complete.
class NormalizationTrace {
 public:
  static constexpr std::size_t kFullRetention = 1000;
  static constexpr std::size_t kThinStride = 100;

  TraceRecord record(TraceOp op, std::size_t position, const BigInt& count,
                     std::span<const BigInt> digits);

  std::span<const TraceRecord> steps() const noexcept { return steps_; }
  std::span<const BigInt> g_history() const noexcept { return g_history_; }
  std::size_t step_count() const noexcept { return step_count_; }
  bool thinned() const noexcept { return step_count_ > steps_.size(); }

  bool terminated = false;

 private:
  std::vector<TraceRecord> steps_;
  std::vector<BigInt> g_history_;
  std::size_t step_count_ = 0;
};

enum class ProbeOutcome { Terminated, BudgetExceeded };
enum class StopReason { None, StepBudget, SupportBound };

std::string_view to_string(ProbeOutcome outcome);
std::string_view to_string(StopReason reason);

/// A window (the string from the start of the offending chunk onwards) that
/// reappears further right, e.g. "0,5,2" re-emerging after a "1,3,0" block.
struct RecurringPattern {
  std::string window;
  std::size_t first_iteration = 0;
  std::size_t repeat_iteration = 0;
  std::size_t shift = 0;
};

struct ProbeReport {
  ProbeOutcome outcome = ProbeOutcome::Terminated;
  StopReason reason = StopReason::None;
  /// The SR reached when outcome == Terminated, else the last string.
  CoefficientString final_string;
  NormalizationTrace trace;
  std::size_t budget = 0;
  std::size_t iterations = 0;
  std::size_t max_support = 0;
  std::optional<RecurringPattern> pattern;
};

inline constexpr std::size_t kDefaultBudget = 10'000;
inline constexpr std::size_t kUnlimitedBudget = std::numeric_limits<std::size_t>::max();

/// Carrying into a_i `times` times: a_i += times, a_{i+l} -= times * c_l.
/// i = 0 is the virtual position whose increment multiplies X_0 = 0 and is
/// discarded. Throws Error(CarryBlocked) if some a_{i+l} < times * c_l.
CoefficientString carry(const RecurrenceVector& c, const CoefficientString& a, std::size_t i,
                        const BigInt& times = 1);

/// Borrowing from a_i `times` times: a_i -= times, a_{i+l} += times * c_l.
/// Throws Error(BorrowBlocked) if a_i < times or i = 0.
CoefficientString borrow(const RecurrenceVector& c, const CoefficientString& a, std::size_t i,
                         const BigInt& times = 1);

struct Resolution {
  CoefficientString result;
  NormalizationTrace trace;
};

/// Turns an end-complete NSR into an SR using carries only: carry into the
/// position before the terminal copy of c, repeat while the result is still
/// end complete. Throws Error(NotEndComplete).
Resolution resolve_end_complete(const RecurrenceVector& c, const CoefficientString& a);

/// The borrow/carry iteration for NSRs. Each iteration locates the first
/// overfilled element p = n_p + j, borrows from it the fewest times that let
/// the copy of c at n_p fit (at most down to c_{j+1}), carries into n_p - 1
/// when it fits, and resolves the resulting end-complete prefix. Stops on an SR or when the step budget is
/// spent; in relaxed mode it also stops once the support grows past
/// length(a) + 50k. Throws Error(NotNsr) unless classify(a) is NSR.
ProbeReport normalize_nsr(const RecurrenceVector& c, const CoefficientString& a,
                          std::size_t budget = kDefaultBudget);

/// normalize_nsr plus divergence diagnostics (support growth, recurring
/// windows). Intended for relaxed recurrences.
ProbeReport probe_termination(const RecurrenceVector& c, const CoefficientString& a,
                              std::size_t budget = kDefaultBudget);

/// a + e_i renormalized to an SR. Needs is_sr(a). Throws Error(NonTermination)
/// if normalization does not finish within `budget` steps (relaxed mode only;
/// strict mode always terminates).
CoefficientString increment(const RecurrenceVector& c, const CoefficientString& a, std::size_t i,
                            std::size_t budget = kUnlimitedBudget,
                            std::vector<TraceRecord>* trace = nullptr);

/// The unique SR of v (strict mode). Computed through the scalar bridge: the
/// greedy scalar decomposition of S_N(v), read back as a vector string, for
/// growing N until it evaluates to v.
CoefficientString decompose(const Recurrence& rec, const LatticeVector& v);

/// The unique SR of v built the constructive way: starting from the empty SR,
/// increment t times at index k, then v_j + t c_j times at index j < k, where
/// t makes v - t X_{-k} nonnegative. Optionally records every Add/Carry/Borrow.
CoefficientString decompose_incremental(const Recurrence& rec, const LatticeVector& v,
                                        std::vector<TraceRecord>* trace = nullptr);

struct SpanningReport {
  bool all_representable = true;
  std::size_t checked = 0;
  std::vector<LatticeVector> failures;
  /// One representation per representable vector, in ball-scan order.
  std::vector<std::pair<LatticeVector, CoefficientString>> witnesses;
};

/// For every v with sup-norm <= radius, searches nonnegative strings with
/// support <= support_bound (tail coefficients a_k.. capped at
/// coefficient_cap, default 4 * radius + 4) representing v.
/// Throws Error(InvalidArgument) if support_bound < k + (longest zero run).
SpanningReport spanning_probe(const Recurrence& rec, std::size_t radius, std::size_t support_bound,
                              std::optional<std::size_t> coefficient_cap = std::nullopt);

}  // namespace zeckvec
