#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zeckvec/bigint.hpp"
#include "zeckvec/recurrence.hpp"

namespace zeckvec {

/// A finitely supported string a_1 a_2 ... of nonnegative coefficients over
/// (X_{-n}). Stored dense from index 1 with trailing zeros trimmed, so the
/// zero representation is the empty string.
class CoefficientString {
 public:
  CoefficientString() = default;
  /// Throws Error(InvalidArgument) on a negative entry.
  explicit CoefficientString(std::vector<BigInt> coefficients);
  CoefficientString(std::initializer_list<long long> coefficients);

  /// Comma-separated decimals, lowest index first ("0,2,1"); "" is empty.
  static CoefficientString parse(std::string_view text);

  /// Support length m (index of the last nonzero coefficient).
  std::size_t length() const noexcept { return coefficients_.size(); }
  bool empty() const noexcept { return coefficients_.empty(); }

  /// a_i for i >= 1; zero beyond the support.
  const BigInt& operator[](std::size_t i) const;
  std::span<const BigInt> digits() const noexcept { return coefficients_; }

  std::string to_string() const;

  friend bool operator==(const CoefficientString&, const CoefficientString&) = default;
  friend bool operator<(const CoefficientString& a, const CoefficientString& b) {
    return a.coefficients_ < b.coefficients_;
  }

 private:
  std::vector<BigInt> coefficients_;
};

/// Componentwise sum of two strings.
CoefficientString operator+(const CoefficientString& a, const CoefficientString& b);

/// sum_n a_n X_{-n}
LatticeVector evaluate(const Recurrence& rec, const CoefficientString& a);
LatticeVector evaluate(const Recurrence& rec, std::span<const BigInt> digits);

/// One chunk a_{start} ... a_{start+length-1}; `matched` is s_i, the
/// position inside the chunk holding the first value below c_{s_i}.
struct ChunkSpan {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t matched = 0;

  friend bool operator==(const ChunkSpan&, const ChunkSpan&) = default;
};

struct ChunkDecomposition {
  std::vector<ChunkSpan> spans;

  /// CH(a)
  std::size_t count() const noexcept { return spans.size(); }
};

enum class Violation {
  None,
  /// a coefficient exceeds the value the current chunk allows
  TooLarge,
  /// the string contains a full copy c_1 ... c_k
  FullCopy,
};

/// Left-to-right reading of a string against the chunk grammar. The string is
/// read as infinite with zeros past its support.
struct ScanResult {
  bool satisfying = true;
  Violation violation = Violation::None;
  /// For non-SR strings: the first overfilled element I(a) (1-based), the
  /// start n_p of the chunk containing it and its offset j inside the chunk,
  /// so that first_overfilled = chunk_start + offset.
  std::size_t first_overfilled = 0;
  std::size_t chunk_start = 0;
  std::size_t offset = 0;
  /// Chunks completed before the violation (all chunks for an SR).
  ChunkDecomposition chunks;
};

ScanResult scan(const RecurrenceVector& c, std::span<const BigInt> digits);

/// Satisfying-representation test. The empty string is an SR.
bool is_sr(const RecurrenceVector& c, const CoefficientString& a);
bool is_sr(const RecurrenceVector& c, std::span<const BigInt> digits);

/// Chunk spans of an SR. Throws Error(NotSatisfying) otherwise.
ChunkDecomposition chunks(const RecurrenceVector& c, const CoefficientString& a);

/// True if a is an NSR whose last coefficient, decremented, leaves an SR
/// ending in the chunk c_1, ..., c_{k-1}, c_k - 1.
bool is_end_complete(const RecurrenceVector& c, std::span<const BigInt> digits);
bool is_end_complete(const RecurrenceVector& c, const CoefficientString& a);

enum class SrKind { SR, NSR, Other };

std::string_view to_string(SrKind kind);

struct SrClassification {
  SrKind kind = SrKind::SR;
  /// Smallest i with a_i >= 1 whose decrement yields an SR (NSR only).
  std::optional<std::size_t> witness;
  /// I(a), reported for every non-SR string.
  std::optional<std::size_t> first_overfilled;
  bool end_complete = false;
  Violation violation = Violation::None;
};

SrClassification classify(const RecurrenceVector& c, const CoefficientString& a);

/// G(a) = sum of all coefficients.
BigInt coefficient_sum(const CoefficientString& a);
BigInt coefficient_sum(std::span<const BigInt> digits);
/// G_n(a) = a_1 + ... + a_{n-1}. Throws Error(InvalidArgument) if n < 1.
BigInt prefix_sum(const CoefficientString& a, std::size_t n);

}  // namespace zeckvec
