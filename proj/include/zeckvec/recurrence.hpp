#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zeckvec/bigint.hpp"

namespace zeckvec {

enum class Mode {
  /// c1 > 0, ci >= 0, ck = 1 and c weakly decreasing. Existence, uniqueness
  /// and termination of the rewriting engine are guaranteed.
  Strict,
  /// c1 > 0, ci >= 0, ck = 1 only. Accepted by the probes.
  Relaxed,
};

/// The defining coefficients (c1, ..., ck) of a recurrence.
class RecurrenceVector {
 public:
  /// Throws Error(InvalidRecurrence) naming the first violated condition.
  static RecurrenceVector strict(std::vector<BigInt> coefficients);
  static RecurrenceVector relaxed(std::vector<BigInt> coefficients);
  static RecurrenceVector make(std::vector<BigInt> coefficients, Mode mode);

  /// Comma-separated decimal form, e.g. "2,1,1".
  static RecurrenceVector parse(std::string_view text, Mode mode);

  std::size_t k() const noexcept { return coefficients_.size(); }
  /// 1-based access, 1 <= i <= k.
  const BigInt& c(std::size_t i) const { return coefficients_.at(i - 1); }
  std::span<const BigInt> coefficients() const noexcept { return coefficients_; }
  /// c1 + ... + ck
  const BigInt& sum() const noexcept { return sum_; }
  Mode mode() const noexcept { return mode_; }
  bool weakly_decreasing() const noexcept { return weakly_decreasing_; }
  /// Longest run of consecutive zero coefficients.
  std::size_t longest_zero_run() const noexcept;

  std::string to_string() const;

  friend bool operator==(const RecurrenceVector& a, const RecurrenceVector& b) {
    return a.coefficients_ == b.coefficients_;
  }

 private:
  RecurrenceVector(std::vector<BigInt> coefficients, Mode mode);

  std::vector<BigInt> coefficients_;
  BigInt sum_;
  Mode mode_;
  bool weakly_decreasing_ = false;
};

/// An element of Z^{k-1}.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dimension) : entries_(dimension) {}
  explicit LatticeVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {}
  LatticeVector(std::initializer_list<long long> entries);

  static LatticeVector unit(std::size_t dimension, std::size_t i);
  /// Comma-separated decimal form; negative entries allowed.
  static LatticeVector parse(std::string_view text);

  std::size_t dimension() const noexcept { return entries_.size(); }
  const BigInt& operator[](std::size_t i) const { return entries_[i]; }
  BigInt& operator[](std::size_t i) { return entries_[i]; }
  std::span<const BigInt> entries() const noexcept { return entries_; }

  bool is_zero() const;
  /// max |entry|
  BigInt sup_norm() const;

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  /// this += factor * other
  LatticeVector& add_scaled(const BigInt& factor, const LatticeVector& other);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const BigInt& factor, const LatticeVector& v);
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return a.entries_ < b.entries_;
  }

  /// "(x1,...,xd)"
  std::string to_string() const;
  /// "x1,...,xd"
  std::string to_csv() const;

 private:
  std::vector<BigInt> entries_;
};

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept;
};

/// Scalar and vector sequences of a recurrence with append-only memo caches.
///
/// Scalar terms: X_1 = 1, X_n = c1 X_{n-1} + ... + c_{n-1} X_1 + 1 for
/// 2 <= n <= k, the full recurrence afterwards, and for n <= 0 the backward
/// relation X_n = X_{n+k} - sum_{i<k} c_i X_{n+k-i} (which forces X_0 = 1).
///
/// Vector terms: X_0 = 0, X_{-i} = e_i for 1 <= i < k, forward recurrence for
/// n >= 1 and backward recurrence for n <= -k.
///
/// Terms are pure functions of (c, n). The caches are mutated on first access,
/// so one instance must not be shared between threads without external locking;
/// copies are independent.
class Recurrence {
 public:
  explicit Recurrence(RecurrenceVector c);

  const RecurrenceVector& vector() const noexcept { return c_; }
  std::size_t k() const noexcept { return c_.k(); }
  std::size_t dimension() const noexcept { return c_.k() - 1; }

  /// X_n for any integer n. The reference stays valid for the lifetime of
  /// this object.
  const BigInt& scalar(std::int64_t n) const;
  /// Vector term X_n for any integer n.
  const LatticeVector& term(std::int64_t n) const;

  /// Largest M >= 1 with X_M <= value, or 0 if value < 1.
  std::size_t scalar_floor_index(const BigInt& value) const;

 private:
  RecurrenceVector c_;
  // scalar_pos_[n - 1] = X_n (n >= 1), scalar_nonpos_[j] = X_{-j} (j >= 0).
  mutable std::deque<BigInt> scalar_pos_;
  mutable std::deque<BigInt> scalar_nonpos_;
  // term_pos_[n] = X_n (n >= 0), term_neg_[j - 1] = X_{-j} (j >= 1).
  mutable std::deque<LatticeVector> term_pos_;
  mutable std::deque<LatticeVector> term_neg_;
};

/// X_n for a recurrence given by its coefficients.
BigInt scalar_term(const RecurrenceVector& c, std::int64_t n);
LatticeVector vector_term(const RecurrenceVector& c, std::int64_t n);

}  // namespace zeckvec
