#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "zeckvec/bigint.hpp"
#include "zeckvec/recurrence.hpp"
#include "zeckvec/representation.hpp"

namespace zeckvec {

/// S_n(v) = v . (X_{n-1}, ..., X_{n-k+1}) mod X_n, reduced into [0, X_n).
/// Throws Error(DomainError) if n < k - 2.
BigInt s_n_map(const Recurrence& rec, std::int64_t n, const LatticeVector& v);

/// Greedy decomposition N = sum_i digits[i-1] * X_{top-i+1}.
struct ScalarDecomposition {
  /// Index M of the largest term X_M <= N; 0 for N = 0.
  std::size_t top = 0;
  std::vector<BigInt> digits;

  /// Number of summands (sum of digits).
  BigInt summands() const;
  /// Coefficient on X_index; zero outside [1, top].
  BigInt coefficient(std::size_t index) const;
  std::string to_string() const;
};

/// Generalized Zeckendorf decomposition of N >= 0 over X_1, X_2, ... by
/// repeatedly taking the largest multiple of the largest term that fits.
/// Throws Error(InvalidArgument) if N < 0.
ScalarDecomposition legal_decompose_scalar(const Recurrence& rec, const BigInt& n);

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

/// kDefaultEnumerationCap, or the value of ZECKVEC_CAP when set.
std::size_t enumeration_cap();

using SrVisitor = std::function<void(std::span<const BigInt> digits, const LatticeVector& point)>;

/// Visits every SR with support in [1, n] in lexicographic order of
/// (a_1, ..., a_n), together with its value. Throws Error(CapExceeded) if
/// X_{n+1} > cap.
void for_each_sr(const Recurrence& rec, std::size_t n, const SrVisitor& visit,
                 std::size_t cap = enumeration_cap());

std::vector<CoefficientString> enumerate_sr(const Recurrence& rec, std::size_t n,
                                            std::size_t cap = enumeration_cap());

struct RegionMember {
  LatticeVector point;
  CoefficientString sr;
  /// Smallest i with point in D_i (the support length of its SR).
  std::size_t n_first = 0;
};

struct RegionSet {
  std::size_t n = 0;
  /// In enumeration order.
  std::vector<RegionMember> members;

  bool contains(const LatticeVector& v) const { return index_.count(v) != 0; }
  const RegionMember* find(const LatticeVector& v) const;
  std::size_t size() const noexcept { return members.size(); }

  void add(RegionMember member);

 private:
  std::unordered_map<LatticeVector, std::size_t, LatticeVectorHash> index_;
};

/// D_n: values of all SRs with support in [1, n].
RegionSet region_d(const Recurrence& rec, std::size_t n, std::size_t cap = enumeration_cap());

/// R_n = D_n \ D_{n-1}; R_0 = D_0 = {0}.
RegionSet region_r(const Recurrence& rec, std::size_t n, std::size_t cap = enumeration_cap());

/// Members v of D_n with X_n <= S_{n+1}(v) < X_{n+1}.
RegionSet bridge_layer(const Recurrence& rec, std::size_t n, std::size_t cap = enumeration_cap());

/// Smallest n with every v, |v|_inf <= r, in D_n. Throws Error(CapExceeded)
/// when the next region would exceed the cap.
std::size_t ball_coverage(const Recurrence& rec, std::size_t r, std::size_t cap = enumeration_cap());

}  // namespace zeckvec
