#include "zeckvec/bridge.hpp"

#include <cstdlib>
#include <string>

#include "zeckvec/error.hpp"

namespace zeckvec {

BigInt s_n_map(const Recurrence& rec, std::int64_t n, const LatticeVector& v) {
  const auto k = static_cast<std::int64_t>(rec.k());
  if (n < k - 2) {
    throw Error(ErrorKind::DomainError,
                "S_n needs n >= k - 2 = " + std::to_string(k - 2) + " (got " + std::to_string(n) + ")");
  }
  if (v.dimension() != rec.dimension()) {
    throw Error(ErrorKind::InvalidArgument, "vector " + v.to_string() + " has the wrong dimension");
  }
  const auto& modulus = rec.scalar(n);
  if (modulus <= 0) {
    throw Error(ErrorKind::DomainError, "X_" + std::to_string(n) + " is not positive");
  }
  BigInt s = 0;
  for (std::int64_t i = 1; i < k; ++i) s += v[static_cast<std::size_t>(i - 1)] * rec.scalar(n - i);
  s %= modulus;
  if (s < 0) s += modulus;
  return s;
}

// ---------------------------------------------------------------------------
// Greedy scalar decomposition

BigInt ScalarDecomposition::summands() const {
  BigInt total = 0;
  for (const auto& d : digits) total += d;
  return total;
}

BigInt ScalarDecomposition::coefficient(std::size_t index) const {
  if (index < 1 || index > top) return 0;
  return digits[top - index];
}

std::string ScalarDecomposition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (digits[i] != 1) out += digits[i].str() + "*";
    out += "X_" + std::to_string(top - i);
  }
  return out.empty() ? "0" : out;
}

ScalarDecomposition legal_decompose_scalar(const Recurrence& rec, const BigInt& n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "cannot decompose negative " + n.str());
  ScalarDecomposition out;
  out.top = rec.scalar_floor_index(n);
  out.digits.resize(out.top);
  BigInt rest = n;
  for (std::size_t idx = out.top; idx >= 1; --idx) {
    const auto& x = rec.scalar(static_cast<std::int64_t>(idx));
    out.digits[out.top - idx] = rest / x;
    rest -= out.digits[out.top - idx] * x;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::size_t enumeration_cap() {
  if (const char* env = std::getenv("ZECKVEC_CAP"); env != nullptr && *env != '\0') {
    try {
      const auto value = std::stoull(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidArgument, std::string("ZECKVEC_CAP is not a positive integer: ") + env);
  }
  return kDefaultEnumerationCap;
}

namespace {

struct Walker {
  const Recurrence& rec;
  std::size_t n;
  const SrVisitor& visit;
  std::vector<long long> bound;
  std::vector<BigInt> digits;
  std::vector<LatticeVector> points;

  // state = number of leading entries of c matched by the current chunk
  void step(std::size_t pos, std::size_t state) {
    if (pos > n) {
      visit(digits, points[n]);
      return;
    }
    const auto k = rec.k();
    const auto limit = bound[state];
    for (long long d = 0; d <= limit; ++d) {
      std::size_t next = 0;
      if (d == limit) {
        if (state + 1 == k) break;
        next = state + 1;
      }
      digits[pos - 1] = d;
      points[pos] = points[pos - 1];
      points[pos].add_scaled(d, rec.term(-static_cast<std::int64_t>(pos)));
      step(pos + 1, next);
    }
    digits[pos - 1] = 0;
  }
};

void check_cap(const Recurrence& rec, std::size_t n, std::size_t cap) {
  const auto& count = rec.scalar(static_cast<std::int64_t>(n) + 1);
  if (count > cap) {
    throw Error(ErrorKind::CapExceeded, "enumerating n = " + std::to_string(n) + " needs " +
                                            count.str() + " strings, cap is " + std::to_string(cap));
  }
}

}  // namespace

void for_each_sr(const Recurrence& rec, std::size_t n, const SrVisitor& visit, std::size_t cap) {
  check_cap(rec, n, cap);
  Walker walker{rec, n, visit, {}, std::vector<BigInt>(n), std::vector<LatticeVector>(n + 1, LatticeVector(rec.dimension()))};
  for (const auto& ci : rec.vector().coefficients()) walker.bound.push_back(to_int64(ci));
  walker.step(1, 0);
}

std::vector<CoefficientString> enumerate_sr(const Recurrence& rec, std::size_t n, std::size_t cap) {
  std::vector<CoefficientString> out;
  for_each_sr(
      rec, n,
      [&](std::span<const BigInt> digits, const LatticeVector&) {
        out.emplace_back(std::vector<BigInt>(digits.begin(), digits.end()));
      },
      cap);
  return out;
}

// ---------------------------------------------------------------------------
// Regions

const RegionMember* RegionSet::find(const LatticeVector& v) const {
  const auto it = index_.find(v);
  return it == index_.end() ? nullptr : &members[it->second];
}

void RegionSet::add(RegionMember member) {
  index_.emplace(member.point, members.size());
  members.push_back(std::move(member));
}

RegionSet region_d(const Recurrence& rec, std::size_t n, std::size_t cap) {
  RegionSet out;
  out.n = n;
  for_each_sr(
      rec, n,
      [&](std::span<const BigInt> digits, const LatticeVector& point) {
        CoefficientString sr(std::vector<BigInt>(digits.begin(), digits.end()));
        const auto first = sr.length();
        out.add({point, std::move(sr), first});
      },
      cap);
  return out;
}

RegionSet region_r(const Recurrence& rec, std::size_t n, std::size_t cap) {
  auto d = region_d(rec, n, cap);
  if (n == 0) return d;
  const auto previous = region_d(rec, n - 1, cap);
  RegionSet out;
  out.n = n;
  for (auto& member : d.members) {
    if (!previous.contains(member.point)) out.add(std::move(member));
  }
  return out;
}

RegionSet bridge_layer(const Recurrence& rec, std::size_t n, std::size_t cap) {
  auto d = region_d(rec, n, cap);
  const auto next = static_cast<std::int64_t>(n) + 1;
  const auto& low = rec.scalar(static_cast<std::int64_t>(n));
  const auto& high = rec.scalar(next);
  RegionSet out;
  out.n = n;
  for (auto& member : d.members) {
    const auto s = s_n_map(rec, next, member.point);
    if (s >= low && s < high) out.add(std::move(member));
  }
  return out;
}

std::size_t ball_coverage(const Recurrence& rec, std::size_t r, std::size_t cap) {
  BigInt target = 1;
  for (std::size_t i = 0; i < rec.dimension(); ++i) target *= 2 * r + 1;
  const BigInt radius = r;
  for (std::size_t n = 0;; ++n) {
    BigInt covered = 0;
    for_each_sr(
        rec, n,
        [&](std::span<const BigInt>, const LatticeVector& point) {
          if (point.sup_norm() <= radius) ++covered;
        },
        cap);
    if (covered == target) return n;
  }
}

}  // namespace zeckvec
