#include "zeckvec/representation.hpp"

#include <algorithm>

#include "zeckvec/error.hpp"

namespace zeckvec {

namespace {

const BigInt kZero = 0;

std::size_t support_length(std::span<const BigInt> digits) {
  auto m = digits.size();
  while (m > 0 && digits[m - 1].is_zero()) --m;
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// CoefficientString

CoefficientString::CoefficientString(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] < 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "coefficient a_" + std::to_string(i + 1) + " is negative");
    }
  }
  coefficients_.resize(support_length(coefficients_));
}

CoefficientString::CoefficientString(std::initializer_list<long long> coefficients)
    : CoefficientString(std::vector<BigInt>(coefficients.begin(), coefficients.end())) {}

CoefficientString CoefficientString::parse(std::string_view text) {
  if (std::all_of(text.begin(), text.end(), [](char ch) { return ch == ' ' || ch == '\t'; })) {
    return {};
  }
  std::vector<BigInt> coefficients;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto part = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    auto value = parse_bigint(part);
    if (value < 0) {
      throw Error(ErrorKind::ParseError, "coefficients must be nonnegative: '" + std::string(part) + "'");
    }
    coefficients.push_back(std::move(value));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return CoefficientString(std::move(coefficients));
}

const BigInt& CoefficientString::operator[](std::size_t i) const {
  if (i == 0 || i > coefficients_.size()) return kZero;
  return coefficients_[i - 1];
}

std::string CoefficientString::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i) out += ',';
    out += coefficients_[i].str();
  }
  return out;
}

CoefficientString operator+(const CoefficientString& a, const CoefficientString& b) {
  std::vector<BigInt> sum(std::max(a.length(), b.length()));
  for (std::size_t i = 1; i <= sum.size(); ++i) sum[i - 1] = a[i] + b[i];
  return CoefficientString(std::move(sum));
}

LatticeVector evaluate(const Recurrence& rec, std::span<const BigInt> digits) {
  LatticeVector v(rec.dimension());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    v.add_scaled(digits[i], rec.term(-static_cast<std::int64_t>(i + 1)));
  }
  return v;
}

LatticeVector evaluate(const Recurrence& rec, const CoefficientString& a) {
  return evaluate(rec, a.digits());
}

// ---------------------------------------------------------------------------
// Grammar

ScanResult scan(const RecurrenceVector& c, std::span<const BigInt> digits) {
  ScanResult result;
  const auto m = support_length(digits);
  const auto k = c.k();
  auto at = [&](std::size_t p) -> const BigInt& { return p <= m ? digits[p - 1] : kZero; };

  std::size_t i = 1;
  while (i <= m) {
    std::size_t j = 0;
    while (j < k && at(i + j) == c.c(j + 1)) ++j;
    if (j == k) {
      result.satisfying = false;
      result.violation = Violation::FullCopy;
      result.chunk_start = i;
      result.offset = k - 1;
      result.first_overfilled = i + k - 1;
      return result;
    }
    if (at(i + j) > c.c(j + 1)) {
      result.satisfying = false;
      result.violation = Violation::TooLarge;
      result.chunk_start = i;
      result.offset = j;
      result.first_overfilled = i + j;
      return result;
    }
    auto next = i + j + 1;
    while (next <= m && digits[next - 1].is_zero()) ++next;
    result.chunks.spans.push_back({i, std::min(next, m + 1) - i, j + 1});
    i = next;
  }
  return result;
}

bool is_sr(const RecurrenceVector& c, std::span<const BigInt> digits) {
  return scan(c, digits).satisfying;
}

bool is_sr(const RecurrenceVector& c, const CoefficientString& a) { return is_sr(c, a.digits()); }

ChunkDecomposition chunks(const RecurrenceVector& c, const CoefficientString& a) {
  auto result = scan(c, a.digits());
  if (!result.satisfying) {
    throw Error(ErrorKind::NotSatisfying, "'" + a.to_string() + "' is not a c-SR for c = (" +
                                              c.to_string() + ")");
  }
  return std::move(result.chunks);
}

bool is_end_complete(const RecurrenceVector& c, std::span<const BigInt> digits) {
  const auto m = support_length(digits);
  const auto k = c.k();
  if (m < k) return false;
  std::vector<BigInt> lowered(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(m));
  lowered[m - 1] -= 1;
  const auto result = scan(c, lowered);
  if (!result.satisfying || result.chunks.spans.empty()) return false;
  const auto& last = result.chunks.spans.back();
  return last.start == m - k + 1 && last.matched == k;
}

bool is_end_complete(const RecurrenceVector& c, const CoefficientString& a) {
  return is_end_complete(c, a.digits());
}

std::string_view to_string(SrKind kind) {
  switch (kind) {
    case SrKind::SR: return "SR";
    case SrKind::NSR: return "NSR";
    case SrKind::Other: return "Other";
  }
  return "Other";
}

SrClassification classify(const RecurrenceVector& c, const CoefficientString& a) {
  SrClassification out;
  const auto result = scan(c, a.digits());
  if (result.satisfying) return out;

  out.violation = result.violation;
  out.first_overfilled = result.first_overfilled;
  // Lowering a coefficient past I(a) leaves the offending prefix intact.
  std::vector<BigInt> work(a.digits().begin(), a.digits().end());
  for (std::size_t i = 1; i <= result.first_overfilled && i <= work.size(); ++i) {
    if (work[i - 1].is_zero()) continue;
    work[i - 1] -= 1;
    const bool fixed = is_sr(c, work);
    work[i - 1] += 1;
    if (fixed) {
      out.kind = SrKind::NSR;
      out.witness = i;
      out.end_complete = is_end_complete(c, a);
      return out;
    }
  }
  out.kind = SrKind::Other;
  return out;
}

BigInt coefficient_sum(std::span<const BigInt> digits) {
  BigInt total = 0;
  for (const auto& d : digits) total += d;
  return total;
}

BigInt coefficient_sum(const CoefficientString& a) { return coefficient_sum(a.digits()); }

BigInt prefix_sum(const CoefficientString& a, std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "prefix_sum requires n >= 1");
  BigInt total = 0;
  for (std::size_t i = 1; i < n && i <= a.length(); ++i) total += a[i];
  return total;
}

}  // namespace zeckvec
