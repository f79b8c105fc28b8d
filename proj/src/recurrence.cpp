#include "zeckvec/recurrence.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "zeckvec/error.hpp"

namespace zeckvec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidRecurrence: return "InvalidRecurrence";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotSatisfying: return "NotSatisfying";
    case ErrorKind::NotNsr: return "NotNsr";
    case ErrorKind::NotEndComplete: return "NotEndComplete";
    case ErrorKind::CarryBlocked: return "CarryBlocked";
    case ErrorKind::BorrowBlocked: return "BorrowBlocked";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::OracleExhausted: return "OracleExhausted";
    case ErrorKind::NonTermination: return "NonTermination";
  }
  return "Unknown";
}

std::string to_string(const BigInt& value) { return value.str(); }

BigInt parse_bigint(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t')) {
    trimmed.remove_prefix(1);
  }
  while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t')) {
    trimmed.remove_suffix(1);
  }
  bool negative = false;
  std::string_view digits = trimmed;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw Error(ErrorKind::ParseError, "not a decimal integer: '" + std::string(text) + "'");
  }
  BigInt value{std::string(digits)};
  return negative ? BigInt(-value) : value;
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::DomainError, "integer " + value.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(value);
}

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace

// ---------------------------------------------------------------------------
// RecurrenceVector

RecurrenceVector::RecurrenceVector(std::vector<BigInt> coefficients, Mode mode)
    : coefficients_(std::move(coefficients)), mode_(mode) {
  const auto k = coefficients_.size();
  if (k < 2) {
    throw Error(ErrorKind::InvalidRecurrence, "k >= 2 required (got k = " + std::to_string(k) + ")");
  }
  if (coefficients_.front() <= 0) {
    throw Error(ErrorKind::InvalidRecurrence, "c_1 > 0 required");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (coefficients_[i] < 0) {
      throw Error(ErrorKind::InvalidRecurrence,
                  "c_" + std::to_string(i + 1) + " >= 0 required");
    }
  }
  if (coefficients_.back() != 1) {
    throw Error(ErrorKind::InvalidRecurrence, "c_k = 1 required");
  }
  weakly_decreasing_ = std::is_sorted(coefficients_.rbegin(), coefficients_.rend());
  if (mode == Mode::Strict && !weakly_decreasing_) {
    throw Error(ErrorKind::InvalidRecurrence,
                "strict mode requires c weakly decreasing (c_1 >= c_2 >= ... >= c_k)");
  }
  for (const auto& ci : coefficients_) sum_ += ci;
}

RecurrenceVector RecurrenceVector::strict(std::vector<BigInt> coefficients) {
  return RecurrenceVector(std::move(coefficients), Mode::Strict);
}

RecurrenceVector RecurrenceVector::relaxed(std::vector<BigInt> coefficients) {
  return RecurrenceVector(std::move(coefficients), Mode::Relaxed);
}

RecurrenceVector RecurrenceVector::make(std::vector<BigInt> coefficients, Mode mode) {
  return RecurrenceVector(std::move(coefficients), mode);
}

RecurrenceVector RecurrenceVector::parse(std::string_view text, Mode mode) {
  std::vector<BigInt> coefficients;
  for (auto part : split_commas(text)) coefficients.push_back(parse_bigint(part));
  return RecurrenceVector(std::move(coefficients), mode);
}

std::size_t RecurrenceVector::longest_zero_run() const noexcept {
  std::size_t best = 0;
  std::size_t run = 0;
  for (const auto& ci : coefficients_) {
    run = ci.is_zero() ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

std::string RecurrenceVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i) out += ',';
    out += coefficients_[i].str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// LatticeVector

LatticeVector::LatticeVector(std::initializer_list<long long> entries) {
  entries_.reserve(entries.size());
  for (auto e : entries) entries_.emplace_back(e);
}

LatticeVector LatticeVector::unit(std::size_t dimension, std::size_t i) {
  LatticeVector v(dimension);
  v.entries_.at(i - 1) = 1;
  return v;
}

LatticeVector LatticeVector::parse(std::string_view text) {
  std::vector<BigInt> entries;
  for (auto part : split_commas(text)) entries.push_back(parse_bigint(part));
  return LatticeVector(std::move(entries));
}

bool LatticeVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& e) { return e.is_zero(); });
}

BigInt LatticeVector::sup_norm() const {
  BigInt best = 0;
  for (const auto& e : entries_) best = std::max(best, BigInt(abs(e)));
  return best;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

LatticeVector& LatticeVector::add_scaled(const BigInt& factor, const LatticeVector& other) {
  if (factor.is_zero()) return *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += factor * other.entries_[i];
  return *this;
}

LatticeVector operator*(const BigInt& factor, const LatticeVector& v) {
  LatticeVector out(v.dimension());
  return out.add_scaled(factor, v);
}

std::string LatticeVector::to_string() const { return "(" + to_csv() + ")"; }

std::string LatticeVector::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i].str();
  }
  return out;
}

std::size_t LatticeVectorHash::operator()(const LatticeVector& v) const noexcept {
  std::size_t seed = v.dimension();
  for (const auto& e : v.entries()) {
    seed ^= boost::multiprecision::hash_value(e) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

// ---------------------------------------------------------------------------
// Recurrence

Recurrence::Recurrence(RecurrenceVector c) : c_(std::move(c)) {
  const auto k = c_.k();
  // X_1 .. X_k from the initial-term rule.
  scalar_pos_.emplace_back(1);
  for (std::size_t n = 2; n <= k; ++n) {
    BigInt x = 1;
    for (std::size_t i = 1; i <= n - 1; ++i) x += c_.c(i) * scalar_pos_[n - i - 1];
    scalar_pos_.push_back(std::move(x));
  }
  term_pos_.emplace_back(k - 1);
  for (std::size_t i = 1; i < k; ++i) term_neg_.push_back(LatticeVector::unit(k - 1, i));
}

const BigInt& Recurrence::scalar(std::int64_t n) const {
  const auto k = static_cast<std::int64_t>(c_.k());
  if (n >= 1) {
    while (static_cast<std::int64_t>(scalar_pos_.size()) < n) {
      const auto m = static_cast<std::int64_t>(scalar_pos_.size()) + 1;
      BigInt x = 0;
      for (std::int64_t i = 1; i <= k; ++i) x += c_.c(i) * scalar_pos_[m - i - 1];
      scalar_pos_.push_back(std::move(x));
    }
    return scalar_pos_[n - 1];
  }
  const auto j = -n;
  while (static_cast<std::int64_t>(scalar_nonpos_.size()) <= j) {
    const auto m = -static_cast<std::int64_t>(scalar_nonpos_.size());
    // X_m = X_{m+k} - sum_{i=1}^{k-1} c_i X_{m+k-i}; all referenced indices exceed m.
    BigInt x = scalar(m + k);
    for (std::int64_t i = 1; i <= k - 1; ++i) x -= c_.c(i) * scalar(m + k - i);
    scalar_nonpos_.push_back(std::move(x));
  }
  return scalar_nonpos_[j];
}

const LatticeVector& Recurrence::term(std::int64_t n) const {
  const auto k = static_cast<std::int64_t>(c_.k());
  if (n >= 0) {
    while (static_cast<std::int64_t>(term_pos_.size()) <= n) {
      const auto m = static_cast<std::int64_t>(term_pos_.size());
      LatticeVector x(c_.k() - 1);
      for (std::int64_t i = 1; i <= k; ++i) x.add_scaled(c_.c(i), term(m - i));
      term_pos_.push_back(std::move(x));
    }
    return term_pos_[n];
  }
  const auto j = -n;
  while (static_cast<std::int64_t>(term_neg_.size()) < j) {
    const auto m = -static_cast<std::int64_t>(term_neg_.size()) - 1;
    LatticeVector x = term(m + k);
    for (std::int64_t i = 1; i <= k - 1; ++i) x.add_scaled(-c_.c(i), term(m + k - i));
    term_neg_.push_back(std::move(x));
  }
  return term_neg_[j - 1];
}

std::size_t Recurrence::scalar_floor_index(const BigInt& value) const {
  if (value < 1) return 0;
  std::size_t m = 1;
  while (scalar(static_cast<std::int64_t>(m) + 1) <= value) ++m;
  return m;
}

BigInt scalar_term(const RecurrenceVector& c, std::int64_t n) { return Recurrence(c).scalar(n); }

LatticeVector vector_term(const RecurrenceVector& c, std::int64_t n) {
  return Recurrence(c).term(n);
}

}  // namespace zeckvec
