#pragma once

#include <initializer_list>
#include <vector>

#include "oracles.hpp"
#include "zeckvec/recurrence.hpp"
#include "zeckvec/representation.hpp"

namespace testing_support {

inline zeckvec::RecurrenceVector strict(std::initializer_list<long long> c) {
  return zeckvec::RecurrenceVector::strict(std::vector<zeckvec::BigInt>(c.begin(), c.end()));
}

inline zeckvec::RecurrenceVector relaxed(std::initializer_list<long long> c) {
  return zeckvec::RecurrenceVector::relaxed(std::vector<zeckvec::BigInt>(c.begin(), c.end()));
}

inline oracle::Ints ints(const zeckvec::RecurrenceVector& c) {
  oracle::Ints out;
  for (const auto& ci : c.coefficients()) out.push_back(static_cast<long long>(ci));
  return out;
}

inline oracle::Ints ints(const zeckvec::LatticeVector& v) {
  oracle::Ints out;
  for (const auto& e : v.entries()) out.push_back(static_cast<long long>(e));
  return out;
}

inline oracle::Ints ints(const zeckvec::CoefficientString& a) {
  oracle::Ints out;
  for (const auto& e : a.digits()) out.push_back(static_cast<long long>(e));
  return out;
}

inline zeckvec::CoefficientString string_of(const oracle::Ints& a) {
  return zeckvec::CoefficientString(std::vector<zeckvec::BigInt>(a.begin(), a.end()));
}

inline zeckvec::LatticeVector vector_of(const oracle::Ints& v) {
  return zeckvec::LatticeVector(std::vector<zeckvec::BigInt>(v.begin(), v.end()));
}

}  // namespace testing_support
