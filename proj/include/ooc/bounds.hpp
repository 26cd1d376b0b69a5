#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace ooc {

/// Maximum family size. Arbitrary precision: the bound outgrows 64 bits for
/// long codes with high correlation limits.
struct CapacityBound {
  boost::multiprecision::cpp_int C = 0;
};

/// floor((n-1)(n-2)...(n-lambda) / (omega(omega-1)...(omega-lambda))),
/// a single floor of the exact rational. Throws unless
/// 1 <= lambda < omega < n.
CapacityBound johnson_capacity(std::int64_t n, std::int64_t omega, std::int64_t lambda);

/// Classical nested-floor Johnson bound
/// floor(1/w floor((n-1)/(w-1) floor(... floor((n-lambda)/(w-lambda))))).
CapacityBound johnson_capacity_nested(std::int64_t n, std::int64_t omega, std::int64_t lambda);

/// Minimal length admitting a family of C codes at lambda = 1:
/// C * omega * (omega - 1) + 1. Throws for lambda != 1.
std::int64_t johnson_number(std::int64_t C, std::int64_t omega, std::int64_t lambda = 1);

}  // namespace ooc
