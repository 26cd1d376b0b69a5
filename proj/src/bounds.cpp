#include "ooc/bounds.hpp"

#include <stdexcept>

namespace ooc {

namespace {

using boost::multiprecision::cpp_int;

void check(std::int64_t n, std::int64_t omega, std::int64_t lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be at least 1");
  if (omega <= lambda) throw std::invalid_argument("omega must exceed lambda");
  if (n <= omega) throw std::invalid_argument("n must exceed omega");
}

}  // namespace

CapacityBound johnson_capacity(std::int64_t n, std::int64_t omega, std::int64_t lambda) {
  check(n, omega, lambda);
  cpp_int num = 1;
  cpp_int den = omega;
  for (std::int64_t k = 1; k <= lambda; ++k) {
    num *= n - k;
    den *= omega - k;
  }
  return CapacityBound{num / den};
}

CapacityBound johnson_capacity_nested(std::int64_t n, std::int64_t omega, std::int64_t lambda) {
  check(n, omega, lambda);
  cpp_int value = 1;
  for (std::int64_t k = lambda; k >= 1; --k) value = (value * (n - k)) / (omega - k);
  return CapacityBound{value / omega};
}

std::int64_t johnson_number(std::int64_t C, std::int64_t omega, std::int64_t lambda) {
  if (lambda != 1) throw std::invalid_argument("Johnson number is only defined for lambda = 1");
  if (C < 1) throw std::invalid_argument("family size must be at least 1");
  if (omega < 2) throw std::invalid_argument("omega must be at least 2");
  return C * omega * (omega - 1) + 1;
}

}  // namespace ooc
