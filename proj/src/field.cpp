#include "pathhom/field.hpp"

#include <stdexcept>

namespace pathhom {

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero");
  return 1 / a;
}

PrimeField::PrimeField(std::int64_t prime) : p(prime) {
  if (prime < 2 || prime >= (std::int64_t{1} << 31))
    throw std::invalid_argument("field modulus out of range [2, 2^31)");
  if (!is_prime(prime))
    throw std::invalid_argument("field modulus " + std::to_string(prime) +
                                " is not prime");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero");
  /* extended euclid: find x with a*x = 1 mod p */
  std::int64_t r0 = p, r1 = a, x0 = 0, x1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t x2 = x0 - q * x1;
    r0 = r1;
    r1 = r2;
    x0 = x1;
    x1 = x2;
  }
  return x0 < 0 ? x0 + p : x0;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace pathhom
