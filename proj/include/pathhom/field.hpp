#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pathhom {

/* Exact coefficient fields. Algorithms are templated on a field object that
   supplies arithmetic on a plain element type; elements carry no field tag. */

struct RationalField {
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string str(const Elem& a) const { return a.get_str(); }
};

/* F_p with 2 <= p < 2^31 so products fit in int64. Elements are canonical
   representatives in [0, p). */
struct PrimeField {
  using Elem = std::int64_t;

  explicit PrimeField(std::int64_t prime);

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long v) const {
    Elem r = static_cast<Elem>(v) % p;
    return r < 0 ? r + p : r;
  }
  Elem add(Elem a, Elem b) const {
    Elem r = a + b;
    return r >= p ? r - p : r;
  }
  Elem sub(Elem a, Elem b) const {
    Elem r = a - b;
    return r < 0 ? r + p : r;
  }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string str(Elem a) const { return std::to_string(a); }

  std::int64_t p;
};

bool is_prime(std::int64_t n);

}  // namespace pathhom
