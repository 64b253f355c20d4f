#ifndef FSPLIT_FIELD_HPP
#define FSPLIT_FIELD_HPP

#include <cstdint>
#include <stdexcept>

namespace fsplit {

// Prime fields F_p with single-word characteristic (p < 2^31).
inline bool is_prime(long long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

inline long long mod_reduce(long long v, long long p) {
  v %= p;
  return v < 0 ? v + p : v;
}

inline long long mod_mul(long long a, long long b, long long p) {
  return (a * b) % p;  // a,b < 2^31 so the product fits in 64 bits
}

inline long long mod_pow(long long a, long long k, long long p) {
  long long r = 1 % p;
  a = mod_reduce(a, p);
  while (k > 0) {
    if (k & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    k >>= 1;
  }
  return r;
}

inline long long mod_inv(long long a, long long p) {
  a = mod_reduce(a, p);
  if (a == 0) throw std::domain_error("division by zero in F_p");
  return mod_pow(a, p - 2, p);
}

// An element of F_p, kept as the least non-negative residue.
struct FieldElem {
  long long value = 0;
  long long characteristic = 2;

  FieldElem() = default;
  FieldElem(long long v, long long p) : value(mod_reduce(v, p)), characteristic(p) {}

  FieldElem operator+(const FieldElem& o) const { return {value + o.value, check(o)}; }
  FieldElem operator-(const FieldElem& o) const { return {value - o.value, check(o)}; }
  FieldElem operator*(const FieldElem& o) const { return {value * o.value, check(o)}; }
  FieldElem operator/(const FieldElem& o) const {
    return {value * mod_inv(o.value, check(o)), characteristic};
  }
  FieldElem operator-() const { return {-value, characteristic}; }
  bool operator==(const FieldElem& o) const = default;
  bool is_zero() const { return value == 0; }

 private:
  long long check(const FieldElem& o) const {
    if (characteristic != o.characteristic)
      throw std::invalid_argument("field characteristic mismatch");
    return characteristic;
  }
};

}  // namespace fsplit

#endif
