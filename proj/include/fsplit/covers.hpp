#ifndef FSPLIT_COVERS_HPP
#define FSPLIT_COVERS_HPP

#include <optional>

#include "fsplit/groebner.hpp"

namespace fsplit {

// Univariate polynomial in an auxiliary indeterminate T with coefficients in
// the base ring; coeffs[i] multiplies T^i.
struct UniPoly {
  RingPtr ring;
  std::vector<Polynomial> coeffs;

  UniPoly(RingPtr r, std::vector<Polynomial> c);
  int degree() const { return (int)coeffs.size() - 1; }
  bool is_monic() const;
  UniPoly derivative() const;
};

// Determinant of the Sylvester matrix (fraction-free elimination).
Polynomial resultant(const UniPoly& g, const UniPoly& h);

// (-1)^{d(d-1)/2} res(g, g') for monic g; nullopt when inseparable.
std::optional<Polynomial> discriminant(const UniPoly& g);

// Cover R[T]/(T^n - f); valuation m = val_P(f) is user-supplied.
struct KummerCover {
  int n;
  Polynomial radicand;
  long long characteristic;
  int valuation;
};
struct KummerReport {
  bool tame;
  long long e;        // ramification index n / gcd(n, m)
  Polynomial branch;  // disc(T^n - f), computed
};
KummerReport kummer_analyze(const KummerCover& K);

struct RamificationData {
  long long d, n, e, f;
};
// Pure arithmetic predicate d == n*e*f.
bool nef_check(const RamificationData& data);

// lhs - prod factor^mult lies in the modulus ideal.
bool verify_factorization(const Polynomial& lhs,
                          const std::vector<std::pair<Polynomial, int>>& factors,
                          const IdealHandle& modulus);

}  // namespace fsplit

#endif
