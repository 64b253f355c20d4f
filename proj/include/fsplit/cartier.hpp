#ifndef FSPLIT_CARTIER_HPP
#define FSPLIT_CARTIER_HPP

#include "fsplit/frobenius.hpp"

namespace fsplit {

// Degree-e piece of a (restricted) Cartier algebra held as premultipliers u,
// representing the maps trace^e . u on the presentation.
struct MultiplierSet {
  FrobeniusDegree degree;
  std::vector<Polynomial> premultipliers;
  QuotientPresentation presentation;
};

// Frobenius trace: trace^e(x^a) = x^{(a - (q-1)*1)/q} when every shifted
// component is a non-negative multiple of q, else the monomial drops out.
// Returns trace^e(u * f).
Polynomial trace_apply(const Polynomial& u, const Polynomial& f, int e);

struct CenterRestriction {
  enum class Status { Ok, ZeroRestriction, FrameError };
  Status status;
  IdealHandle center;
  std::vector<int> quotient_vars;  // surviving variable indices
  Polynomial extracted;            // premultiplier of the restricted map
  FieldElem unit;                  // leading scalar xi
};

// Reduce u mod center^[q] and divide by prod(g_i^{q-1}) over the center's
// generators.  The frame must be monomial-triangular: variables plus at most
// one general polynomial.
CenterRestriction restrict_to_center(const Polynomial& u, const IdealHandle& center,
                                     long long q);

// All products prod gen_k^{c_k} with sum c_k*weight_k >= q-1, c_k <= q-1
// (componentwise-minimal exponent solutions), times the presentation's
// Fedder witness family, deduplicated modulo I^[q].
MultiplierSet enumerate_divisor_multipliers(
    const QuotientPresentation& P,
    const std::vector<std::pair<Polynomial, int>>& pattern, long long q);

}  // namespace fsplit

#endif
