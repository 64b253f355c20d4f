#ifndef FSPLIT_FSIG_HPP
#define FSPLIT_FSIG_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "fsplit/cartier.hpp"

namespace fsplit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Free-summand count at degree e, with the exact ratio a_e / q^dim.
struct FreeRankReport {
  int e;
  long long q;
  long long a_e;
  int dim;  // user-supplied quotient dimension
  Rational ratio;
};

// J_e = cap_u ((m^[q] + I^[q]) : u): ambient preimage of the elements every
// map of the multiplier set sends into the maximal ideal.
IdealHandle degeneracy_ideal(const QuotientPresentation& P,
                             const std::vector<Polynomial>& multipliers, long long q);

struct InfiniteColengthError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
FreeRankReport free_rank(const IdealHandle& J_e, long long q, int e, int dim);

// One report per e in [e_lo, e_hi]; multipliers regenerated per e from the
// divisor pattern.  Refuses q^nvars beyond the enumeration cap.
std::vector<FreeRankReport> ratio_sequence(
    const QuotientPresentation& P,
    const std::vector<std::pair<Polynomial, int>>& pattern, int e_lo, int e_hi,
    int dim);

// Exact volume of {x in [0,1]^n : sum x_i >= k} (Irwin-Hall).
Rational cube_halfspace_volume(int n, int k);

}  // namespace fsplit

#endif
