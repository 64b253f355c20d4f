#ifndef FSPLIT_FROBENIUS_HPP
#define FSPLIT_FROBENIUS_HPP

#include <optional>

#include "fsplit/groebner.hpp"

namespace fsplit {

// e together with q = p^e.
struct FrobeniusDegree {
  int e;
  long long q;
  static FrobeniusDegree of(long long p, int e) {
    if (e < 1) throw std::invalid_argument("e must be positive");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
      if (q > (1LL << 40) / p) throw std::overflow_error("q too large");
      q *= p;
    }
    return {e, q};
  }
};

// Checks q = p^e; returns e.
int check_prime_power(long long q, long long p);

// R = S/I local at max_ideal (defaults to the ideal of all variables).
struct QuotientPresentation {
  RingPtr ring;
  IdealHandle defining;
  IdealHandle max_ideal;

  QuotientPresentation(RingPtr r, IdealHandle I);
  QuotientPresentation(RingPtr r, IdealHandle I, IdealHandle m);
};

// I^[q]: ideal of generator q-th powers.
IdealHandle bracket_power(const IdealHandle& I, long long q);

// Smallest K with J contained in K^[q].
IdealHandle frobenius_root(const IdealHandle& J, long long q);

struct FedderResult {
  bool fpure;
  std::optional<Polynomial> witness;  // first colon generator outside m^[q]
};
FedderResult fedder_fpure(const QuotientPresentation& P, long long q);

// True iff u*J is contained in J^[q] + I^[q]; throws FedderPreconditionError
// when u is outside (I^[q] : I).
struct FedderPreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
bool compatible_test(const Polynomial& u, const IdealHandle& J,
                     const QuotientPresentation& P, long long q);

struct SplittingPrimeResult {
  enum class Status { Converged, Nonconverged, Degenerate };
  Status status;
  IdealHandle ideal;
  int iterations;
};
// Largest ideal J inside the maximal ideal with u*J in J^[q] + I^[q] for
// every multiplier u, i.e. the limit of the decreasing iteration J_0 = m,
// J_{k+1} = J_k cap cap_u ((J_k^[q]+I^[q]) : u).  That iteration can descend
// forever without reaching its limit, so convergence is certified from below:
// a multiplier-stable lower bound is grown by Frobenius-root closures of the
// iterate's reduced generators, and generators whose closure escapes the
// maximal ideal are rejected for good.  Converged is returned once the bound
// and the rejections account for every generator of two consecutive iterates
// (or a literal fixed point is hit); iterations reports the rounds used.
SplittingPrimeResult splitting_prime(const QuotientPresentation& P,
                                     const std::vector<Polynomial>& multipliers,
                                     long long q, int cap = 30);

// Premultiplier of the e'-fold composite of the degree-e map with
// premultiplier u: exponent 1 + q + ... + q^{e'-1} with q = p^e.
Polynomial multiplier_compose(const Polynomial& u, int e, int e_prime);

}  // namespace fsplit

#endif
