#include "fsplit/fsig.hpp"

namespace fsplit {

IdealHandle degeneracy_ideal(const QuotientPresentation& P,
                             const std::vector<Polynomial>& multipliers, long long q) {
  if (multipliers.empty()) throw std::invalid_argument("empty multiplier set");
  check_prime_power(q, P.ring->characteristic);
  IdealHandle K = ideal_sum(bracket_power(P.max_ideal, q), bracket_power(P.defining, q));
  bool first = true;
  IdealHandle J;
  for (const auto& u : multipliers) {
    IdealHandle c = ideal_colon(K, u);
    J = first ? c : ideal_intersect(J, c);
    first = false;
  }
  return J;
}

FreeRankReport free_rank(const IdealHandle& J_e, long long q, int e, int dim) {
  auto len = colength(J_e);
  if (!len.has_value()) throw InfiniteColengthError("degeneracy ideal has infinite colength");
  BigInt den = 1;
  for (int i = 0; i < dim; ++i) den *= q;
  return {e, q, *len, dim, Rational(BigInt(*len), den)};
}

std::vector<FreeRankReport> ratio_sequence(
    const QuotientPresentation& P,
    const std::vector<std::pair<Polynomial, int>>& pattern, int e_lo, int e_hi,
    int dim) {
  if (e_lo < 1 || e_hi < e_lo) throw std::invalid_argument("bad e range");
  long long p = P.ring->characteristic;
  std::vector<FreeRankReport> out;
  for (int e = e_lo; e <= e_hi; ++e) {
    long long q = FrobeniusDegree::of(p, e).q;
    double cells = 1;
    for (size_t i = 0; i < P.ring->nvars(); ++i) cells *= (double)q;
    if (cells > 1e6)
      throw std::runtime_error("resource cap exceeded: q^nvars > 10^6 at e=" +
                               std::to_string(e));
    MultiplierSet U = enumerate_divisor_multipliers(P, pattern, q);
    if (U.premultipliers.empty())
      throw std::runtime_error("empty multiplier set at e=" + std::to_string(e));
    out.push_back(free_rank(degeneracy_ideal(P, U.premultipliers, q), q, e, dim));
  }
  return out;
}

Rational cube_halfspace_volume(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  // vol{sum >= k} = 1 - (1/n!) sum_{j=0}^{k} (-1)^j C(n,j) (k-j)^n
  BigInt fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  BigInt acc = 0, binom = 1;
  for (int j = 0; j <= k; ++j) {
    BigInt pw = 1;
    for (int i = 0; i < n; ++i) pw *= (k - j);
    acc += (j % 2 == 0 ? pw : -pw) * binom;
    binom = binom * (n - j) / (j + 1);
  }
  return Rational(1) - Rational(acc, fact);
}

}  // namespace fsplit
