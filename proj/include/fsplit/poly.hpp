#ifndef FSPLIT_POLY_HPP
#define FSPLIT_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsplit/ring.hpp"

namespace fsplit {

// Sparse multivariate polynomial over F_p.  Terms are kept sorted descending
// in the ring's default order with no zero coefficients, so printing is
// reproducible byte-for-byte.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    long long coeff;  // in [1, p)
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial one(RingPtr ring) { return constant(std::move(ring), 1); }
  static Polynomial variable(RingPtr ring, int idx);
  static Polynomial from_monomial(RingPtr ring, const Monomial& m, long long c = 1);
  // From unsorted (monomial, coefficient) pairs; merges and normalizes.
  static Polynomial from_terms(RingPtr ring,
                               std::vector<std::pair<Monomial, long long>> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }
  long long total_degree() const;  // -1 for the zero polynomial

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(long long c) const;
  Polynomial times_monomial(const Monomial& m, long long c = 1) const;

  // Binary exponentiation; pow_frobenius(q) scales exponents directly for
  // q a power of p (the two must agree).
  Polynomial pow(long long k) const;
  Polynomial pow_frobenius(long long q) const;

  // Leading data under an arbitrary order.
  const Term& leading_term(const MonomialOrder& ord) const;

  // Monic w.r.t. the ring default order.
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Canonical text form (terms descending, least non-negative coefficients).
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;

  void check_ring(const Polynomial& o) const;
};

}  // namespace fsplit

#endif
