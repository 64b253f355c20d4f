#include "fsplit/frobenius.hpp"

#include <map>
#include <optional>
#include <set>

namespace fsplit {

int check_prime_power(long long q, long long p) {
  int e = 0;
  long long t = q;
  while (t > 1) {
    if (t % p != 0) throw std::invalid_argument("q is not a power of the characteristic");
    t /= p;
    ++e;
  }
  if (e == 0) throw std::invalid_argument("q must be at least p");
  return e;
}

namespace {

IdealHandle variables_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (size_t i = 0; i < ring->nvars(); ++i)
    gens.push_back(Polynomial::variable(ring, (int)i));
  return IdealHandle(ring, std::move(gens));
}

}  // namespace

QuotientPresentation::QuotientPresentation(RingPtr r, IdealHandle I)
    : ring(std::move(r)), defining(std::move(I)), max_ideal(variables_ideal(ring)) {}

QuotientPresentation::QuotientPresentation(RingPtr r, IdealHandle I, IdealHandle m)
    : ring(std::move(r)), defining(std::move(I)), max_ideal(std::move(m)) {
  for (const auto& g : defining.generators())
    if (!ideal_member(g, max_ideal))
      throw std::invalid_argument("defining ideal not contained in the maximal ideal");
}

IdealHandle bracket_power(const IdealHandle& I, long long q) {
  check_prime_power(q, I.ring()->characteristic);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.pow_frobenius(q));
  return IdealHandle(I.ring(), std::move(gens));
}

IdealHandle frobenius_root(const IdealHandle& J, long long q) {
  const RingPtr& ring = J.ring();
  check_prime_power(q, ring->characteristic);
  size_t n = ring->nvars();
  std::vector<Polynomial> gens;
  for (const auto& g : J.generators()) {
    // Split each term over the basis {x^alpha : alpha in {0..q-1}^n} of the
    // Frobenius pushforward; F_p coefficients are their own q-th roots.
    std::map<std::vector<int>, std::vector<std::pair<Monomial, long long>>> buckets;
    for (const auto& t : g.terms()) {
      std::vector<int> alpha(n);
      Monomial beta(n);
      for (size_t i = 0; i < n; ++i) {
        alpha[i] = (int)(t.mono.exps[i] % q);
        beta.exps[i] = (int)(t.mono.exps[i] / q);
      }
      buckets[alpha].emplace_back(std::move(beta), t.coeff);
    }
    for (auto& [alpha, terms] : buckets)
      gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  IdealHandle K(ring, std::move(gens));
  return IdealHandle(ring, K.groebner_basis());  // canonical generators
}

FedderResult fedder_fpure(const QuotientPresentation& P, long long q) {
  const RingPtr& ring = P.ring;
  if (P.defining.is_zero()) {
    // Regular ring: split by the trace itself.
    return {true, Polynomial::one(ring)};
  }
  IdealHandle C = ideal_colon_ideal(bracket_power(P.defining, q), P.defining);
  IdealHandle mq = bracket_power(P.max_ideal, q);
  for (const auto& g : C.groebner_basis())
    if (!ideal_member(g, mq)) return {true, g};
  return {false, std::nullopt};
}

bool compatible_test(const Polynomial& u, const IdealHandle& J,
                     const QuotientPresentation& P, long long q) {
  IdealHandle Iq = bracket_power(P.defining, q);
  for (const auto& g : P.defining.generators())
    if (!ideal_member(u * g, Iq))
      throw FedderPreconditionError("premultiplier is not in (I^[q] : I)");
  IdealHandle target = ideal_sum(bracket_power(J, q), Iq);
  for (const auto& g : J.generators())
    if (!ideal_member(u * g, target)) return false;
  return true;
}

SplittingPrimeResult splitting_prime(const QuotientPresentation& P,
                                     const std::vector<Polynomial>& multipliers,
                                     long long q, int cap) {
  IdealHandle Iq = bracket_power(P.defining, q);
  for (const auto& u : multipliers) {
    for (const auto& g : P.defining.generators())
      if (!ideal_member(u * g, Iq))
        throw FedderPreconditionError("premultiplier is not in (I^[q] : I)");
  }
  const RingPtr& ring = P.ring;

  // Image of an ideal under the maps g -> (u*g)^{[1/q]}.  Exact on generators
  // because bracket powers decompose over the monomial basis {x^a : a < q}.
  auto image = [&](const IdealHandle& K) {
    std::vector<Polynomial> prods;
    for (const auto& u : multipliers)
      for (const auto& g : K.generators()) prods.push_back(u * g);
    return frobenius_root(IdealHandle(ring, std::move(prods)), q);
  };
  // Smallest ideal containing K and the defining ideal that is closed under
  // the image maps, or nullopt as soon as the ascent escapes the maximal
  // ideal (the closure is monotone, so an escaping intermediate certifies
  // that the final closure escapes too).  Terminates: roots divide generator
  // degrees by q, so the ascent stabilizes once degrees bottom out.
  auto stable_closure = [&](IdealHandle K) -> std::optional<IdealHandle> {
    K = ideal_sum(K, P.defining);
    for (int i = 0; i <= cap + 64; ++i) {
      if (!P.max_ideal.contains(K)) return std::nullopt;
      IdealHandle next = ideal_sum(K, image(K));
      if (next.equals(K)) return K;
      K = std::move(next);
    }
    throw std::logic_error("compatible-closure ascent did not stabilize");
  };

  // Slot coefficients of h over the basis {x^a : a < q}: raw generators of
  // the Frobenius root of (h), with no basis reduction.
  size_t nvars = ring->nvars();
  auto root_slots = [&](const Polynomial& h) {
    std::map<std::vector<int>, std::vector<std::pair<Monomial, long long>>> buckets;
    for (const auto& t : h.terms()) {
      std::vector<int> alpha(nvars);
      Monomial beta(nvars);
      for (size_t i = 0; i < nvars; ++i) {
        alpha[i] = (int)(t.mono.exps[i] % q);
        beta.exps[i] = (int)(t.mono.exps[i] / q);
      }
      buckets[alpha].emplace_back(std::move(beta), t.coeff);
    }
    std::vector<Polynomial> out;
    for (auto& [alpha, terms] : buckets)
      out.push_back(Polynomial::from_terms(ring, std::move(terms)));
    return out;
  };
  // Fast rejection: iterate g -> slot coefficients of u*g on g's chain alone
  // (no Groebner bases).  Every chain element lies in the stable closure of
  // any ideal containing g, so one element outside the maximal ideal rejects
  // g for good.  A "false" answer is inconclusive; callers fall back to the
  // exact closure.
  auto chain_escapes = [&](const Polynomial& g) {
    std::vector<Polynomial> frontier{g};
    std::set<std::string> seen{g.to_string()};
    for (int step = 0; step < 48 && !frontier.empty(); ++step) {
      std::vector<Polynomial> next;
      for (const auto& u : multipliers)
        for (const auto& d : frontier)
          for (auto& c : root_slots(u * d)) {
            if (c.is_zero()) continue;
            if (!ideal_member(c, P.max_ideal)) return true;
            if (seen.insert(c.to_string()).second) next.push_back(std::move(c));
          }
      if (next.size() > 512) return false;  // give up, use the exact closure
      frontier = std::move(next);
    }
    return false;
  };

  // The decreasing colon iteration J_{k+1} = J_k cap ((J_k^[q]+I^[q]) : u)
  // can approach its limit without reaching it in finitely many steps (its
  // tail is a strictly decreasing chain of high-degree generators).  We pair
  // it with a certified lower bound L: a u-stable ideal inside the maximal
  // ideal, grown by absorbing iterate generators whose stable closure stays
  // inside the maximal ideal.  Generators whose closure escapes can belong to
  // no u-stable ideal below the maximal ideal, so once every generator of the
  // iterate is either absorbed or rejected for two consecutive rounds, L is
  // the limit of the iteration.
  IdealHandle J = P.max_ideal;
  std::optional<IdealHandle> seed = stable_closure(P.defining);
  if (!seed)
    throw std::logic_error("defining ideal is not stable under the image maps");
  IdealHandle L = std::move(*seed);
  int quiet_rounds = 0;
  for (int it = 1; it <= cap; ++it) {
    // Probe the reduced generators of the current iterate before the (much
    // more expensive) colon step, so certified convergence never has to
    // compute bracket powers of the deepest iterate.
    bool grew = false;
    for (const auto& g : J.groebner_basis()) {
      if (ideal_member(g, L)) continue;
      if (chain_escapes(g)) continue;
      std::optional<IdealHandle> closure =
          stable_closure(ideal_sum(L, IdealHandle(ring, {g})));
      if (closure) {
        L = std::move(*closure);
        grew = true;
      }
    }
    if (J.equals(L))
      return {SplittingPrimeResult::Status::Converged, L, it};
    quiet_rounds = grew ? 0 : quiet_rounds + 1;
    if (quiet_rounds >= 2)
      return {SplittingPrimeResult::Status::Converged, L, it};

    IdealHandle next = J;
    IdealHandle K = ideal_sum(bracket_power(J, q), Iq);
    for (const auto& u : multipliers) next = ideal_intersect(next, ideal_colon(K, u));
    if (!J.contains(next))
      throw std::logic_error("splitting-prime iteration is not decreasing");
    if (next.equals(J)) {
      if (ideal_member(Polynomial::one(ring), J))
        return {SplittingPrimeResult::Status::Degenerate, J, it};
      return {SplittingPrimeResult::Status::Converged, J, it};
    }
    J = next;
  }
  return {SplittingPrimeResult::Status::Nonconverged, J, cap};
}

Polynomial multiplier_compose(const Polynomial& u, int e, int e_prime) {
  if (e_prime < 1) throw std::invalid_argument("e' must be positive");
  long long q = FrobeniusDegree::of(u.ring()->characteristic, e).q;
  // exponent 1 + q + ... + q^{e'-1}
  long long exp = 0, pw = 1;
  for (int i = 0; i < e_prime; ++i) {
    exp += pw;
    if (i + 1 < e_prime) {
      if (pw > (1LL << 40) / q) throw std::overflow_error("composite exponent overflow");
      pw *= q;
    }
  }
  return u.pow(exp);
}

}  // namespace fsplit
