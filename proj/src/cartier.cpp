#include "fsplit/cartier.hpp"

#include <algorithm>

namespace fsplit {

Polynomial trace_apply(const Polynomial& u, const Polynomial& f, int e) {
  const RingPtr& ring = f.ring();
  long long q = FrobeniusDegree::of(ring->characteristic, e).q;
  Polynomial g = u * f;
  std::vector<std::pair<Monomial, long long>> out;
  for (const auto& t : g.terms()) {
    Monomial m(ring->nvars());
    bool keep = true;
    for (size_t i = 0; i < ring->nvars(); ++i) {
      long long s = (long long)t.mono.exps[i] - (q - 1);
      if (s < 0 || s % q != 0) {
        keep = false;
        break;
      }
      m.exps[i] = (int)(s / q);
    }
    if (keep) out.emplace_back(std::move(m), t.coeff);  // c^{1/q} = c in F_p
  }
  return Polynomial::from_terms(ring, std::move(out));
}

CenterRestriction restrict_to_center(const Polynomial& u, const IdealHandle& center,
                                     long long q) {
  const RingPtr& ring = center.ring();
  check_prime_power(q, ring->characteristic);

  // Validate the extraction frame: generators are distinct variables plus at
  // most one general polynomial.
  std::vector<bool> is_frame_var(ring->nvars(), false);
  int general = 0;
  for (const auto& g : center.generators()) {
    const auto& ts = g.terms();
    bool is_var = ts.size() == 1 && ts[0].coeff == 1 && ts[0].mono.degree() == 1;
    if (is_var) {
      for (size_t i = 0; i < ring->nvars(); ++i)
        if (ts[0].mono.exps[i] == 1) {
          if (is_frame_var[i]) throw std::invalid_argument("repeated frame variable");
          is_frame_var[i] = true;
        }
    } else {
      ++general;
    }
  }
  if (general > 1)
    throw std::invalid_argument("extraction frame admits at most one non-variable generator");

  std::vector<int> survivors;
  for (size_t i = 0; i < ring->nvars(); ++i)
    if (!is_frame_var[i]) survivors.push_back((int)i);

  CenterRestriction out{CenterRestriction::Status::Ok, center, survivors,
                        Polynomial::zero(ring), FieldElem(1, ring->characteristic)};

  Polynomial nf = normal_form(u, bracket_power(center, q));
  if (nf.is_zero()) {
    out.status = CenterRestriction::Status::ZeroRestriction;
    return out;
  }
  Polynomial frame_power = Polynomial::one(ring);
  for (const auto& g : center.generators()) frame_power = frame_power * g.pow(q - 1);
  auto quotient = exact_divide(nf, frame_power);
  if (!quotient.has_value()) {
    out.status = CenterRestriction::Status::FrameError;
    return out;
  }
  long long lc = quotient->terms()[0].coeff;
  out.unit = FieldElem(lc, ring->characteristic);
  out.extracted = quotient->scaled(mod_inv(lc, ring->characteristic));
  // Soundness of the extraction identity, re-expanded on every call.
  if (frame_power * *quotient != nf)
    throw std::logic_error("center restriction re-expansion failed");
  return out;
}

MultiplierSet enumerate_divisor_multipliers(
    const QuotientPresentation& P,
    const std::vector<std::pair<Polynomial, int>>& pattern, long long q) {
  const RingPtr& ring = P.ring;
  int e = check_prime_power(q, ring->characteristic);
  for (const auto& [g, w] : pattern)
    if (w <= 0) throw std::invalid_argument("pattern weights must be positive");

  // Fedder witness family: colon generators outside I^[q] ({1} for I = 0).
  std::vector<Polynomial> family;
  IdealHandle Iq = bracket_power(P.defining, q);
  if (P.defining.is_zero()) {
    family.push_back(Polynomial::one(ring));
  } else {
    IdealHandle C = ideal_colon_ideal(Iq, P.defining);
    for (const auto& g : C.groebner_basis())
      if (!ideal_member(g, Iq)) family.push_back(g);
  }

  // Componentwise-minimal exponent vectors c <= q-1 with sum c_k w_k >= q-1.
  size_t k = pattern.size();
  std::vector<std::vector<int>> minimal;
  std::vector<int> c(k, 0);
  for (;;) {
    long long score = 0;
    for (size_t i = 0; i < k; ++i) score += (long long)c[i] * pattern[i].second;
    if (score >= q - 1) {
      bool is_min = true;
      for (size_t i = 0; i < k && is_min; ++i) {
        if (c[i] == 0) continue;
        if (score - pattern[i].second >= q - 1) is_min = false;
      }
      if (is_min) minimal.push_back(c);
    }
    size_t i = 0;
    while (i < k) {
      if (++c[i] <= q - 1) break;
      c[i] = 0;
      ++i;
    }
    if (i == k) break;
  }

  MultiplierSet out{FrobeniusDegree::of(ring->characteristic, e), {}, P};
  std::vector<Polynomial> reduced_seen;
  for (const auto& expo : minimal) {
    Polynomial base = Polynomial::one(ring);
    for (size_t i = 0; i < k; ++i)
      if (expo[i] > 0) base = base * pattern[i].first.pow(expo[i]);
    for (const auto& w : family) {
      Polynomial u = base * w;
      Polynomial nf = P.defining.is_zero() ? u : normal_form(u, Iq);
      if (nf.is_zero()) continue;  // trivial modulo I^[q]
      bool dup = std::find(reduced_seen.begin(), reduced_seen.end(), nf) !=
                 reduced_seen.end();
      if (dup) continue;
      reduced_seen.push_back(nf);
      out.premultipliers.push_back(u);
    }
  }
  return out;
}

}  // namespace fsplit
