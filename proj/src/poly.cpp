#include "fsplit/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fsplit {

namespace {

struct DescCmp {
  const MonomialOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return ord->compare(a, b) > 0;
  }
};

using TermMap = std::map<Monomial, long long, DescCmp>;

Polynomial from_map(const RingPtr& ring, const TermMap& tm) {
  Polynomial r(ring);
  std::vector<std::pair<Monomial, long long>> v;
  v.reserve(tm.size());
  for (const auto& [m, c] : tm) v.emplace_back(m, c);
  return Polynomial::from_terms(ring, std::move(v));
}

}  // namespace

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_))
    throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  Polynomial r(ring);
  c = mod_reduce(c, ring->characteristic);
  if (c != 0) r.terms_.push_back({Monomial(ring->nvars()), c});
  return r;
}

Polynomial Polynomial::variable(RingPtr ring, int idx) {
  if (idx < 0 || (size_t)idx >= ring->nvars())
    throw std::out_of_range("variable index");
  Monomial m(ring->nvars());
  m.exps[idx] = 1;
  return from_monomial(std::move(ring), m);
}

Polynomial Polynomial::from_monomial(RingPtr ring, const Monomial& m, long long c) {
  Polynomial r(ring);
  c = mod_reduce(c, ring->characteristic);
  if (c != 0) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::from_terms(RingPtr ring,
                                  std::vector<std::pair<Monomial, long long>> terms) {
  DescCmp cmp{&ring->default_order};
  std::map<Monomial, long long, DescCmp> tm(cmp);
  long long p = ring->characteristic;
  for (auto& [m, c] : terms) {
    if (m.exps.size() != ring->nvars())
      throw std::invalid_argument("monomial arity mismatch");
    long long& slot = tm[m];
    slot = mod_reduce(slot + c, p);
  }
  Polynomial r(ring);
  for (const auto& [m, c] : tm)
    if (c != 0) r.terms_.push_back({m, c});
  return r;
}

long long Polynomial::total_degree() const {
  long long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  std::vector<std::pair<Monomial, long long>> v;
  v.reserve(terms_.size() + o.terms_.size());
  for (const auto& t : terms_) v.emplace_back(t.mono, t.coeff);
  for (const auto& t : o.terms_) v.emplace_back(t.mono, t.coeff);
  return from_terms(ring_, std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(long long c) const {
  long long p = ring_->characteristic;
  c = mod_reduce(c, p);
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, mod_mul(t.coeff, c, p)});
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, long long c) const {
  long long p = ring_->characteristic;
  c = mod_reduce(c, p);
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back({t.mono * m, mod_mul(t.coeff, c, p)});
  // Multiplying by a fixed monomial preserves the order of terms.
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  long long p = ring_->characteristic;
  DescCmp cmp{&ring_->default_order};
  TermMap tm(cmp);
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      long long& slot = tm[m];
      slot = mod_reduce(slot + mod_mul(a.coeff, b.coeff, p), p);
    }
  return from_map(ring_, tm);
}

Polynomial Polynomial::pow(long long k) const {
  if (k < 0) throw std::invalid_argument("negative exponent");
  Polynomial acc = one(ring_);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::pow_frobenius(long long q) const {
  long long p = ring_->characteristic;
  long long t = q;
  while (t > 1) {
    if (t % p != 0) throw std::invalid_argument("q is not a power of p");
    t /= p;
  }
  if (q < 1) throw std::invalid_argument("q must be positive");
  // (sum c_i x^a)^q = sum c_i^q x^{qa}, and c^q = c in F_p.
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t2 : terms_) r.terms_.push_back({t2.mono.pow(q), t2.coeff});
  return r;
}

const Polynomial::Term& Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  const Term* best = &terms_[0];
  if (ord == ring_->default_order) return *best;
  for (const auto& t : terms_)
    if (ord.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(mod_inv(terms_[0].coeff, ring_->characteristic));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << "+";
    first = false;
    bool printed = false;
    if (t.coeff != 1 || t.mono.is_one()) {
      os << t.coeff;
      printed = true;
    }
    for (size_t i = 0; i < t.mono.exps.size(); ++i) {
      int e = t.mono.exps[i];
      if (e == 0) continue;
      if (printed) os << "*";
      os << ring_->variables[i];
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

}  // namespace fsplit
