#ifndef FSPLIT_RING_HPP
#define FSPLIT_RING_HPP

#include <limits>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fsplit/field.hpp"

namespace fsplit {

// Exponent vector of a term, one slot per ring variable.
struct Monomial {
  std::vector<int> exps;

  explicit Monomial(size_t nvars = 0) : exps(nvars, 0) {}
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  size_t nvars() const { return exps.size(); }
  long long degree() const { return std::accumulate(exps.begin(), exps.end(), 0LL); }
  bool is_one() const {
    for (int e : exps) if (e != 0) return false;
    return true;
  }

  bool divides(const Monomial& m) const {
    for (size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > m.exps[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(exps.size());
    for (size_t i = 0; i < exps.size(); ++i) {
      long long s = (long long)exps[i] + m.exps[i];
      if (s > std::numeric_limits<int>::max())
        throw std::overflow_error("monomial exponent overflow");
      r.exps[i] = (int)s;
    }
    return r;
  }

  // Componentwise quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& m) const {
    Monomial r(exps.size());
    for (size_t i = 0; i < exps.size(); ++i) r.exps[i] = exps[i] - m.exps[i];
    return r;
  }

  Monomial pow(long long k) const {
    Monomial r(exps.size());
    for (size_t i = 0; i < exps.size(); ++i) {
      long long s = (long long)exps[i] * k;
      if (s > std::numeric_limits<int>::max())
        throw std::overflow_error("monomial exponent overflow");
      r.exps[i] = (int)s;
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps.size());
    for (size_t i = 0; i < a.exps.size(); ++i)
      r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
  }

  bool coprime(const Monomial& b) const {
    for (size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > 0 && b.exps[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const = default;
};

enum class OrderKind { Lex, Grevlex, ElimBlock };

// Total multiplicative well-ordering on monomials.  ElimBlock(k) eliminates
// the first k variables of the permutation (grevlex within each block).
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  int block = 0;
  std::vector<int> perm;  // empty = identity

  static MonomialOrder lex() { return {OrderKind::Lex, 0, {}}; }
  static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0, {}}; }
  static MonomialOrder elim_block(int k, std::vector<int> p = {}) {
    return {OrderKind::ElimBlock, k, std::move(p)};
  }

  // >0 if a > b, <0 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const;

  bool less(const MonomialOrder& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (block != o.block) return block < o.block;
    return perm < o.perm;
  }
  bool operator==(const MonomialOrder& o) const = default;
};

// Ambient polynomial ring F_p[vars] with a default term order.
struct RingDescriptor {
  long long characteristic;
  std::vector<std::string> variables;
  MonomialOrder default_order;

  size_t nvars() const { return variables.size(); }
  int var_index(const std::string& name) const {
    for (size_t i = 0; i < variables.size(); ++i)
      if (variables[i] == name) return (int)i;
    return -1;
  }
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

RingPtr make_ring(long long p, std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder::grevlex());

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a->characteristic == b->characteristic && a->variables == b->variables);
}

}  // namespace fsplit

#endif
