#include "fsplit/ring.hpp"

#include <set>

namespace fsplit {

namespace {

int idx_at(const std::vector<int>& perm, size_t i) {
  return perm.empty() ? (int)i : perm[i];
}

// grevlex on the slots [lo, hi) of the (permuted) exponent sequence.
int grevlex_range(const Monomial& a, const Monomial& b,
                  const std::vector<int>& perm, size_t lo, size_t hi) {
  long long da = 0, db = 0;
  for (size_t i = lo; i < hi; ++i) {
    da += a.exps[idx_at(perm, i)];
    db += b.exps[idx_at(perm, i)];
  }
  if (da != db) return da > db ? 1 : -1;
  for (size_t i = hi; i-- > lo;) {
    int ea = a.exps[idx_at(perm, i)], eb = b.exps[idx_at(perm, i)];
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  size_t n = a.exps.size();
  switch (kind) {
    case OrderKind::Lex:
      for (size_t i = 0; i < n; ++i) {
        int ea = a.exps[idx_at(perm, i)], eb = b.exps[idx_at(perm, i)];
        if (ea != eb) return ea > eb ? 1 : -1;
      }
      return 0;
    case OrderKind::Grevlex:
      return grevlex_range(a, b, perm, 0, n);
    case OrderKind::ElimBlock: {
      int c = grevlex_range(a, b, perm, 0, (size_t)block);
      if (c != 0) return c;
      return grevlex_range(a, b, perm, (size_t)block, n);
    }
  }
  return 0;
}

RingPtr make_ring(long long p, std::vector<std::string> vars, MonomialOrder order) {
  if (!is_prime(p)) throw std::invalid_argument("ring characteristic must be prime");
  if (p >= (1LL << 31)) throw std::invalid_argument("characteristic must be < 2^31");
  std::set<std::string> seen(vars.begin(), vars.end());
  if (seen.size() != vars.size())
    throw std::invalid_argument("duplicate variable name");
  auto r = std::make_shared<RingDescriptor>();
  r->characteristic = p;
  r->variables = std::move(vars);
  r->default_order = std::move(order);
  return r;
}

}  // namespace fsplit
