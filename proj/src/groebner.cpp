#include "fsplit/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace fsplit {

namespace {

using Term = Polynomial::Term;

// Working representation: terms sorted descending under the active order.
struct OrdPoly {
  std::vector<Term> t;
  bool is_zero() const { return t.empty(); }
  const Term& lead() const { return t.front(); }
};

OrdPoly to_ord(const Polynomial& p, const MonomialOrder& ord) {
  OrdPoly r;
  r.t.assign(p.terms().begin(), p.terms().end());
  std::sort(r.t.begin(), r.t.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.mono, b.mono) > 0;
  });
  return r;
}

Polynomial from_ord(const RingPtr& ring, const OrdPoly& p) {
  std::vector<std::pair<Monomial, long long>> v;
  v.reserve(p.t.size());
  for (const auto& t : p.t) v.emplace_back(t.mono, t.coeff);
  return Polynomial::from_terms(ring, std::move(v));
}

// h -= c * x^m * g, all sorted under ord.
void sub_mul(OrdPoly& h, long long c, const Monomial& m, const OrdPoly& g,
             const MonomialOrder& ord, long long p) {
  std::vector<Term> out;
  out.reserve(h.t.size() + g.t.size());
  size_t i = 0, j = 0;
  while (i < h.t.size() || j < g.t.size()) {
    if (j == g.t.size()) {
      out.push_back(h.t[i++]);
      continue;
    }
    Monomial gm = g.t[j].mono * m;
    long long gc = mod_reduce(-mod_mul(c, g.t[j].coeff, p), p);
    if (i == h.t.size()) {
      if (gc != 0) out.push_back({gm, gc});
      ++j;
      continue;
    }
    int cmp = ord.compare(h.t[i].mono, gm);
    if (cmp > 0) {
      out.push_back(h.t[i++]);
    } else if (cmp < 0) {
      if (gc != 0) out.push_back({gm, gc});
      ++j;
    } else {
      long long s = mod_reduce(h.t[i].coeff + gc, p);
      if (s != 0) out.push_back({h.t[i].mono, s});
      ++i;
      ++j;
    }
  }
  h.t = std::move(out);
}

struct QuotientStep {
  size_t gen;       // index into the reducer set
  Monomial mono;    // multiplier monomial
  long long coeff;  // multiplier coefficient
};

// Full multivariate division: f = sum(steps over G) + remainder.
OrdPoly reduce_full(const OrdPoly& f, const std::vector<OrdPoly>& G,
                    const MonomialOrder& ord, long long p,
                    std::vector<QuotientStep>* steps = nullptr) {
  OrdPoly h = f;
  std::vector<Term> rem;
  while (!h.is_zero()) {
    bool reduced = false;
    for (size_t k = 0; k < G.size(); ++k) {
      if (G[k].is_zero()) continue;
      const Term& lt = G[k].lead();
      if (lt.mono.divides(h.lead().mono)) {
        Monomial m = h.lead().mono / lt.mono;
        long long c = mod_mul(h.lead().coeff, mod_inv(lt.coeff, p), p);
        if (steps) steps->push_back({k, m, c});
        sub_mul(h, c, m, G[k], ord, p);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(h.lead());
      h.t.erase(h.t.begin());
    }
  }
  OrdPoly r;
  r.t = std::move(rem);
  return r;
}

// Buchberger with the coprime-lead and chain criteria; optionally tracks
// cofactor rows over the original generators.
struct GBEngine {
  const RingPtr& ring;
  const MonomialOrder& ord;
  long long p;
  bool track;

  std::vector<OrdPoly> basis;
  std::vector<std::vector<Polynomial>> rows;  // basis[i] = sum rows[i][j]*gen[j]
  size_t ngens = 0;

  explicit GBEngine(const RingPtr& r, const MonomialOrder& o, bool tr)
      : ring(r), ord(o), p(r->characteristic), track(tr) {}

  void run(const std::vector<Polynomial>& gens) {
    ngens = gens.size();
    for (size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].is_zero()) continue;
      basis.push_back(to_ord(gens[i], ord));
      if (track) {
        std::vector<Polynomial> row(ngens, Polynomial::zero(ring));
        row[i] = Polynomial::one(ring);
        rows.push_back(std::move(row));
      }
    }
    struct Pair {
      Monomial lcm;
      size_t i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
      long long da = a.lcm.degree(), db = b.lcm.degree();
      if (da != db) return da < db;
      int c = ord.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    };
    std::vector<Pair> queue;
    std::set<std::pair<size_t, size_t>> pending;
    auto push_pairs = [&](size_t n) {
      for (size_t i = 0; i < n; ++i) {
        queue.push_back({Monomial::lcm(basis[i].lead().mono, basis[n].lead().mono), i, n});
        pending.insert({i, n});
      }
    };
    for (size_t n = 1; n < basis.size(); ++n) push_pairs(n);

    while (!queue.empty()) {
      auto it = std::min_element(queue.begin(), queue.end(), pair_less);
      Pair pr = *it;
      queue.erase(it);
      pending.erase({pr.i, pr.j});
      const Monomial &mi = basis[pr.i].lead().mono, &mj = basis[pr.j].lead().mono;
      if (mi.coprime(mj)) continue;  // product criterion
      // Chain criterion: some k with LM(k) | lcm(i,j) and both mixed pairs done.
      bool skip = false;
      for (size_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == pr.i || k == pr.j) continue;
        if (!basis[k].lead().mono.divides(pr.lcm)) continue;
        auto key = [](size_t a, size_t b) {
          return std::make_pair(std::min(a, b), std::max(a, b));
        };
        if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) skip = true;
      }
      if (skip) continue;

      // S-polynomial.
      Monomial ai = pr.lcm / mi, aj = pr.lcm / mj;
      long long ci = mod_inv(basis[pr.i].lead().coeff, p);
      long long cj = mod_inv(basis[pr.j].lead().coeff, p);
      OrdPoly s;
      sub_mul(s, mod_reduce(-ci, p), ai, basis[pr.i], ord, p);
      sub_mul(s, cj, aj, basis[pr.j], ord, p);
      std::vector<QuotientStep> steps;
      OrdPoly r = reduce_full(s, basis, ord, p, track ? &steps : nullptr);
      if (r.is_zero()) continue;

      if (track) {
        std::vector<Polynomial> row(ngens, Polynomial::zero(ring));
        auto add_mul_row = [&](const std::vector<Polynomial>& src, const Monomial& m,
                               long long c) {
          for (size_t g = 0; g < ngens; ++g)
            if (!src[g].is_zero()) row[g] = row[g] + src[g].times_monomial(m, c);
        };
        add_mul_row(rows[pr.i], ai, ci);
        add_mul_row(rows[pr.j], aj, mod_reduce(-cj, p));
        for (const auto& st : steps)
          add_mul_row(rows[st.gen], st.mono, mod_reduce(-st.coeff, p));
        rows.push_back(std::move(row));
      }
      basis.push_back(std::move(r));
      push_pairs(basis.size() - 1);
    }
    minimalize_and_reduce();
  }

  void minimalize_and_reduce() {
    // Drop members whose lead is divisible by another kept lead.
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i) {
      if (!keep[i]) continue;
      for (size_t j = 0; j < basis.size(); ++j) {
        if (i == j || !keep[j]) continue;
        if (basis[j].lead().mono.divides(basis[i].lead().mono) &&
            !(basis[i].lead().mono == basis[j].lead().mono && j > i)) {
          keep[i] = false;
          break;
        }
      }
    }
    std::vector<OrdPoly> mins;
    std::vector<std::vector<Polynomial>> minrows;
    for (size_t i = 0; i < basis.size(); ++i)
      if (keep[i]) {
        mins.push_back(std::move(basis[i]));
        if (track) minrows.push_back(std::move(rows[i]));
      }
    // Inter-reduce tails.
    std::vector<OrdPoly> red = mins;
    std::vector<std::vector<Polynomial>> redrows = minrows;
    for (size_t i = 0; i < mins.size(); ++i) {
      std::vector<OrdPoly> others;
      std::vector<size_t> omap;
      for (size_t j = 0; j < mins.size(); ++j)
        if (j != i) {
          others.push_back(red[j]);
          omap.push_back(j);
        }
      std::vector<QuotientStep> steps;
      OrdPoly r = reduce_full(red[i], others, ord, p, track ? &steps : nullptr);
      if (track) {
        for (const auto& st : steps) {
          size_t j = omap[st.gen];
          for (size_t g = 0; g < ngens; ++g)
            if (!redrows[j][g].is_zero())
              redrows[i][g] =
                  redrows[i][g] + redrows[j][g].times_monomial(st.mono, mod_reduce(-st.coeff, p));
        }
      }
      // Make monic.
      long long inv = mod_inv(r.lead().coeff, p);
      for (auto& t : r.t) t.coeff = mod_mul(t.coeff, inv, p);
      if (track)
        for (size_t g = 0; g < ngens; ++g) redrows[i][g] = redrows[i][g].scaled(inv);
      red[i] = std::move(r);
    }
    // Deterministic output: descending leading monomials.
    std::vector<size_t> idx(red.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      return ord.compare(red[a].lead().mono, red[b].lead().mono) > 0;
    });
    basis.clear();
    rows.clear();
    for (size_t i : idx) {
      basis.push_back(std::move(red[i]));
      if (track) rows.push_back(std::move(redrows[i]));
    }
  }
};

}  // namespace

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> gens) {
  state_ = std::make_shared<State>();
  state_->ring = std::move(ring);
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), state_->ring))
      throw std::invalid_argument("ideal generator ring mismatch");
    state_->gens.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& IdealHandle::groebner_basis(const MonomialOrder& ord) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  auto it = state_->cache.find(ord);
  if (it != state_->cache.end()) return it->second;
  std::vector<Polynomial> out;
  if (!state_->gens.empty()) {
    GBEngine eng(state_->ring, ord, /*track=*/false);
    eng.run(state_->gens);
    for (const auto& b : eng.basis) out.push_back(from_ord(state_->ring, b));
  }
  return state_->cache.emplace(ord, std::move(out)).first->second;
}

bool IdealHandle::equals(const IdealHandle& other) const {
  if (!same_ring(ring(), other.ring())) return false;
  const MonomialOrder& ord = ring()->default_order;
  return groebner_basis(ord) == other.groebner_basis(ord);
}

bool IdealHandle::contains(const IdealHandle& other) const {
  for (const auto& g : other.generators())
    if (!ideal_member(g, *this)) return false;
  return true;
}

Polynomial normal_form(const Polynomial& f, const IdealHandle& I,
                       const MonomialOrder& ord) {
  const auto& gb = I.groebner_basis(ord);
  if (gb.empty()) return f;
  long long p = f.ring()->characteristic;
  std::vector<OrdPoly> G;
  G.reserve(gb.size());
  for (const auto& g : gb) G.push_back(to_ord(g, ord));
  return from_ord(f.ring(), reduce_full(to_ord(f, ord), G, ord, p));
}

Polynomial normal_form(const Polynomial& f, const IdealHandle& I) {
  return normal_form(f, I, f.ring()->default_order);
}

bool ideal_member(const Polynomial& f, const IdealHandle& I) {
  return normal_form(f, I).is_zero();
}

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J) {
  if (!same_ring(I.ring(), J.ring())) throw std::invalid_argument("ring mismatch");
  std::vector<Polynomial> gens = I.generators();
  for (const auto& g : J.generators()) gens.push_back(g);
  return IdealHandle(I.ring(), std::move(gens));
}

namespace {

// Ring with one auxiliary variable appended; '@' keeps it out of the parser's
// identifier space.
RingPtr append_aux_var(const RingPtr& ring) {
  auto vars = ring->variables;
  vars.push_back("@t");
  return make_ring(ring->characteristic, std::move(vars), ring->default_order);
}

Polynomial lift_to(const RingPtr& ext, const Polynomial& f) {
  std::vector<std::pair<Monomial, long long>> v;
  for (const auto& t : f.terms()) {
    Monomial m(ext->nvars());
    std::copy(t.mono.exps.begin(), t.mono.exps.end(), m.exps.begin());
    v.emplace_back(std::move(m), t.coeff);
  }
  return Polynomial::from_terms(ext, std::move(v));
}

Polynomial drop_last_var(const RingPtr& base, const Polynomial& f) {
  std::vector<std::pair<Monomial, long long>> v;
  for (const auto& t : f.terms()) {
    assert(t.mono.exps.back() == 0);
    Monomial m(base->nvars());
    std::copy_n(t.mono.exps.begin(), base->nvars(), m.exps.begin());
    v.emplace_back(std::move(m), t.coeff);
  }
  return Polynomial::from_terms(base, std::move(v));
}

}  // namespace

IdealHandle eliminate(const IdealHandle& I, const std::vector<int>& var_indices) {
  const RingPtr& ring = I.ring();
  size_t n = ring->nvars();
  std::vector<bool> elim(n, false);
  for (int v : var_indices) {
    if (v < 0 || (size_t)v >= n) throw std::invalid_argument("variable index out of range");
    elim[v] = true;
  }
  std::vector<int> perm;
  for (size_t i = 0; i < n; ++i)
    if (elim[i]) perm.push_back((int)i);
  int k = (int)perm.size();
  for (size_t i = 0; i < n; ++i)
    if (!elim[i]) perm.push_back((int)i);
  MonomialOrder ord = MonomialOrder::elim_block(k, perm);
  std::vector<Polynomial> kept;
  for (const auto& g : I.groebner_basis(ord)) {
    bool free = true;
    for (const auto& t : g.terms())
      for (size_t i = 0; i < n && free; ++i)
        if (elim[i] && t.mono.exps[i] > 0) free = false;
    if (free) kept.push_back(g);
  }
  return IdealHandle(ring, std::move(kept));
}

IdealHandle ideal_intersect(const IdealHandle& I, const IdealHandle& J) {
  if (!same_ring(I.ring(), J.ring())) throw std::invalid_argument("ring mismatch");
  const RingPtr& ring = I.ring();
  RingPtr ext = append_aux_var(ring);
  Polynomial t = Polynomial::variable(ext, (int)ext->nvars() - 1);
  Polynomial one_minus_t = Polynomial::one(ext) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(t * lift_to(ext, g));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * lift_to(ext, g));
  IdealHandle K(ext, std::move(gens));
  IdealHandle E = eliminate(K, {(int)ext->nvars() - 1});
  std::vector<Polynomial> out;
  for (const auto& g : E.generators()) out.push_back(drop_last_var(ring, g));
  return IdealHandle(ring, std::move(out));
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const MonomialOrder& ord = a.ring()->default_order;
  long long p = a.ring()->characteristic;
  OrdPoly h = to_ord(a, ord), g = to_ord(b, ord);
  std::vector<std::pair<Monomial, long long>> q;
  while (!h.is_zero()) {
    if (!g.lead().mono.divides(h.lead().mono)) return std::nullopt;
    Monomial m = h.lead().mono / g.lead().mono;
    long long c = mod_mul(h.lead().coeff, mod_inv(g.lead().coeff, p), p);
    q.emplace_back(m, c);
    sub_mul(h, c, m, g, ord, p);
  }
  return Polynomial::from_terms(a.ring(), std::move(q));
}

IdealHandle ideal_colon(const IdealHandle& I, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("colon by zero polynomial");
  IdealHandle gi(I.ring(), {g});
  IdealHandle meet = ideal_intersect(I, gi);
  std::vector<Polynomial> out;
  for (const auto& h : meet.generators()) {
    auto q = exact_divide(h, g);
    assert(q.has_value());  // I cap (g) is contained in (g)
    out.push_back(*q);
  }
  return IdealHandle(I.ring(), std::move(out));
}

IdealHandle ideal_colon_ideal(const IdealHandle& I, const IdealHandle& J) {
  if (J.is_zero())
    return IdealHandle(I.ring(), {Polynomial::one(I.ring())});  // (I : 0) = (1)
  bool first = true;
  IdealHandle acc;
  for (const auto& g : J.generators()) {
    IdealHandle c = ideal_colon(I, g);
    acc = first ? c : ideal_intersect(acc, c);
    first = false;
  }
  return acc;
}

std::optional<long long> colength(const IdealHandle& I) {
  const RingPtr& ring = I.ring();
  size_t n = ring->nvars();
  const auto& gb = I.groebner_basis();
  if (gb.empty()) return n == 0 ? std::optional<long long>(1) : std::nullopt;
  std::vector<Monomial> lts;
  for (const auto& g : gb) lts.push_back(g.leading_term(ring->default_order).mono);
  // Pure-power bound per variable; a missing pure power means infinite.
  std::vector<int> bound(n, -1);
  for (const auto& m : lts) {
    int nz = -1;
    bool pure = true;
    for (size_t i = 0; i < n; ++i)
      if (m.exps[i] > 0) {
        if (nz >= 0) pure = false;
        nz = (int)i;
      }
    if (nz < 0) return 0;  // 1 is a leading term
    if (pure && (bound[nz] < 0 || m.exps[nz] < bound[nz])) bound[nz] = m.exps[nz];
  }
  long long box = 1;
  for (size_t i = 0; i < n; ++i) {
    if (bound[i] < 0) return std::nullopt;
    box *= bound[i];
    if (box > 20'000'000LL) throw std::runtime_error("colength enumeration too large");
  }
  // Count standard monomials inside the box.
  long long count = 0;
  Monomial m(n);
  for (;;) {
    bool standard = true;
    for (const auto& lt : lts)
      if (lt.divides(m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    size_t i = 0;
    while (i < n) {
      if (++m.exps[i] < bound[i]) break;
      m.exps[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return count;
}

std::optional<std::vector<Polynomial>> lift_cofactors(const Polynomial& f,
                                                      const IdealHandle& I) {
  const RingPtr& ring = I.ring();
  size_t m = I.generators().size();
  std::vector<Polynomial> cof(m, Polynomial::zero(ring));
  if (f.is_zero()) return cof;
  if (m == 0) return std::nullopt;
  const MonomialOrder& ord = ring->default_order;
  long long p = ring->characteristic;
  GBEngine eng(ring, ord, /*track=*/true);
  eng.run(I.generators());
  std::vector<QuotientStep> steps;
  OrdPoly r = reduce_full(to_ord(f, ord), eng.basis, ord, p, &steps);
  if (!r.is_zero()) return std::nullopt;
  for (const auto& st : steps)
    for (size_t g = 0; g < m; ++g)
      if (!eng.rows[st.gen][g].is_zero())
        cof[g] = cof[g] + eng.rows[st.gen][g].times_monomial(st.mono, st.coeff);
  return cof;
}

}  // namespace fsplit
