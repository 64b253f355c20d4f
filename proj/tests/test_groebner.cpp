#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"

using namespace fsplit;
using namespace fsplit::test;

namespace {

// Oracle: intersection of monomial ideals is generated by pairwise lcms.
IdealHandle monomial_intersect_oracle(const IdealHandle& I, const IdealHandle& J) {
  std::vector<Polynomial> gens;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators())
      gens.push_back(Polynomial::from_monomial(
          I.ring(), Monomial::lcm(a.terms()[0].mono, b.terms()[0].mono)));
  return IdealHandle(I.ring(), std::move(gens));
}

}  // namespace

TEST_CASE("principal ideal is its own reduced GB") {
  auto r = make_ring(5, {"x", "y", "z", "w"});
  auto I = ideal(r, {"x*y-z*w"});
  for (const auto& ord : {MonomialOrder::lex(), MonomialOrder::grevlex()}) {
    const auto& gb = I.groebner_basis(ord);
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == P(r, "x*y-z*w"));
  }
}

TEST_CASE("twisted cubic, lex x>y>z") {
  // Expected basis frozen from an independent Buchberger run.
  auto r = make_ring(7, {"x", "y", "z"}, MonomialOrder::lex());
  auto I = ideal(r, {"x^2-y", "x^3-z"});
  const auto& gb = I.groebner_basis(MonomialOrder::lex());
  std::vector<Polynomial> expect = {P(r, "x^2-y"), P(r, "x*y-z"), P(r, "x*z-y^2"),
                                    P(r, "y^3-z^2")};
  REQUIRE(gb.size() == expect.size());
  for (const auto& e : expect)
    CHECK(std::find(gb.begin(), gb.end(), e) != gb.end());
}

TEST_CASE("monomial bracket ideal is its own GB") {
  auto r = make_ring(3, {"x", "y"});
  auto I = ideal(r, {"x^2", "y^2"});
  const auto& gb = I.groebner_basis();
  REQUIRE(gb.size() == 2);
  CHECK(ideal_member(P(r, "x^2"), I));
  CHECK_FALSE(ideal_member(P(r, "x"), I));
}

TEST_CASE("normal form examples") {
  auto r = make_ring(5, {"x", "y", "z", "w"});
  auto I = ideal(r, {"x*y-z*w"});
  CHECK(normal_form(P(r, "x*y-z*w"), I).is_zero());

  auto r2 = make_ring(5, {"x", "y"}, MonomialOrder::lex());
  auto J = ideal(r2, {"x^2-y"});
  CHECK(normal_form(P(r2, "x^2"), J, MonomialOrder::lex()) == P(r2, "y"));
}

TEST_CASE("normal form idempotence") {
  auto r = make_ring(3, {"x", "y", "z"});
  std::mt19937 rng(5);
  for (int i = 0; i < 15; ++i) {
    IdealHandle I(r, {random_poly(r, rng), random_poly(r, rng)});
    Polynomial f = random_poly(r, rng);
    Polynomial nf = normal_form(f, I);
    CHECK(normal_form(nf, I) == nf);
    CHECK(ideal_member(f - nf, I));
  }
}

TEST_CASE("membership examples") {
  auto r = make_ring(2, {"x", "y", "z", "w"});
  CHECK(ideal_member(P(r, "x*y-z*w"), ideal(r, {"x", "z"})));
  auto r2 = make_ring(5, {"x", "y"});
  CHECK_FALSE(ideal_member(P(r2, "x"), ideal(r2, {"x^2", "y"})));
  // Fedder witness: f^{q-1} not in m^[q] for f = xy-zw, q=2.
  CHECK_FALSE(ideal_member(P(r, "x*y-z*w"), ideal(r, {"x^2", "y^2", "z^2", "w^2"})));
}

TEST_CASE("intersection examples and soundness") {
  auto r = make_ring(5, {"x", "y"});
  CHECK(ideal_intersect(ideal(r, {"x"}), ideal(r, {"y"})).equals(ideal(r, {"x*y"})));
  CHECK(ideal_intersect(ideal(r, {"x", "y"}), ideal(r, {"x"})).equals(ideal(r, {"x"})));
  auto I = ideal(r, {"x^2", "y"});
  auto J = ideal(r, {"x", "y^2"});
  auto K = ideal_intersect(I, J);
  CHECK(K.equals(ideal(r, {"x^2", "x*y", "y^2"})));
  CHECK(K.equals(monomial_intersect_oracle(I, J)));
  CHECK(I.contains(K));
  CHECK(J.contains(K));
}

TEST_CASE("monomial intersection matches lcm oracle on random ideals") {
  auto r = make_ring(3, {"x", "y", "z"});
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> expd(0, 4), cnt(1, 3);
  auto random_monomial_ideal = [&]() {
    std::vector<Polynomial> gens;
    int n = cnt(rng);
    for (int i = 0; i < n; ++i) {
      Monomial m(3);
      for (auto& e : m.exps) e = expd(rng);
      gens.push_back(Polynomial::from_monomial(r, m));
    }
    return IdealHandle(r, std::move(gens));
  };
  for (int i = 0; i < 20; ++i) {
    auto I = random_monomial_ideal(), J = random_monomial_ideal();
    CHECK(ideal_intersect(I, J).equals(monomial_intersect_oracle(I, J)));
  }
}

TEST_CASE("colon examples") {
  auto r = make_ring(5, {"x", "y"});
  CHECK(ideal_colon(ideal(r, {"x^2"}), P(r, "x")).equals(ideal(r, {"x"})));
  // UFD principal colon (f^q : f) = (f^{q-1}).
  auto r4 = make_ring(3, {"x", "y", "z", "w"});
  Polynomial f = P(r4, "x*y-z*w");
  CHECK(ideal_colon(IdealHandle(r4, {f.pow(3)}), f)
            .equals(IdealHandle(r4, {f.pow(2)})));
  // Monomial colon oracle: ((x^2,y^2) : xy) = (x, y) at p=2.
  auto r2 = make_ring(2, {"x", "y"});
  CHECK(ideal_colon(ideal(r2, {"x^2", "y^2"}), P(r2, "x*y")).equals(ideal(r2, {"x", "y"})));
  CHECK_THROWS(ideal_colon(ideal(r2, {"x"}), Polynomial::zero(r2)));
}

TEST_CASE("colon soundness g*(I:g) in I") {
  auto r = make_ring(3, {"x", "y", "z"});
  std::mt19937 rng(23);
  for (int i = 0; i < 10; ++i) {
    IdealHandle I(r, {random_poly(r, rng), random_poly(r, rng)});
    Polynomial g = random_poly(r, rng);
    if (g.is_zero()) continue;
    auto C = ideal_colon(I, g);
    for (const auto& h : C.generators()) CHECK(ideal_member(h * g, I));
  }
}

TEST_CASE("elimination examples") {
  auto r = make_ring(5, {"t", "x", "y"});
  CHECK(eliminate(ideal(r, {"t*x", "(1-t)*y"}), {0}).equals(ideal(r, {"x*y"})));

  auto r2 = make_ring(5, {"T", "z"});
  CHECK(eliminate(ideal(r2, {"T^2-z"}), {0}).is_zero());
}

TEST_CASE("colength examples") {
  auto r = make_ring(5, {"x", "y"});
  CHECK(colength(ideal(r, {"x^2", "y^2"})) == 4);
  CHECK_FALSE(colength(ideal(r, {"x"})).has_value());
  CHECK(colength(ideal(r, {"x^3", "x*y", "y^2"})) == 4);  // basis 1, x, x^2, y
}

TEST_CASE("colength matches lattice enumeration oracle for monomial ideals") {
  auto r = make_ring(2, {"x", "y", "z"});
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> expd(1, 4);
  for (int trial = 0; trial < 10; ++trial) {
    int a = expd(rng), b = expd(rng), c = expd(rng);
    Monomial mixed(3);
    mixed.exps = {expd(rng), expd(rng), 0};
    std::vector<Polynomial> gens = {
        P(r, "x").pow(a), P(r, "y").pow(b), P(r, "z").pow(c),
        Polynomial::from_monomial(r, mixed)};
    IdealHandle I(r, gens);
    long long count = 0;
    for (int i = 0; i < a + 2; ++i)
      for (int j = 0; j < b + 2; ++j)
        for (int k = 0; k < c + 2; ++k) {
          Monomial m({i, j, k});
          bool in = false;
          for (const auto& g : gens)
            if (g.terms()[0].mono.divides(m)) in = true;
          if (!in) ++count;
        }
    CHECK(colength(I) == count);
  }
}

TEST_CASE("lift_cofactors examples and soundness") {
  auto r = make_ring(5, {"x", "y", "z", "w"});
  auto I1 = ideal(r, {"x*y-z*w"});
  auto c1 = lift_cofactors(P(r, "x") * P(r, "x*y-z*w"), I1);
  REQUIRE(c1.has_value());
  CHECK((*c1)[0] == P(r, "x"));

  auto c0 = lift_cofactors(Polynomial::zero(r), I1);
  REQUIRE(c0.has_value());
  CHECK((*c0)[0].is_zero());

  auto I2 = ideal(r, {"x", "z"});
  auto c2 = lift_cofactors(P(r, "x*y-z*w"), I2);
  REQUIRE(c2.has_value());
  CHECK((*c2)[0] * P(r, "x") + (*c2)[1] * P(r, "z") == P(r, "x*y-z*w"));

  CHECK_FALSE(lift_cofactors(P(r, "y"), I2).has_value());

  std::mt19937 rng(41);
  auto r3 = make_ring(3, {"x", "y", "z"});
  for (int i = 0; i < 10; ++i) {
    IdealHandle I(r3, {random_poly(r3, rng), random_poly(r3, rng)});
    Polynomial f = random_poly(r3, rng);
    if (I.generators().empty()) continue;
    auto c = lift_cofactors(f, I);
    if (c.has_value()) {
      Polynomial s = Polynomial::zero(r3);
      for (size_t k = 0; k < I.generators().size(); ++k)
        s = s + (*c)[k] * I.generators()[k];
      CHECK(s == f);
    } else {
      CHECK_FALSE(ideal_member(f, I));
    }
  }
}

TEST_CASE("all S-polynomials of a computed basis reduce to zero") {
  auto r = make_ring(3, {"x", "y", "z"});
  std::mt19937 rng(53);
  for (int trial = 0; trial < 8; ++trial) {
    IdealHandle I(r, {random_poly(r, rng), random_poly(r, rng)});
    const auto& gb = I.groebner_basis();
    const auto& ord = r->default_order;
    long long p = r->characteristic;
    for (size_t i = 0; i < gb.size(); ++i)
      for (size_t j = i + 1; j < gb.size(); ++j) {
        const auto& ti = gb[i].leading_term(ord);
        const auto& tj = gb[j].leading_term(ord);
        Monomial l = Monomial::lcm(ti.mono, tj.mono);
        Polynomial s =
            gb[i].times_monomial(l / ti.mono, mod_inv(ti.coeff, p)) -
            gb[j].times_monomial(l / tj.mono, mod_inv(tj.coeff, p));
        CHECK(normal_form(s, I).is_zero());
      }
  }
}

TEST_CASE("reduced GB canonicity across regenerations") {
  auto r = make_ring(5, {"x", "y", "z"});
  std::mt19937 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial g1 = random_poly(r, rng), g2 = random_poly(r, rng);
    if (g1.is_zero() || g2.is_zero()) continue;
    IdealHandle I(r, {g1, g2});
    IdealHandle J(r, {g1, g2, g1 + P(r, "x") * g2});
    CHECK(I.groebner_basis() == J.groebner_basis());
    CHECK(I.equals(J));
  }
}
