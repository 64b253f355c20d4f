#include <random>

#include "doctest.h"
#include "fsplit/fsig.hpp"
#include "test_util.hpp"

using namespace fsplit;
using namespace fsplit::test;

TEST_CASE("degeneracy_ideal examples") {
  auto r = make_ring(3, {"x", "y"});
  QuotientPresentation regular(r, IdealHandle(r, {}));
  CHECK(degeneracy_ideal(regular, {Polynomial::one(r)}, 3)
            .equals(ideal(r, {"x^3", "y^3"})));

  auto r1 = make_ring(3, {"x"});
  QuotientPresentation line(r1, IdealHandle(r1, {}));
  CHECK(degeneracy_ideal(line, {P(r1, "x^2")}, 3).equals(ideal(r1, {"x"})));

  auto r2 = make_ring(3, {"y", "w"});
  QuotientPresentation plane(r2, IdealHandle(r2, {}));
  std::vector<Polynomial> U = {P(r2, "y^2"), P(r2, "y*w"), P(r2, "w^2")};
  IdealHandle Je = degeneracy_ideal(plane, U, 3);
  CHECK(colength(Je) == 6);
}

TEST_CASE("free_rank examples") {
  auto r = make_ring(3, {"x", "y"});
  QuotientPresentation regular(r, IdealHandle(r, {}));
  auto rep = free_rank(degeneracy_ideal(regular, {Polynomial::one(r)}, 3), 3, 1, 2);
  CHECK(rep.a_e == 9);
  CHECK(rep.ratio == Rational(1));

  auto r2 = make_ring(3, {"y", "w"});
  QuotientPresentation plane(r2, IdealHandle(r2, {}));
  std::vector<Polynomial> U = {P(r2, "y^2"), P(r2, "y*w"), P(r2, "w^2")};
  auto rep2 = free_rank(degeneracy_ideal(plane, U, 3), 3, 1, 2);
  CHECK(rep2.a_e == 6);
  CHECK(rep2.ratio == Rational(2, 3));

  auto r1 = make_ring(3, {"x"});
  QuotientPresentation line(r1, IdealHandle(r1, {}));
  auto rep3 = free_rank(degeneracy_ideal(line, {P(r1, "x^2")}, 3), 3, 1, 1);
  CHECK(rep3.a_e == 1);
  CHECK(rep3.ratio == Rational(1, 3));

  // Infinite colength is an error.
  auto rxy = make_ring(3, {"x", "y"});
  CHECK_THROWS_AS(free_rank(ideal(rxy, {"x"}), 3, 1, 2), InfiniteColengthError);
}

TEST_CASE("ratio_sequence for the restricted quadric-surface center") {
  // k[y,w] with pattern {y(1), w(1)}: a_e = q(q+1)/2, ratio (q+1)/2q.
  auto r = make_ring(2, {"y", "w"});
  QuotientPresentation plane(r, IdealHandle(r, {}));
  auto reps = ratio_sequence(plane, {{P(r, "y"), 1}, {P(r, "w"), 1}}, 1, 3, 2);
  REQUIRE(reps.size() == 3);
  CHECK(reps[0].ratio == Rational(3, 4));
  CHECK(reps[1].ratio == Rational(5, 8));
  CHECK(reps[2].ratio == Rational(9, 16));
  for (int i = 0; i < 3; ++i) {
    long long q = 1LL << (i + 1);
    CHECK(reps[i].e == i + 1);
    CHECK(reps[i].a_e == q * (q + 1) / 2);
    CHECK(reps[i].ratio >= Rational(1, 2));
  }

  auto rr = make_ring(5, {"x"});
  QuotientPresentation regular(rr, IdealHandle(rr, {}));
  auto flat = ratio_sequence(regular, {{Polynomial::one(rr), 1}}, 1, 2, 1);
  REQUIRE(flat.size() == 2);
  CHECK(flat[0].ratio == Rational(1));
  CHECK(flat[1].ratio == Rational(1));
}

TEST_CASE("restricted Segre-threefold center count at q=2") {
  // Multipliers x^A y^B z^C, A+B+C = 2(q-1), exponents <= q-1.
  auto r = make_ring(2, {"x", "y", "z"});
  QuotientPresentation space(r, IdealHandle(r, {}));
  std::vector<Polynomial> U = {P(r, "x*y"), P(r, "x*z"), P(r, "y*z")};
  IdealHandle Je = degeneracy_ideal(space, U, 2);
  CHECK(Je.equals(ideal(r, {"x^2", "y^2", "z^2", "x*y", "x*z", "y*z"})));
  auto rep = free_rank(Je, 2, 1, 3);
  CHECK(rep.a_e == 4);
  CHECK(rep.ratio == Rational(1, 2));
  CHECK(rep.ratio >= Rational(1, 6));
}

TEST_CASE("cube_halfspace_volume") {
  CHECK(cube_halfspace_volume(2, 1) == Rational(1, 2));
  CHECK(cube_halfspace_volume(3, 2) == Rational(1, 6));
  CHECK(cube_halfspace_volume(4, 0) == Rational(1));
  CHECK(cube_halfspace_volume(3, 3) == Rational(0));
  CHECK(cube_halfspace_volume(3, 1) == Rational(5, 6));
  CHECK_THROWS(cube_halfspace_volume(3, 4));
  CHECK_THROWS(cube_halfspace_volume(3, -1));
  // Reflection symmetry vol{sum >= k} = vol{sum <= n-k} = 1 - vol{sum >= n-k}
  // fails at the boundary only by measure-zero sets, so equality holds.
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(cube_halfspace_volume(n, k) + cube_halfspace_volume(n, n - k) ==
            Rational(1));
}

TEST_CASE("monotone refinement: more multipliers never decrease a_e") {
  std::mt19937 rng(913);
  auto r = make_ring(2, {"x", "y"});
  QuotientPresentation plane(r, IdealHandle(r, {}));
  for (int trial = 0; trial < 15; ++trial) {
    Polynomial u1 = random_poly(r, rng, 3, 2);
    Polynomial u2 = random_poly(r, rng, 3, 2);
    if (u1.is_zero() || u2.is_zero()) continue;
    auto a1 = colength(degeneracy_ideal(plane, {u1}, 4));
    auto a12 = colength(degeneracy_ideal(plane, {u1, u2}, 4));
    REQUIRE(a1.has_value());
    REQUIRE(a12.has_value());
    CHECK(*a12 >= *a1);
  }
}

TEST_CASE("colength agrees with lattice enumeration for monomial J_e") {
  std::mt19937 rng(515);
  auto r = make_ring(2, {"x", "y"});
  QuotientPresentation plane(r, IdealHandle(r, {}));
  long long q = 4;
  for (int trial = 0; trial < 10; ++trial) {
    Monomial m(2);
    m.exps[0] = (int)(rng() % 4);
    m.exps[1] = (int)(rng() % 4);
    if (m.is_one()) continue;
    IdealHandle Je = degeneracy_ideal(plane, {Polynomial::from_monomial(r, m)}, q);
    // Brute force over the {0..q-1}^2 box (J_e contains (x^q, y^q)).
    long long count = 0;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        Monomial probe(std::vector<int>{a, b});
        if (!ideal_member(Polynomial::from_monomial(r, probe), Je)) ++count;
      }
    CHECK(colength(Je) == count);
  }
}
