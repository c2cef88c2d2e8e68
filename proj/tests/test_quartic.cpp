#include <doctest.h>

#include "qpt/quartic.hpp"

using namespace qpt;

TEST_CASE("invariants of u^4 + v^4") {
  BinaryQuartic f{1, 0, 0, 0, 1};
  CHECK(f.invariant_i() == 12);
  CHECK(f.invariant_j() == 0);
  CHECK(f.squarefree());
  CHECK(f.disc() == Rat(4 * 12 * 12 * 12, 27));
}

TEST_CASE("I and J are invariants under unimodular substitutions") {
  BinaryQuartic f{Rat(7, 4), Rat(-17, 2), 9, 2, 0};
  for (auto [p, q, r, s] : {std::array<long long, 4>{1, 1, 0, 1},
                            {1, 0, 1, 1},
                            {2, 1, 1, 1},
                            {0, -1, 1, 0},
                            {3, 2, 1, 1}}) {
    BinaryQuartic g = f.substituted(p, q, r, s);
    CHECK(g.invariant_i() == f.invariant_i());
    CHECK(g.invariant_j() == f.invariant_j());
  }
}

TEST_CASE("scaling the quartic scales I and J with weights 2 and 3") {
  BinaryQuartic f{Rat(7, 4), Rat(-17, 2), 9, 2, 0};
  Rat lam(5);
  BinaryQuartic g{f.a * lam, f.b * lam, f.c * lam, f.d * lam, f.e * lam};
  CHECK(g.invariant_i() == lam * lam * f.invariant_i());
  CHECK(g.invariant_j() == lam * lam * lam * f.invariant_j());
  // so the Jacobians are isomorphic curves
  CHECK(jacobian_from_quartic(f).j_invariant() == jacobian_from_quartic(g).j_invariant());
}

TEST_CASE("jacobian of u^4 + v^4 is y^2 = x^3 - 324x") {
  WeierstrassCurve e = jacobian_from_quartic({1, 0, 0, 0, 1});
  CHECK(e.a4 == -324);
  CHECK(e.a6 == 0);
  CHECK(e.j_invariant() == 1728);
}

TEST_CASE("jacobian of the period-index quartic matches the LMFDB model") {
  BinaryQuartic f{Rat(7, 4), Rat(-17, 2), 9, 2, 0};
  CHECK(f.invariant_i() == 132);
  CHECK(f.invariant_j() == -3024);
  WeierstrassCurve jac = jacobian_from_quartic(f);
  WeierstrassCurve model{0, 36, 0, -272, 448};  // y^2 = x^3 + 36x^2 - 272x + 448
  CHECK(jac.j_invariant() == model.j_invariant());
  CHECK(jac.j_invariant() == 287496);
}

TEST_CASE("degenerate quartic is rejected") {
  BinaryQuartic sq{1, 2, 1, 0, 0};  // u^2 (u + v)^2
  CHECK(sq.disc() == 0);
  CHECK_THROWS(jacobian_from_quartic(sq));
}

TEST_CASE("dehomogenization and evaluation") {
  BinaryQuartic f{2, 0, -3, 0, 1};
  RatPoly p = f.dehomogenized();
  CHECK(degree(p) == 4);
  CHECK(eval(p, Rat(2)) == f.eval(2, 1));
  CHECK(f.eval(1, 2) == 2 - 12 + 16);
}

TEST_CASE("Weierstrass quantities") {
  WeierstrassCurve e{0, 0, 0, -2, 0};  // y^2 = x^3 - 2x
  CHECK(e.b2() == 0);
  CHECK(e.c4() == 96);
  CHECK(e.disc() == 512);
  CHECK(e.j_invariant() == 1728);
}
