#include <doctest.h>

#include "qpt/fq.hpp"
#include "qpt/scheme.hpp"

#include <cstdlib>

using namespace qpt;

TEST_CASE("finite field arithmetic") {
  for (auto [p, k] : {std::pair<long long, int>{5, 1}, {3, 2}, {2, 3}, {7, 2}}) {
    Fq f(p, k);
    long long q = f.q();
    for (long long a = 1; a < q; ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, q - 1) == 1);
    }
    // distributivity spot checks
    for (long long a = 0; a < q; ++a)
      for (long long b = 0; b < q; ++b)
        CHECK(f.mul(a, f.add(b, 1)) == f.add(f.mul(a, b), f.mul(a, f.from_int(1))));
  }
}

TEST_CASE("projective space point counts") {
  ProjScheme p2 = parse_scheme("vars: x,y,z\n");
  CHECK(count_points(p2, 5, 1) == 31);   // (5^3-1)/4
  CHECK(count_points(p2, 3, 2) == 91);   // (9^3-1)/8
  ProjScheme p1 = parse_scheme("vars: x,y\n");
  CHECK(count_points(p1, 3, 2) == 10);   // P^1(F_9)
  CHECK(count_points(p1, 2, 3) == 9);
}

TEST_CASE("conic over F_3 has 4 points") {
  ProjScheme s = parse_scheme("x^2 + y^2 + z^2");
  CHECK(count_points(s, 3, 1) == 4);
  // any smooth plane conic with a point has q+1 points
  CHECK(count_points(s, 5, 1) == 6);
  CHECK(count_points(s, 3, 2) == 10);
}

TEST_CASE("plane cubic counts") {
  ProjScheme s = parse_scheme("y^2*z - x^3 + 2*x*z^2");
  CHECK(count_points(s, 5, 1) == 10);
  ProjScheme q = parse_scheme("y^2*z - x^3 - x*z^2");
  CHECK(count_points(q, 5, 1) == 4);
}

TEST_CASE("bad reduction and budget guards") {
  ProjScheme s = parse_scheme("x^2 + 1/5*y^2 + z^2");
  CHECK_THROWS_WITH_AS(count_points(s, 5, 1), doctest::Contains("denominator"),
                       std::invalid_argument);

  ProjScheme big = parse_scheme("vars: x,y,z,w,t\n");
  // P^4(F_11) has 16105 > 12000 points
  CHECK_THROWS_WITH_AS(count_points(big, 11, 1), doctest::Contains("budget"),
                       std::runtime_error);

  setenv("QPT_BUDGET", "20000", 1);
  CHECK(count_points(big, 11, 1) == 16105);
  setenv("QPT_BUDGET", "100", 1);
  ProjScheme small = parse_scheme("vars: x,y,z\n");
  CHECK_THROWS(count_points(small, 11, 1));
  unsetenv("QPT_BUDGET");
  CHECK(point_budget() == kDefaultPointBudget);
}

TEST_CASE("involutions: scalar square and scheme preservation") {
  ProjScheme s = parse_scheme(
      "2*x^2 + 3*x*y + y*z - z^2 + w^2\n4*x^2 - 2*x*y + y^2 - 2*y*z + 2*z^2");
  LinearInvolution flip = parse_involution("1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,-1", 4);
  CHECK(flip.involution_scalar() == 1);
  CHECK(flip.preserves(s));
  LinearInvolution bad = parse_involution("1,1,0,0;0,1,0,0;0,0,1,0;0,0,0,1", 4);
  CHECK_THROWS(bad.involution_scalar());
  LinearInvolution rot = parse_involution("0,1,0,0;1,0,0,0;0,0,1,0;0,0,0,1", 4);
  CHECK(rot.involution_scalar() == 1);
  CHECK(!rot.preserves(s));
}

TEST_CASE("fixed locus of w -> -w on the period-index curve has 4 points") {
  ProjScheme s = parse_scheme(
      "2*x^2 + 3*x*y + y*z - z^2 + w^2\n4*x^2 - 2*x*y + y^2 - 2*y*z + 2*z^2");
  LinearInvolution flip = parse_involution("1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,-1", 4);
  FixedLocusReport r = fixed_locus(s, flip);
  CHECK(r.count == 4);
  CHECK(r.transversal);
  CHECK(quotient_genus(1, r.count) == 0);
}

TEST_CASE("identity involution is rejected") {
  ProjScheme s = parse_scheme("x^2 + y^2 + z^2");
  LinearInvolution id = parse_involution("1,0,0;0,1,0;0,0,1", 3);
  CHECK_THROWS_AS(fixed_locus(s, id), std::invalid_argument);
}

TEST_CASE("fixed points of a conic involution") {
  // (x,y,z) -> (-x,y,z) on x^2+y^2+z^2: the point [1:0:0] misses the conic,
  // the line x=0 meets it in the conjugate pair y = +-iz
  ProjScheme s = parse_scheme("x^2 + y^2 + z^2");
  LinearInvolution m = parse_involution("-1,0,0;0,1,0;0,0,1", 3);
  FixedLocusReport r = fixed_locus(s, m);
  CHECK(r.count == 2);
  CHECK(quotient_genus(0, 2) == 0);
}

TEST_CASE("quotient genus by Riemann-Hurwitz") {
  CHECK(quotient_genus(1, 4) == 0);
  CHECK(quotient_genus(3, 0) == 2);
  CHECK(quotient_genus(5, 8) == 1);
  CHECK(quotient_genus(2, 2) == 1);
  CHECK_THROWS(quotient_genus(1, 3));   // parity
  CHECK_THROWS(quotient_genus(0, 1));
  CHECK_THROWS(quotient_genus(1, -2));  // negative branch count
}

TEST_CASE("scheme parser") {
  ProjScheme s = parse_scheme("# a comment\nvars: x,y\nx^2 - 3*x*y\n");
  CHECK(s.vars == std::vector<std::string>{"x", "y"});
  REQUIRE(s.generators.size() == 1);
  CHECK(s.generators[0].homogeneous());
  CHECK_THROWS(parse_scheme("x^2 + y"));  // inhomogeneous
}
