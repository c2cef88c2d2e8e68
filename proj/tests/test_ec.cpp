#include <doctest.h>

#include "qpt/ec.hpp"

#include <cstdlib>
#include <numeric>

using namespace qpt;

TEST_CASE("weierstrass parser") {
  WeierstrassCurve e = parse_weierstrass("y^2 = x^3 - 2x");
  CHECK(e.a4 == -2);
  CHECK(e.a6 == 0);
  WeierstrassCurve lng = parse_weierstrass("y^2 + x*y = x^3 + x^2 + x + 1");
  CHECK(lng.a1 == 1);
  CHECK(lng.a2 == 1);
  CHECK_THROWS(parse_weierstrass("y^2 = x^3"));      // singular
  CHECK_THROWS(parse_weierstrass("y^2 = x^4 + 1"));  // not a cubic
  CHECK(parse_weierstrass(weierstrass_str(e)).a4 == e.a4);
}

TEST_CASE("point counts for y^2 = x^3 - 2x") {
  WeierstrassCurve e = parse_weierstrass("y^2 = x^3 - 2x");
  CHECK(ec_count(e, 5) == 10);
  CHECK(ap_trace(e, 5) == -4);
  // Weil: #E(F_{p^2}) = p^2 + 1 - (a_p^2 - 2p)
  CHECK(ec_count(e, 5, 2) == 25 + 1 - (16 - 10));
  CHECK(ec_count(e, 3, 2) == 9 + 1 - (ap_trace(e, 3) * ap_trace(e, 3) - 6));
}

TEST_CASE("Hasse bound holds across small primes") {
  WeierstrassCurve e = parse_weierstrass("y^2 = x^3 - 2x");
  for (long long p : {3, 5, 7, 11, 13, 17, 19, 23, 29}) {
    long long a = ap_trace(e, p);
    CHECK(a * a <= 4 * p);
  }
}

TEST_CASE("reduction type") {
  WeierstrassCurve e = parse_weierstrass("y^2 = x^3 - 2x");  // disc 512
  CHECK(!good_reduction(e, 2));
  CHECK(good_reduction(e, 3));
  CHECK(good_reduction(e, 5));
  CHECK_THROWS(ap_trace(e, 2));
}

TEST_CASE("torsion bound is divisible by the rational torsion order") {
  // rational torsion of y^2 = x^3 - 2x is Z/2, generated by (0,0); the
  // gcd of the counts still carries the extra 2-torsion that shows up mod p
  WeierstrassCurve e = parse_weierstrass("y^2 = x^3 - 2x");
  // #E(F_3) = 4 and #E(F_5) = 10, so the gcd is exactly 2 here
  long long bound = torsion_bound(e, {3, 5, 7, 11, 13});
  CHECK(bound % 2 == 0);
  CHECK(bound == 2);
  CHECK_THROWS(torsion_bound(e, {2}));  // needs two good primes
}

TEST_CASE("mismatch filter refutes on differing counts") {
  WeierstrassCurve e = parse_weierstrass("y^2 = x^3 - 2x");
  ProjScheme quotient = parse_scheme("y^2*z - x^3 - x*z^2");  // 4 points mod 5
  MismatchReport r = mismatch_filter(quotient, e, {5});
  CHECK(r.verdict == MismatchVerdict::MISMATCH);
  CHECK(r.witness_prime == 5);
  REQUIRE(r.counts.size() == 1);
  CHECK(r.counts[0][0] == 5);
  CHECK(r.counts[0][1] == 4);
  CHECK(r.counts[0][2] == 10);
}

TEST_CASE("mismatch filter is inconclusive against the curve itself") {
  WeierstrassCurve e = parse_weierstrass("y^2 = x^3 - 2x");
  ProjScheme self = parse_scheme("y^2*z - x^3 + 2*x*z^2");
  MismatchReport r = mismatch_filter(self, e, {3, 5, 7, 11});
  CHECK(r.verdict == MismatchVerdict::INCONCLUSIVE);
  CHECK(r.witness_prime == 0);
  CHECK(r.counts.size() == 4);
  for (const auto& row : r.counts) CHECK(row[1] == row[2]);
}
