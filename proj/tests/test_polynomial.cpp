#include <doctest.h>

#include "qpt/polynomial.hpp"

using namespace qpt;

namespace {
RatPoly P(std::initializer_list<long long> coeffs) {
  RatPoly p;
  for (long long c : coeffs) p.push_back(Rat(c));
  return trim(p);
}
}  // namespace

TEST_CASE("arithmetic and evaluation") {
  RatPoly f = P({-1, 0, 1});  // x^2 - 1
  RatPoly g = P({1, 1});      // x + 1
  CHECK(degree(f) == 2);
  CHECK(eval(f, Rat(3)) == 8);
  CHECK(mul(g, P({-1, 1})) == f);
  auto [q, r] = divmod(f, g);
  CHECK(q == P({-1, 1}));
  CHECK(r.empty());
  CHECK(derivative(f) == P({0, 2}));
}

TEST_CASE("gcd and squarefree part") {
  RatPoly f = mul(mul(P({-1, 1}), P({-1, 1})), P({2, 1}));  // (x-1)^2 (x+2)
  RatPoly g = poly_gcd(f, derivative(f));
  CHECK(degree(g) == 1);
  CHECK(eval(g, Rat(1)) == 0);
  RatPoly sf = squarefree_part(f);
  CHECK(degree(sf) == 2);
  CHECK(is_squarefree(sf));
  CHECK(!is_squarefree(f));
}

TEST_CASE("resultant and discriminant") {
  // Res(x^2 - 1, x - 2) = f(2) = 3
  CHECK(rat_resultant(P({-1, 0, 1}), P({-2, 1})) == 3);
  CHECK(discriminant(P({1, 0, 1})) == -4);    // x^2 + 1
  CHECK(discriminant(P({-2, 0, 0, 1})) == -108);  // x^3 - 2: -27*4
  // shared root means vanishing resultant
  CHECK(rat_resultant(P({-1, 0, 1}), P({-1, 1})) == 0);
}

TEST_CASE("padded resultant honors formal degrees") {
  // Res(x+1, x-1) = det [[1,1],[1,-1]] = -2 in the Sylvester convention;
  // padding x + 1 to a formal quadratic flips the row pattern
  Rat plain = rat_resultant(P({1, 1}), P({-1, 1}));
  Rat padded = rat_resultant_padded(P({1, 1}), P({-1, 1}), 2, 1);
  CHECK(plain == -2);
  CHECK(padded * padded == 4);  // same vanishing locus, sign is conventional
  CHECK_THROWS(rat_resultant_padded(P({1, 1, 1}), P({1, 1}), 1, 1));
}

TEST_CASE("Sturm real root counts") {
  CHECK(real_root_count(P({0, -2, 0, 1})) == 3);  // x^3 - 2x
  CHECK(real_root_count(P({1, 0, 1})) == 0);      // x^2 + 1
  CHECK(real_root_count(P({-2, 0, 1})) == 2);     // x^2 - 2
  CHECK(real_root_count(P({1, 0, 0, 0, 1})) == 0);
}

TEST_CASE("rational roots") {
  auto roots = rational_roots(P({1, -5, 6}));  // 6x^2 - 5x + 1 = (2x-1)(3x-1)
  REQUIRE(roots.size() == 2);
  CHECK(((roots[0] == Rat(1, 2) && roots[1] == Rat(1, 3)) ||
         (roots[0] == Rat(1, 3) && roots[1] == Rat(1, 2))));
  CHECK(rational_roots(P({-2, 0, 1})).empty());  // sqrt(2) irrational
}

TEST_CASE("primitive integer form") {
  Rat content;
  RatPoly f = {Rat(1, 2), Rat(3, 4)};  // (1/4)(2 + 3x)
  std::vector<Int> prim = primitive_integer(f, &content);
  CHECK(prim == std::vector<Int>{2, 3});
  CHECK(content == Rat(1, 4));
}
