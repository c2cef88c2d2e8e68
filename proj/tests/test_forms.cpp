#include <doctest.h>

#include "qpt/forms.hpp"

#include <random>
#include <set>

using namespace qpt;

namespace {
const Place kReal{};

std::vector<Place> relevant_places(const Rat& a, const Rat& b) {
  std::set<Int> primes{2};
  for (const Rat& x : {a, b})
    for (const Int& p : prime_factors_of(num(x) * den(x))) primes.insert(p);
  std::vector<Place> out{kReal};
  for (const Int& p : primes) out.push_back(Place{p});
  return out;
}
}  // namespace

TEST_CASE("hilbert symbol basics") {
  CHECK(hilbert_symbol(1, Rat(-7, 3), kReal) == 1);
  CHECK(hilbert_symbol(Rat(5), 1, Place{2}) == 1);
  CHECK(hilbert_symbol(-1, -1, kReal) == -1);
  CHECK(hilbert_symbol(-1, -1, Place{2}) == -1);
  CHECK(hilbert_symbol(-1, -1, Place{5}) == 1);
  // (2,5)_5: 2 is not a square mod 5
  CHECK(hilbert_symbol(2, 5, Place{5}) == -1);
  CHECK(hilbert_symbol(5, 5, Place{5}) == hilbert_symbol(5, -1, Place{5}));
  // symmetry and multiplicativity
  CHECK(hilbert_symbol(3, 7, Place{7}) == hilbert_symbol(7, 3, Place{7}));
  CHECK(hilbert_symbol(Rat(6), 7, Place{3}) ==
        hilbert_symbol(2, 7, Place{3}) * hilbert_symbol(3, 7, Place{3}));
}

TEST_CASE("hilbert product formula on random pairs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> d(-60, 60);
  int tried = 0;
  while (tried < 1000) {
    long long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    ++tried;
    int prod = 1;
    for (const Place& v : relevant_places(Rat(a), Rat(b)))
      prod *= hilbert_symbol(Rat(a), Rat(b), v);
    CHECK(prod == 1);
  }
}

TEST_CASE("diagonalization produces squarefree congruent diagonal") {
  QuadraticForm q = parse_ternary_form("4x^2-2xy+y^2-2yz+2z^2");
  std::vector<Int> diag = q.diagonal_squarefree();
  REQUIRE(diag.size() == 3);
  for (const Int& d : diag) {
    CHECK(d != 0);
    CHECK(squarefree_part(d) == d);
    CHECK(d > 0);  // the form is positive definite
  }
}

TEST_CASE("isotropic conic comes with a witness") {
  QuadraticForm q = parse_ternary_form("x^2+y^2-z^2");
  SolubilityVerdict v = conic_has_rational_point(q);
  CHECK(v.soluble);
  REQUIRE(v.witness);
  CHECK(q.eval(*v.witness) == 0);
}

TEST_CASE("definite conics are insoluble at the real place") {
  for (const char* text : {"4x^2-2xy+y^2-2yz+2z^2", "8x^2+4xy+y^2+2z^2"}) {
    SolubilityVerdict v = conic_has_rational_point(parse_ternary_form(text));
    CHECK(!v.soluble);
    REQUIRE(v.obstruction);
    CHECK(v.obstruction->is_real());
  }
}

TEST_CASE("a 2-adically obstructed conic") {
  // x^2 + y^2 - 3z^2: insoluble, obstruction at 2 or 3
  SolubilityVerdict v = conic_has_rational_point(parse_ternary_form("x^2+y^2-3z^2"));
  CHECK(!v.soluble);
  REQUIRE(v.obstruction);
  CHECK(!v.obstruction->is_real());
}

TEST_CASE("conic verdicts vs brute force witness search") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> d(-9, 9);
  int tried = 0;
  while (tried < 200) {
    QuadraticForm q;
    q.gram = {{Rat(d(rng)), 0, 0}, {0, Rat(d(rng)), 0}, {0, 0, Rat(d(rng))}};
    if (q.det() == 0) continue;
    ++tried;
    bool brute = false;
    for (long long x = 0; x <= 12 && !brute; ++x)
      for (long long y = -12; y <= 12 && !brute; ++y)
        for (long long z = -12; z <= 12 && !brute; ++z) {
          if (x == 0 && y == 0 && z == 0) continue;
          if (q.eval({Rat(x), Rat(y), Rat(z)}) == 0) brute = true;
        }
    SolubilityVerdict v = conic_has_rational_point(q);
    if (brute) CHECK(v.soluble);          // no false "insoluble"
    if (!v.soluble) CHECK(!brute);        // and never a missed witness
    if (v.soluble) {
      REQUIRE(v.witness);
      CHECK(q.eval(*v.witness) == 0);
    }
  }
}

TEST_CASE("quaternary isotropy") {
  // 16x^2 + 3y^2 - 4yz + 4z^2 + 2w^2 is positive definite: anisotropic
  QuadraticForm pd;
  pd.gram = {{16, 0, 0, 0}, {0, 3, -2, 0}, {0, -2, 4, 0}, {0, 0, 0, 2}};
  SolubilityVerdict v = quaternary_isotropic(pd);
  CHECK(!v.soluble);
  REQUIRE(v.obstruction);
  CHECK(v.obstruction->is_real());

  // 2x^2 + 3y^2 - 5z^2 - 30w^2 has the point (1,1,1,0)
  QuadraticForm iso;
  iso.gram = {{2, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, -5, 0}, {0, 0, 0, -30}};
  CHECK(quaternary_isotropic(iso).soluble);

  // x^2 + y^2 + z^2 + w^2: definite again
  QuadraticForm sums;
  sums.gram = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK(!quaternary_isotropic(sums).soluble);
}

TEST_CASE("local isotropy of diagonal forms") {
  CHECK(diagonal_isotropic_at({1, 1, -1}, kReal));
  CHECK(!diagonal_isotropic_at({1, 1, 1}, kReal));
  CHECK(diagonal_isotropic_at({1, 1, 1}, Place{5}));  // -1 is a sum of two squares mod 5
  CHECK(!diagonal_isotropic_at({1, 1, 3}, Place{3}));
}

TEST_CASE("form parser") {
  QuadraticForm q = parse_ternary_form("4x^2-2xy+y^2-2yz+2z^2");
  CHECK(q.gram[0][0] == 4);
  CHECK(q.gram[0][1] == -1);  // half of -2
  CHECK(q.gram[1][2] == -1);
  CHECK(q.gram[2][2] == 2);
  CHECK(q.eval({1, 1, 1}) == 4 - 2 + 1 - 2 + 2);
}
