#include <doctest.h>

#include "qpt/genus.hpp"

using namespace qpt;

namespace {

SL2Part borel_sl2(long long p, long long gen) {
  // upper-triangular subgroup of SL2(Z/p) together with -I
  long long inv = mod_inverse(gen, p);
  Subgroup h = Subgroup::close(
      {Mat2(p, 1, 1, 0, 1), Mat2(p, gen, 0, 0, inv), Mat2(p, p - 1, 0, 0, p - 1)}, p);
  return h.sl2_part();
}

}  // namespace

TEST_CASE("genus of the Borel at 7: index 8, two order-3 points, two cusps") {
  CongruenceData d = congruence_data(borel_sl2(7, 3));
  CHECK(d.sl2_level == 7);
  CHECK(d.index_psl2 == 8);
  CHECK(d.e2 == 0);
  CHECK(d.e3 == 2);
  CHECK(d.cusps == 2);
  CHECK(d.genus == 0);
}

TEST_CASE("genus of the Borel at 11 is 1") {
  CongruenceData d = congruence_data(borel_sl2(11, 2));
  CHECK(d.index_psl2 == 12);
  CHECK(d.e2 == 0);
  CHECK(d.e3 == 0);
  CHECK(d.cusps == 2);
  CHECK(d.genus == 1);
}

TEST_CASE("genus of the Borel at 13 is 0") {
  CongruenceData d = congruence_data(borel_sl2(13, 2));
  CHECK(d.index_psl2 == 14);
  CHECK(d.e2 == 2);
  CHECK(d.e3 == 2);
  CHECK(d.cusps == 2);
  CHECK(d.genus == 0);
}

TEST_CASE("full SL2 gives the j-line") {
  Subgroup g = Subgroup::close({Mat2(2, 0, 1, 1, 0), Mat2(2, 1, 1, 0, 1)}, 2);
  SL2Part s = g.sl2_part();
  CongruenceData d = congruence_data(s);
  CHECK(d.index_psl2 == 1);
  CHECK(d.genus == 0);
  CHECK(d.cusps == 1);
}

TEST_CASE("Borel normalizer quotients at 7, 11, 13 are trivial; bound is p") {
  for (auto [p, gen] : {std::pair<long long, long long>{7, 3}, {11, 2}, {13, 2}}) {
    SL2Part s = borel_sl2(p, gen);
    NormalizerQuotient q = normalizer_quotient(s);
    CHECK(q.quotient_order == 1);
    CHECK(level_bound(s) == p);
  }
}

TEST_CASE("level-27 genus-0 group: bound 81 through a quotient of order 3") {
  Subgroup h = parse_subgroup_line("27; [[10,9],[5,10]]; [[11,0],[0,5]]; [[26,0],[0,26]]");
  SL2Part s = h.sl2_part();
  CHECK(s.order() == 486);
  CHECK(s.level() == 27);
  CongruenceData d = congruence_data(s);
  CHECK(d.index_psl2 == 36);
  CHECK(d.e2 == 0);
  CHECK(d.e3 == 0);
  CHECK(d.cusps == 8);
  CHECK(d.genus == 0);
  NormalizerQuotient q = normalizer_quotient(s);
  CHECK(q.quotient_order == 3);
  CHECK(q.element_orders == std::vector<long long>{1, 3, 3});
  CHECK(level_bound(s) == 81);
}

TEST_CASE("doubling rule for M = 2 mod 4") {
  // <T> mod 2 has level 2; the bound doubles at such levels
  Subgroup g = Subgroup::close({Mat2(2, 1, 1, 0, 1)}, 2);
  SL2Part s = g.sl2_part();
  CHECK(s.level() == 2);
  long long b = level_bound(s);
  CHECK(b % 4 == 0);  // 2 * M * lcm-part
}
