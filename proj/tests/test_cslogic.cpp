#include <doctest.h>

#include "qpt/cslogic.hpp"

#include <stdexcept>

using namespace qpt;

TEST_CASE("tri-state parsing") {
  CHECK(tri_str(Tri::YES) == "yes");
  CHECK(tri_str(Tri::NO) == "no");
  CHECK(tri_str(Tri::UNKNOWN) == "unknown");
  CHECK(tri_parse("yes") == Tri::YES);
  CHECK(tri_parse("no") == Tri::NO);
  CHECK(tri_parse("unknown") == Tri::UNKNOWN);
  CHECK_THROWS(tri_parse("maybe"));
}

TEST_CASE("Castelnuovo-Severi bounds") {
  CHECK(cs_bound({2, 0, {}}, {2, 0, {}}) == 1);
  CHECK(cs_bound({2, 1, {}}, {2, 1, {}}) == 5);
  CHECK(cs_bound({2, 0, {}}, {3, 0, {}}) == 2);
  CHECK(cs_bound({2, 2, {}}, {2, 1, {}}) == 7);
}

TEST_CASE("unique genus-1 quotient threshold is exactly 6") {
  CHECK(!unique_genus1_quotient(5));
  CHECK(unique_genus1_quotient(6));
  CHECK(unique_genus1_quotient(7));
  CHECK(!unique_genus1_quotient(1));
}

TEST_CASE("pointless conic exclusion applies only in genus >= 2") {
  CHECK(pointless_conic_excludes_hyperelliptic(3, false));
  CHECK(pointless_conic_excludes_hyperelliptic(2, false));
  CHECK(!pointless_conic_excludes_hyperelliptic(1, false));
  CHECK(!pointless_conic_excludes_hyperelliptic(3, true));
}

TEST_CASE("reduction mod p excludes bielliptic when no genus-1 quotient survives") {
  CHECK(reduction_excludes_bielliptic({0, 2, 3}));
  CHECK(!reduction_excludes_bielliptic({0, 1}));
  CHECK(reduction_excludes_bielliptic({}));
}

TEST_CASE("jacobian factor gate") {
  CHECK(jacobian_factor_gate(5, false));
  CHECK(!jacobian_factor_gate(5, true));
  CHECK_THROWS_AS(jacobian_factor_gate(1, false), std::invalid_argument);
}

TEST_CASE("verdict: genus 0 always has infinitely many quadratic points") {
  VerdictRecord v = compose_verdict({"test.0", 0, {}});
  CHECK(v.infinitely_many_quadratic_points == Tri::YES);
  CHECK(v.deciding_rule == "genus0");
}

TEST_CASE("verdict: genus 1 decided by rational degree-2 divisors") {
  EvidenceBundle yes{"g1.yes", 1, {{"rational_g12", "divisor found", "yes", ""}}};
  CHECK(compose_verdict(yes).infinitely_many_quadratic_points == Tri::YES);

  EvidenceBundle no{"g1.no", 1, {{"rational_g12", "all divisors refuted", "no", ""}}};
  VerdictRecord v = compose_verdict(no);
  CHECK(v.infinitely_many_quadratic_points == Tri::NO);
  CHECK(v.deciding_rule == "rational_g12");

  EvidenceBundle open{"g1.open", 1, {}};
  CHECK(compose_verdict(open).infinitely_many_quadratic_points == Tri::UNKNOWN);

  EvidenceBundle pt{"g1.pt", 1, {{"rational_point", "found a point", "yes", ""}}};
  CHECK(compose_verdict(pt).infinitely_many_quadratic_points == Tri::YES);
}

TEST_CASE("verdict: hyperelliptic genus-2 curve") {
  EvidenceBundle b{"g2.h", 2, {{"hyperelliptic", "degree-2 map to P^1", "yes", ""}}};
  VerdictRecord v = compose_verdict(b);
  CHECK(v.hyperelliptic == Tri::YES);
  CHECK(v.infinitely_many_quadratic_points == Tri::YES);
}

TEST_CASE("verdict: positive rank bielliptic") {
  EvidenceBundle b{"g3.b", 3, {{"positive_rank_bielliptic", "rank 1 quotient", "yes", ""}}};
  VerdictRecord v = compose_verdict(b);
  CHECK(v.positive_rank_bielliptic == Tri::YES);
  CHECK(v.infinitely_many_quadratic_points == Tri::YES);
}

TEST_CASE("verdict: double exclusion yields no") {
  EvidenceBundle b{"g5.no",
                   5,
                   {{"pointless_conic", "conic insoluble at oo", "yes", ""},
                    {"jacobian_positive_rank_factor", "analytic rank 0 everywhere", "no", ""}}};
  VerdictRecord v = compose_verdict(b);
  CHECK(v.hyperelliptic == Tri::NO);
  CHECK(v.positive_rank_bielliptic == Tri::NO);
  CHECK(v.infinitely_many_quadratic_points == Tri::NO);
  CHECK(v.deciding_rule == "pointless_conic+jacobian_positive_rank_factor");
}

TEST_CASE("verdict: genus-1 quotient count can rule out bielliptic") {
  EvidenceBundle b{"g4",
                   4,
                   {{"hyperelliptic", "", "no", ""},
                    {"genus1_quotient_mod_p", "no genus-1 quotient mod 3", "no", ""}}};
  VerdictRecord v = compose_verdict(b);
  CHECK(v.infinitely_many_quadratic_points == Tri::NO);
}

TEST_CASE("verdict: undecided when evidence is one-sided") {
  EvidenceBundle b{"g5.open", 5, {{"hyperelliptic", "", "no", ""}}};
  VerdictRecord v = compose_verdict(b);
  CHECK(v.hyperelliptic == Tri::NO);
  CHECK(v.infinitely_many_quadratic_points == Tri::UNKNOWN);
}

TEST_CASE("contradictory evidence raises a consistency error") {
  EvidenceBundle b{"bad",
                   3,
                   {{"hyperelliptic", "", "yes", ""},
                    {"pointless_conic", "", "yes", ""}}};  // pointless conic forces non-hyperelliptic
  CHECK_THROWS_AS(compose_verdict(b), std::logic_error);
}

TEST_CASE("unknown rule names are rejected") {
  EvidenceBundle b{"odd", 2, {{"palm_reading", "", "yes", ""}}};
  CHECK_THROWS_AS(compose_verdict(b), std::invalid_argument);
}
