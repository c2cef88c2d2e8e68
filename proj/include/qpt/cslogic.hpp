#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qpt {

enum class Tri { YES, NO, UNKNOWN };

std::string tri_str(Tri t);
Tri tri_parse(const std::string& s);

// one map C -> C_i of degree d_i onto a curve of genus g_i
struct CoverDatum {
  int degree = 1;
  int target_genus = 0;
  std::optional<bool> target_pointless;
};

// Castelnuovo-Severi: for two covers with no common factorization,
// g <= d1 g1 + d2 g2 + (d1-1)(d2-1)
int cs_bound(const CoverDatum& c1, const CoverDatum& c2);

// Corollary-of-CS exclusion: a genus >= 2 curve with a degree-2 map to a
// pointless conic cannot be hyperelliptic. Returns true when the exclusion
// applies (i.e. the curve is certified non-hyperelliptic).
bool pointless_conic_excludes_hyperelliptic(int genus, bool conic_soluble);

// g >= 6 forces at most one genus-1 quotient by degree-2 maps
bool unique_genus1_quotient(int genus);

// quotient genera of all involutions of the reduction mod a good prime;
// true = "not bielliptic over Q"
bool reduction_excludes_bielliptic(const std::vector<int>& quotient_genera_mod_p);

// no positive-rank elliptic factor in the Jacobian => not positive rank
// bielliptic; returns true when the exclusion applies
bool jacobian_factor_gate(int genus, bool has_positive_rank_factor);

struct EvidenceRule {
  std::string name;     // e.g. "pointless_conic", "rational_g12", "jacobian_gate"
  std::string inputs;   // free-form description of the inputs used
  std::string outcome;  // yes/no/unknown, meaning depends on the rule
  std::string refs;     // pointers to the computation that produced it
};

struct EvidenceBundle {
  std::string label;
  int genus = 0;
  std::vector<EvidenceRule> rules;
};

struct VerdictRecord {
  std::string label;
  int genus = 0;
  Tri hyperelliptic = Tri::UNKNOWN;
  Tri positive_rank_bielliptic = Tri::UNKNOWN;
  Tri infinitely_many_quadratic_points = Tri::UNKNOWN;
  std::string deciding_rule;
  std::vector<EvidenceRule> evidence;
};

// Decision tree over an evidence bundle:
//   genus 0 -> yes; genus 1 -> rational divisor evidence decides;
//   genus >= 2 -> hyperelliptic or positive-rank-bielliptic (and their
//   exclusions). Contradictory evidence raises an error.
//
// Recognized rule names and outcomes:
//   hyperelliptic: yes/no        pointless_conic: conic soluble? yes/no
//   rational_g12: yes/no         rational_point: yes/no
//   positive_rank_bielliptic: yes/no
//   jacobian_positive_rank_factor: yes/no
//   genus1_quotient_mod_p: yes/no (yes = some genus-1 quotient survives)
VerdictRecord compose_verdict(const EvidenceBundle& bundle);

}  // namespace qpt
