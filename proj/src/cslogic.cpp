#include "qpt/cslogic.hpp"

#include <stdexcept>

namespace qpt {

std::string tri_str(Tri t) {
  switch (t) {
    case Tri::YES: return "yes";
    case Tri::NO: return "no";
    default: return "unknown";
  }
}

Tri tri_parse(const std::string& s) {
  if (s == "yes") return Tri::YES;
  if (s == "no") return Tri::NO;
  if (s == "unknown") return Tri::UNKNOWN;
  throw std::invalid_argument("expected yes/no/unknown, got '" + s + "'");
}

int cs_bound(const CoverDatum& c1, const CoverDatum& c2) {
  if (c1.degree < 1 || c2.degree < 1) throw std::invalid_argument("cover degree must be >= 1");
  if (c1.target_genus < 0 || c2.target_genus < 0)
    throw std::invalid_argument("target genus must be >= 0");
  return c1.degree * c1.target_genus + c2.degree * c2.target_genus +
         (c1.degree - 1) * (c2.degree - 1);
}

bool pointless_conic_excludes_hyperelliptic(int genus, bool conic_soluble) {
  return genus >= 2 && !conic_soluble;
}

bool unique_genus1_quotient(int genus) {
  // two distinct genus-1 quotients by involutions force g <= 5
  return genus > cs_bound({2, 1, {}}, {2, 1, {}});
}

bool reduction_excludes_bielliptic(const std::vector<int>& quotient_genera_mod_p) {
  for (int g : quotient_genera_mod_p)
    if (g == 1) return false;
  return true;
}

bool jacobian_factor_gate(int genus, bool has_positive_rank_factor) {
  if (genus < 2) throw std::invalid_argument("Jacobian factor gate needs genus >= 2");
  return !has_positive_rank_factor;
}

namespace {

void set_or_conflict(Tri& slot, Tri value, const std::string& rule, std::string& cause) {
  if (value == Tri::UNKNOWN) return;
  if (slot != Tri::UNKNOWN && slot != value)
    throw std::logic_error("contradictory evidence at rule '" + rule + "'");
  if (slot == Tri::UNKNOWN) cause = rule;
  slot = value;
}

}  // namespace

VerdictRecord compose_verdict(const EvidenceBundle& bundle) {
  VerdictRecord v;
  v.label = bundle.label;
  v.genus = bundle.genus;
  v.evidence = bundle.rules;

  if (bundle.genus == 0) {
    v.infinitely_many_quadratic_points = Tri::YES;
    v.deciding_rule = "genus0";
    return v;
  }

  Tri rational_divisor = Tri::UNKNOWN;  // genus-1 route: effective degree-2 divisor
  std::string hyper_rule, prb_rule, div_rule;

  for (const EvidenceRule& r : bundle.rules) {
    Tri out = tri_parse(r.outcome);
    if (r.name == "hyperelliptic") {
      set_or_conflict(v.hyperelliptic, out, r.name, hyper_rule);
    } else if (r.name == "pointless_conic") {
      // outcome yes = the target conic is pointless
      if (out == Tri::YES && bundle.genus >= 2)
        set_or_conflict(v.hyperelliptic, Tri::NO, r.name, hyper_rule);
    } else if (r.name == "positive_rank_bielliptic") {
      set_or_conflict(v.positive_rank_bielliptic, out, r.name, prb_rule);
    } else if (r.name == "jacobian_positive_rank_factor") {
      if (out == Tri::NO)
        set_or_conflict(v.positive_rank_bielliptic, Tri::NO, r.name, prb_rule);
    } else if (r.name == "genus1_quotient_mod_p") {
      // outcome no = no genus-1 quotient survives reduction
      if (out == Tri::NO)
        set_or_conflict(v.positive_rank_bielliptic, Tri::NO, r.name, prb_rule);
    } else if (r.name == "rational_g12" || r.name == "rational_point") {
      set_or_conflict(rational_divisor, out, r.name, div_rule);
    } else {
      throw std::invalid_argument("unknown evidence rule '" + r.name + "'");
    }
  }

  if (bundle.genus == 1) {
    v.infinitely_many_quadratic_points = rational_divisor;
    v.deciding_rule = div_rule;
    return v;
  }

  // genus >= 2: infinitely many quadratic points iff hyperelliptic or
  // positive rank bielliptic
  if (v.hyperelliptic == Tri::YES) {
    v.infinitely_many_quadratic_points = Tri::YES;
    v.deciding_rule = hyper_rule;
  } else if (v.positive_rank_bielliptic == Tri::YES) {
    v.infinitely_many_quadratic_points = Tri::YES;
    v.deciding_rule = prb_rule;
  } else if (v.hyperelliptic == Tri::NO && v.positive_rank_bielliptic == Tri::NO) {
    v.infinitely_many_quadratic_points = Tri::NO;
    v.deciding_rule = hyper_rule + "+" + prb_rule;
  }
  return v;
}

}  // namespace qpt
