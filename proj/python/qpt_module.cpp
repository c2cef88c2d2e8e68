// pybind11 bindings for the main operations: congruence invariants, level
// bounds, the subgroup census, pencil-of-quadrics analysis, local solubility
// and the verdict logic.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "qpt/census.hpp"
#include "qpt/cslogic.hpp"
#include "qpt/ec.hpp"
#include "qpt/genus.hpp"
#include "qpt/hyperell.hpp"
#include "qpt/pencil.hpp"
#include "qpt/report.hpp"

namespace py = pybind11;
using namespace qpt;

namespace {

py::dict congruence_invariants(const std::string& line) {
  Subgroup h = parse_subgroup_line(line);
  CongruenceData d = congruence_data(h.sl2_part());
  py::dict out;
  out["level"] = d.sl2_level;
  out["index"] = d.index_psl2;
  out["e2"] = d.e2;
  out["e3"] = d.e3;
  out["cusps"] = d.cusps;
  out["genus"] = d.genus;
  out["gl2_level"] = h.level();
  out["admissible"] = h.admissible();
  return out;
}

long long level_bound_of(const std::string& line) {
  return level_bound(parse_subgroup_line(line).sl2_part());
}

py::list census(long long modulus, long long max_genus) {
  CensusResult c = enumerate_admissible(modulus, max_genus);
  py::list out;
  for (const CensusClass& cls : c.classes) {
    py::dict d;
    d["order"] = cls.group.order();
    d["level"] = cls.group.level();
    d["genus"] = cls.genus;
    d["generators"] = subgroup_line(cls.group);
    out.append(d);
  }
  return out;
}

py::dict quartic_of(const std::string& pencil_text) {
  BinaryQuartic f = pencil_quartic(parse_pencil(pencil_text));
  py::dict out;
  py::list coeffs;
  for (const Rat& c : {f.a, f.b, f.c, f.d, f.e}) coeffs.append(to_string(c));
  out["coefficients"] = coeffs;
  out["I"] = to_string(f.invariant_i());
  out["J"] = to_string(f.invariant_j());
  out["squarefree"] = f.squarefree();
  return out;
}

py::dict jacobian_of(const std::string& pencil_text) {
  WeierstrassCurve e = jacobian_from_quartic(pencil_quartic(parse_pencil(pencil_text)));
  py::dict out;
  out["a4"] = to_string(e.a4);
  out["a6"] = to_string(e.a6);
  out["j"] = to_string(e.j_invariant());
  return out;
}

py::dict solve_conic(const std::string& text) {
  SolubilityVerdict v = conic_has_rational_point(parse_ternary_form(text));
  py::dict out;
  out["soluble"] = v.soluble;
  if (v.obstruction) out["obstruction"] = v.obstruction->str();
  if (v.witness) {
    py::list w;
    for (const Rat& x : *v.witness) w.append(to_string(x));
    out["witness"] = w;
  }
  return out;
}

py::dict locally_soluble(const std::string& text) {
  LocalSolubilityReport r =
      hyperelliptic_everywhere_locally_soluble(parse_hyperelliptic(text));
  py::dict out;
  out["soluble"] = r.soluble;
  if (r.obstruction) out["obstruction"] = r.obstruction->str();
  py::list checked;
  for (const Place& p : r.checked) checked.append(p.str());
  out["checked"] = checked;
  return out;
}

long long scheme_count(const std::string& text, long long p, int k) {
  return count_points(parse_scheme(text), p, k);
}

long long curve_count(const std::string& text, long long p, int k) {
  return ec_count(parse_weierstrass(text), p, k);
}

long long curve_ap(const std::string& text, long long p) {
  return ap_trace(parse_weierstrass(text), p);
}

py::dict verdict_from_bundle(const std::string& bundle_json) {
  VerdictRecord v = compose_verdict(bundle_from_json(nlohmann::json::parse(bundle_json)));
  py::dict out;
  out["label"] = v.label;
  out["genus"] = v.genus;
  out["hyperelliptic"] = tri_str(v.hyperelliptic);
  out["positive_rank_bielliptic"] = tri_str(v.positive_rank_bielliptic);
  out["infinitely_many_quadratic_points"] = tri_str(v.infinitely_many_quadratic_points);
  out["deciding_rule"] = v.deciding_rule;
  return out;
}

}  // namespace

PYBIND11_MODULE(_qpt, m) {
  m.doc() = "quadratic-point decision machinery for prime-power-level modular curves";

  m.def("gl2_order", &gl2_order, py::arg("n"), "order of GL2(Z/n)");
  m.def("sl2_order", &sl2_order, py::arg("n"), "order of SL2(Z/n)");
  m.def("congruence_invariants", &congruence_invariants, py::arg("line"),
        "level, index, elliptic point counts, cusps and genus of the "
        "congruence subgroup given by 'N; [[a,b],[c,d]]; ...'");
  m.def("level_bound", &level_bound_of, py::arg("line"),
        "upper bound on the GL2 level from the normalizer quotient");
  m.def("census", &census, py::arg("modulus"), py::arg("max_genus"),
        "conjugacy classes of admissible subgroups of level exactly N");
  m.def("pencil_quartic", &quartic_of, py::arg("pencil"),
        "determinant quartic and invariants of a pencil 'Q1 ; Q2'");
  m.def("jacobian", &jacobian_of, py::arg("pencil"), "Jacobian of the determinant quartic");
  m.def("solve_conic", &solve_conic, py::arg("form"),
        "Hasse-Minkowski verdict and witness for a ternary form");
  m.def("locally_soluble", &locally_soluble, py::arg("model"),
        "everywhere-local solubility of y^2 = f(x)");
  m.def("count_points", &scheme_count, py::arg("scheme"), py::arg("p"), py::arg("k") = 1,
        "number of F_{p^k}-points of a projective scheme");
  m.def("ec_count", &curve_count, py::arg("curve"), py::arg("p"), py::arg("k") = 1,
        "#E(F_{p^k}) of a Weierstrass curve");
  m.def("ap", &curve_ap, py::arg("curve"), py::arg("p"), "trace of Frobenius");
  m.def("cs_bound",
        [](int d1, int g1, int d2, int g2) {
          return cs_bound({d1, g1, {}}, {d2, g2, {}});
        },
        py::arg("d1"), py::arg("g1"), py::arg("d2"), py::arg("g2"),
        "Castelnuovo-Severi genus bound");
  m.def("unique_genus1_quotient", &unique_genus1_quotient, py::arg("genus"));
  m.def("verdict", &verdict_from_bundle, py::arg("bundle_json"),
        "compose a verdict from an evidence bundle (JSON text)");
}
