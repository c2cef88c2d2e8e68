#include "qpt/report.hpp"

#include "qpt/forms.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace qpt {

namespace {

std::string rat_str(const Rat& r) { return to_string(r); }

json rat_vec(const std::vector<Rat>& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(rat_str(x));
  return out;
}

json int_vec(const std::vector<Int>& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(x.str());
  return out;
}

json poly_json(const RatPoly& p) {
  json out = json::array();
  for (const Rat& c : p) out.push_back(rat_str(c));
  return out;
}

json gram_json(const std::vector<std::vector<Rat>>& g) {
  json out = json::array();
  for (const auto& row : g) out.push_back(rat_vec(row));
  return out;
}

json solubility_json(const SolubilityVerdict& sv) {
  json out;
  out["soluble"] = sv.soluble;
  if (sv.obstruction) out["obstruction"] = sv.obstruction->str();
  if (sv.witness) out["witness"] = rat_vec(*sv.witness);
  return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::map<std::string, std::string> parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim_copy = [](std::string s) {
      auto a = s.find_first_not_of(" \t\r");
      auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim_copy(line.substr(0, eq));
    std::string val = trim_copy(line.substr(eq + 1));
    if (!key.empty()) out[key] = val;
  }
  return out;
}

json pencil_dossier(const std::string& label, const PencilCurve& curve, int genus,
                    long long height, const std::optional<std::vector<Rat>>& base_point,
                    const PipelineOptions& opts) {
  json d;
  d["label"] = label;
  d["genus"] = genus;
  d["inputs"]["q1"] = quadric_str(curve.q1);
  d["inputs"]["q2"] = quadric_str(curve.q2);
  d["inputs"]["search_height"] = height;
  json comps = json::array();
  auto record = [&](const std::string& op, json result, std::chrono::steady_clock::time_point t0) {
    json c;
    c["op"] = op;
    c["result"] = std::move(result);
    if (opts.include_timings) c["ms"] = ms_since(t0);
    comps.push_back(std::move(c));
  };

  auto t0 = std::chrono::steady_clock::now();
  BinaryQuartic f = pencil_quartic(curve);
  {
    json r;
    r["coefficients"] = {rat_str(f.a), rat_str(f.b), rat_str(f.c), rat_str(f.d), rat_str(f.e)};
    r["I"] = rat_str(f.invariant_i());
    r["J"] = rat_str(f.invariant_j());
    r["squarefree"] = f.squarefree();
    record("pencil_quartic", std::move(r), t0);
  }

  t0 = std::chrono::steady_clock::now();
  {
    WeierstrassCurve e = jacobian_from_quartic(f);
    json r;
    r["a4"] = rat_str(e.a4);
    r["a6"] = rat_str(e.a6);
    r["c4"] = rat_str(e.c4());
    r["c6"] = rat_str(e.c6());
    r["j"] = rat_str(e.j_invariant());
    record("jacobian_from_quartic", std::move(r), t0);
  }

  t0 = std::chrono::steady_clock::now();
  SingularMembers sing = singular_members(curve);
  bool any_rational_divisor = false;
  json divisors = json::array();
  {
    json r;
    json cones = json::array();
    for (const auto& cone : sing.rational) {
      json cj;
      cj["parameter"] = {rat_str(cone.u), rat_str(cone.v)};
      cj["rank"] = cone.rank;
      if (cone.rank == 3) {
        cj["vertex"] = int_vec(cone.vertex);
        cj["base_plane"] = rat_vec(cone.base_plane);
        cj["base_conic"] = gram_json(cone.base_conic.gram);
        SolubilityVerdict sv = conic_has_rational_point(cone.base_conic);
        cj["base_conic_solubility"] = solubility_json(sv);
        // degree-2 divisor from the line through the vertex, when possible
        VertexLineDivisor vld = vertex_line_divisor(
            cone, cone.u == 0 && cone.v == 1 ? curve.q1 : curve.q2, base_point);
        json dj;
        dj["cone_parameter"] = {rat_str(cone.u), rat_str(cone.v)};
        if (vld.no_rational_ruling) {
          dj["outcome"] = "no_rational_point_on_base_conic";
          if (vld.obstruction) dj["obstruction"] = vld.obstruction->str();
        } else {
          any_rational_divisor = true;
          dj["outcome"] = vld.contains_rational_point ? "rational_point" : "conjugate_pair";
          dj["field_disc"] = vld.field_disc.str();
          dj["base_point"] = rat_vec(vld.base_point);
          dj["point_rational_part"] = rat_vec(vld.point_rat);
          dj["point_sqrt_part"] = rat_vec(vld.point_irr);
        }
        divisors.push_back(std::move(dj));
      }
      cones.push_back(std::move(cj));
    }
    r["rational_cones"] = std::move(cones);
    json irr = json::array();
    for (const auto& cc : sing.irrational) {
      json ij;
      ij["min_poly"] = poly_json(cc.min_poly);
      ij["field_disc"] = cc.field_disc.str();
      irr.push_back(std::move(ij));
    }
    r["conjugate_cones"] = std::move(irr);
    record("singular_members", std::move(r), t0);
  }
  {
    json r;
    r["divisors"] = divisors;
    record("vertex_line_divisors", r, std::chrono::steady_clock::now());
  }

  t0 = std::chrono::steady_clock::now();
  {
    json r = json::array();
    for (const auto& m : square_disc_members(curve, height)) {
      json mj;
      mj["parameter"] = {rat_str(m.u), rat_str(m.v)};
      mj["smooth"] = m.smooth;
      if (m.smooth) {
        SymQuadric q = pencil_member(curve.q1, curve.q2, m.u, m.v);
        mj["det"] = rat_str(q.det());
        try {
          SolubilityVerdict sv = ruling_has_rational_line(q);
          mj["rational_ruling_line"] = solubility_json(sv);
          if (sv.soluble) any_rational_divisor = true;
        } catch (const std::invalid_argument& e) {
          mj["rational_ruling_line"] = {{"error", e.what()}};
        }
      }
      r.push_back(std::move(mj));
    }
    record("square_disc_members", std::move(r), t0);
  }

  d["computations"] = std::move(comps);

  EvidenceBundle bundle;
  bundle.label = label;
  bundle.genus = genus;
  bundle.rules.push_back({"rational_g12",
                          "vertex-line divisors and ruling lines up to height " +
                              std::to_string(height),
                          any_rational_divisor ? "yes" : "no", "pencil dossier"});
  VerdictRecord v = compose_verdict(bundle);
  d["verdict"] = verdict_to_json(v);
  return d;
}

EvidenceBundle bundle_from_json(const json& j) {
  EvidenceBundle b;
  b.label = j.at("label").get<std::string>();
  b.genus = j.at("genus").get<int>();
  for (const auto& rj : j.at("rules")) {
    EvidenceRule r;
    r.name = rj.at("name").get<std::string>();
    r.outcome = rj.at("outcome").get<std::string>();
    r.inputs = rj.value("inputs", "");
    r.refs = rj.value("refs", "");
    b.rules.push_back(std::move(r));
  }
  return b;
}

json verdict_to_json(const VerdictRecord& v) {
  json out;
  out["label"] = v.label;
  out["genus"] = v.genus;
  out["hyperelliptic"] = tri_str(v.hyperelliptic);
  out["positive_rank_bielliptic"] = tri_str(v.positive_rank_bielliptic);
  out["infinitely_many_quadratic_points"] = tri_str(v.infinitely_many_quadratic_points);
  out["deciding_rule"] = v.deciding_rule;
  json rules = json::array();
  for (const auto& r : v.evidence)
    rules.push_back({{"name", r.name}, {"inputs", r.inputs}, {"outcome", r.outcome}, {"refs", r.refs}});
  out["rules"] = rules;
  return out;
}

int run_pipeline(const std::string& config_path, std::string* error_message) {
  auto fail = [&](int code, const std::string& msg) {
    if (error_message) *error_message = msg;
    return code;
  };
  std::map<std::string, std::string> cfg;
  try {
    cfg = parse_config(config_path);
  } catch (const std::exception& e) {
    return fail(kMissingInput, e.what());
  }
  if (cfg.empty()) return fail(kUsageError, "empty config: nothing to do");
  if (!cfg.count("label") || !cfg.count("curve"))
    return fail(kUsageError, "config needs at least 'label' and 'curve'");

  std::string label = cfg["label"];
  long long height = cfg.count("height") ? std::stoll(cfg["height"]) : 100;
  int genus = cfg.count("genus") ? std::stoi(cfg["genus"]) : 1;
  std::string out_dir = cfg.count("out") ? cfg["out"] : ".";

  std::optional<std::vector<Rat>> base_point;
  if (cfg.count("base_point")) {
    std::vector<Rat> bp;
    std::istringstream ss(cfg["base_point"]);
    std::string tok;
    while (std::getline(ss, tok, ',')) bp.push_back(Rat(Int(tok)));
    if (bp.size() != 4) return fail(kUsageError, "base_point needs 4 integer coordinates");
    base_point = bp;
  }

  try {
    PencilCurve curve = parse_pencil_file(cfg["curve"]);
    PipelineOptions opts;
    opts.include_timings = cfg.count("timings") && cfg["timings"] == "true";
    json d = pencil_dossier(label, curve, genus, height, base_point, opts);
    std::filesystem::create_directories(out_dir);
    std::string path = out_dir + "/" + label + ".json";
    std::ofstream out(path);
    if (!out) return fail(kMissingInput, "cannot write " + path);
    out << d.dump(2) << "\n";
    return kOk;
  } catch (const std::runtime_error& e) {
    std::string what = e.what();
    if (what.find("budget") != std::string::npos) return fail(kBudgetExhausted, what);
    return fail(kMissingInput, what);
  } catch (const std::logic_error& e) {
    return fail(kConsistencyError, e.what());
  } catch (const std::exception& e) {
    return fail(kDomainError, e.what());
  }
}

std::string emit_tables(const std::vector<VerdictRecord>& dossiers) {
  if (dossiers.empty()) throw std::invalid_argument("emit_tables needs at least one dossier");
  std::map<int, std::map<std::string, int>> per_genus;
  std::map<std::string, int> per_rule;
  std::vector<std::string> unresolved;
  for (const auto& v : dossiers) {
    per_genus[v.genus][tri_str(v.infinitely_many_quadratic_points)]++;
    if (!v.deciding_rule.empty()) per_rule[v.deciding_rule]++;
    if (v.infinitely_many_quadratic_points == Tri::UNKNOWN) unresolved.push_back(v.label);
  }
  std::ostringstream out;
  out << "genus,yes,no,unknown\n";
  for (const auto& [g, tally] : per_genus) {
    auto at = [&](const char* k) {
      auto it = tally.find(k);
      return it == tally.end() ? 0 : it->second;
    };
    out << g << "," << at("yes") << "," << at("no") << "," << at("unknown") << "\n";
  }
  out << "\nrule,count\n";
  for (const auto& [rule, n] : per_rule) out << rule << "," << n << "\n";
  if (!unresolved.empty()) {
    out << "\nunresolved\n";
    for (const auto& l : unresolved) out << l << "\n";
  }
  return out.str();
}

}  // namespace qpt
