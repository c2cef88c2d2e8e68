// qpt: pencils of quadrics, congruence-subgroup invariants, and the local and
// finite-field checks used to decide quadratic-point verdicts for modular
// curves of prime-power level.
#include "qpt/census.hpp"
#include "qpt/cslogic.hpp"
#include "qpt/ec.hpp"
#include "qpt/genus.hpp"
#include "qpt/hyperell.hpp"
#include "qpt/pencil.hpp"
#include "qpt/report.hpp"
#include "qpt/scheme.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

using nlohmann::json;
using namespace qpt;

namespace {

std::string read_line_arg(const std::string& arg) {
  // a subgroup can be passed inline or as a path to a one-line file
  if (arg.find(';') != std::string::npos) return arg;
  std::ifstream in(arg);
  if (!in) throw std::runtime_error("cannot open " + arg);
  std::string line;
  std::getline(in, line);
  return line;
}

std::vector<long long> parse_primes(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
  return out;
}

int cmd_census(long long modulus, long long max_genus, const std::string& labels_path,
               const std::string& out_path, bool allow_large) {
  CensusResult census = enumerate_admissible(modulus, max_genus, allow_large);
  json rep;
  rep["modulus"] = census.modulus;
  json classes = json::array();
  for (const auto& cls : census.classes) {
    json cj;
    cj["order"] = cls.group.order();
    cj["level"] = cls.group.level();
    cj["genus"] = cls.genus;
    json gens = json::array();
    for (const auto& g : cls.group.generators()) gens.push_back(g.str());
    cj["generators"] = gens;
    classes.push_back(std::move(cj));
  }
  rep["classes"] = std::move(classes);
  json tally;
  for (const auto& [g, n] : census.genus_tally) tally[std::to_string(g)] = n;
  rep["tally"] = tally;
  if (!labels_path.empty()) {
    LabelIngest ingest = ingest_labels(labels_path);
    if (!ingest.errors.empty()) {
      for (const auto& e : ingest.errors)
        std::cerr << "bad label at line " << e.line << ": " << e.text << "\n";
      return kMissingInput;
    }
    std::vector<LabelRecord> relevant;
    for (const auto& r : ingest.records)
      if (r.level == modulus && r.genus <= max_genus) relevant.push_back(r);
    TallyReport tr = tally_match(census, relevant);
    json matches;
    matches["match"] = tr.match;
    json table;
    for (const auto& [g, n] : tr.from_table) table[std::to_string(g)] = n;
    matches["from_table"] = table;
    matches["mismatches"] = tr.mismatches;
    rep["matches"] = matches;
  }
  std::string text = rep.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
  return rep.contains("matches") && !rep["matches"]["match"].get<bool>() ? kConsistencyError : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadratic-point toolkit for prime-power-level modular curves"};
  app.require_subcommand(1);

  // census
  auto* census = app.add_subcommand("census", "enumerate admissible subgroup classes of GL2(Z/N)");
  long long census_mod = 0, census_genus = 0;
  std::string census_labels, census_out;
  bool census_large = false;
  census->add_option("--modulus", census_mod, "prime-power modulus N")->required();
  census->add_option("--max-genus", census_genus, "largest genus to keep")->required();
  census->add_option("--labels", census_labels, "label list to tally against");
  census->add_option("--out", census_out, "output JSON path (default stdout)");
  census->add_flag("--allow-large", census_large, "lift the N <= 16 guard");

  // genus
  auto* genus_cmd = app.add_subcommand("genus", "congruence invariants of a subgroup line");
  std::string genus_arg;
  genus_cmd->add_option("group", genus_arg, "subgroup line 'N; [[a,b],[c,d]]; ...' or a file")
      ->required();

  // levelbound
  auto* lb_cmd = app.add_subcommand("levelbound", "level bound from the normalizer quotient");
  std::string lb_arg;
  lb_cmd->add_option("group", lb_arg, "subgroup line or file")->required();

  // pencil
  auto* pencil_cmd = app.add_subcommand("pencil", "dossier for an intersection of two quadrics");
  std::string pencil_file, pencil_label = "curve", pencil_base, pencil_out;
  long long pencil_height = 10000;
  int pencil_genus = 1;
  pencil_cmd->add_option("file", pencil_file, "file with two ';'-separated quadrics")->required();
  pencil_cmd->add_option("--label", pencil_label, "label for the dossier");
  pencil_cmd->add_option("--height", pencil_height, "square-disc search height");
  pencil_cmd->add_option("--genus", pencil_genus, "genus of the curve");
  pencil_cmd->add_option("--base-point", pencil_base, "base point 'a,b,c,d' on a cone");
  pencil_cmd->add_option("--out", pencil_out, "output JSON path (default stdout)");

  // conic
  auto* conic_cmd = app.add_subcommand("conic", "rational point on a ternary quadratic form");
  std::string conic_arg;
  conic_cmd->add_option("form", conic_arg, "e.g. \"4x^2-2xy+y^2-2yz+2z^2\"")->required();

  // locsolve
  auto* loc_cmd = app.add_subcommand("locsolve", "everywhere-local solubility of y^2 = f(x)");
  std::string loc_arg;
  loc_cmd->add_option("model", loc_arg, "e.g. \"y^2 = -(65536x^4+128)\"")->required();

  // count
  auto* count_cmd = app.add_subcommand("count", "F_{p^k} points of a projective scheme");
  std::string count_scheme;
  long long count_p = 0;
  int count_k = 1;
  count_cmd->add_option("--scheme", count_scheme, "scheme file")->required();
  count_cmd->add_option("--p", count_p, "prime")->required();
  count_cmd->add_option("--k", count_k, "extension degree (<= 3)");

  // mismatch
  auto* mm_cmd = app.add_subcommand("mismatch", "point-count comparison against an elliptic curve");
  std::string mm_scheme, mm_curve, mm_primes = "3,5,7";
  mm_cmd->add_option("--scheme", mm_scheme, "quotient scheme file")->required();
  mm_cmd->add_option("--curve", mm_curve, "Weierstrass equation")->required();
  mm_cmd->add_option("--primes", mm_primes, "comma-separated primes");

  // verdict
  auto* verdict_cmd = app.add_subcommand("verdict", "compose a verdict from an evidence bundle");
  std::string verdict_file;
  verdict_cmd->add_option("bundle", verdict_file, "evidence bundle JSON")->required();

  // replay
  auto* replay_cmd = app.add_subcommand("replay", "run a replay config end to end");
  std::string replay_config;
  replay_cmd->add_option("config", replay_config, "key=value config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*census) return cmd_census(census_mod, census_genus, census_labels, census_out, census_large);
    if (*genus_cmd) {
      Subgroup h = parse_subgroup_line(read_line_arg(genus_arg));
      CongruenceData cd = congruence_data(h.sl2_part());
      std::cout << cd.sl2_level << ", " << cd.index_psl2 << ", " << cd.e2 << ", " << cd.e3
                << ", " << cd.cusps << ", " << cd.genus << "\n";
      return kOk;
    }
    if (*lb_cmd) {
      Subgroup h = parse_subgroup_line(read_line_arg(lb_arg));
      std::cout << level_bound(h.sl2_part()) << "\n";
      return kOk;
    }
    if (*pencil_cmd) {
      PencilCurve curve = parse_pencil_file(pencil_file);
      std::optional<std::vector<Rat>> bp;
      if (!pencil_base.empty()) {
        std::vector<Rat> v;
        std::stringstream ss(pencil_base);
        std::string tok;
        while (std::getline(ss, tok, ',')) v.push_back(Rat(Int(tok)));
        bp = v;
      }
      json d = pencil_dossier(pencil_label, curve, pencil_genus, pencil_height, bp);
      std::string text = d.dump(2) + "\n";
      if (pencil_out.empty()) std::cout << text;
      else std::ofstream(pencil_out) << text;
      return kOk;
    }
    if (*conic_cmd) {
      QuadraticForm q = parse_ternary_form(conic_arg);
      SolubilityVerdict sv = conic_has_rational_point(q);
      if (!sv.soluble) {
        std::cout << "INSOLUBLE at " << (sv.obstruction ? sv.obstruction->str() : "?") << "\n";
      } else if (sv.witness) {
        const auto& w = *sv.witness;
        std::cout << "POINT (" << to_string(w[0]) << ":" << to_string(w[1]) << ":"
                  << to_string(w[2]) << ")\n";
      } else {
        std::cout << "SOLUBLE (no witness within search height)\n";
      }
      return kOk;
    }
    if (*loc_cmd) {
      HyperellipticModel m = parse_hyperelliptic(loc_arg);
      LocalSolubilityReport rep = hyperelliptic_everywhere_locally_soluble(m);
      if (rep.soluble) {
        std::cout << "EVERYWHERE LOCALLY SOLUBLE (checked";
        for (const auto& v : rep.checked) std::cout << " " << v.str();
        std::cout << ")\n";
      } else {
        std::cout << "LOCALLY INSOLUBLE at " << rep.obstruction->str() << "\n";
      }
      return kOk;
    }
    if (*count_cmd) {
      ProjScheme s = parse_scheme_file(count_scheme);
      std::cout << count_points(s, count_p, count_k) << "\n";
      return kOk;
    }
    if (*mm_cmd) {
      ProjScheme s = parse_scheme_file(mm_scheme);
      WeierstrassCurve e = parse_weierstrass(mm_curve);
      MismatchReport rep = mismatch_filter(s, e, parse_primes(mm_primes));
      for (const auto& row : rep.counts)
        std::cout << "p=" << row[0] << " quotient=" << row[1] << " curve=" << row[2] << "\n";
      if (rep.verdict == MismatchVerdict::MISMATCH)
        std::cout << "MISMATCH at p=" << rep.witness_prime << "\n";
      else
        std::cout << "INCONCLUSIVE\n";
      return kOk;
    }
    if (*verdict_cmd) {
      std::ifstream in(verdict_file);
      if (!in) throw std::runtime_error("cannot open " + verdict_file);
      json j = json::parse(in);
      VerdictRecord v = compose_verdict(bundle_from_json(j));
      std::cout << verdict_to_json(v).dump(2) << "\n";
      return kOk;
    }
    if (*replay_cmd) {
      std::string err;
      int code = run_pipeline(replay_config, &err);
      if (code != kOk) std::cerr << "replay failed: " << err << "\n";
      return code;
    }
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::string what = e.what();
    return what.find("budget") != std::string::npos ? kBudgetExhausted : kMissingInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::logic_error& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return kConsistencyError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}
