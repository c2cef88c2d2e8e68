#include <doctest.h>

#include "qpt/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qpt;
namespace fs = std::filesystem;

namespace {

const char* kQ1 = "2x^2 + 3xy + yz - z^2 + w^2";
const char* kQ2 = "4x^2 - 2xy + y^2 - 2yz + 2z^2";

fs::path make_config(const fs::path& dir, const std::string& label, const std::string& curve,
                     const std::string& extra = "") {
  fs::create_directories(dir);
  fs::path conf = dir / (label + ".conf");
  std::ofstream out(conf);
  out << "# replay configuration\n";
  out << "label = " << label << "\n";
  out << "curve = " << (dir / (label + ".txt")).string() << "\n";
  out << "genus = 1\nheight = 10\n";
  out << "out = " << (dir / "out").string() << "\n";
  out << extra;
  std::ofstream curve_file(dir / (label + ".txt"));
  curve_file << curve << "\n";
  return conf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config parsing") {
  fs::path dir = fs::temp_directory_path() / "qpt_report_cfg";
  fs::path conf = make_config(dir, "a.1", std::string(kQ1) + " ; " + kQ2);
  auto cfg = parse_config(conf.string());
  CHECK(cfg.at("label") == "a.1");
  CHECK(cfg.at("genus") == "1");
  CHECK(cfg.at("height") == "10");
  CHECK_THROWS(parse_config("definitely_missing_config_file.conf"));
  fs::remove_all(dir);
}

TEST_CASE("pipeline writes a dossier and reaches the verdict") {
  fs::path dir = fs::temp_directory_path() / "qpt_report_run";
  fs::path conf = make_config(dir, "8.48.1.bi.1", std::string(kQ1) + " ; " + kQ2);
  std::string err;
  int code = run_pipeline(conf.string(), &err);
  CHECK(code == kOk);
  CHECK(err.empty());

  fs::path dossier = dir / "out" / "8.48.1.bi.1.json";
  REQUIRE(fs::exists(dossier));
  nlohmann::json j = nlohmann::json::parse(slurp(dossier));
  CHECK(j["label"] == "8.48.1.bi.1");
  CHECK(j["verdict"]["infinitely_many_quadratic_points"] == "no");
  CHECK(j["computations"][0]["op"] == "pencil_quartic");
  CHECK(j["computations"][0]["result"]["I"] == "132");
  fs::remove_all(dir);
}

TEST_CASE("pipeline with a base point finds the quadratic divisor") {
  fs::path dir = fs::temp_directory_path() / "qpt_report_run16";
  fs::path conf = make_config(dir, "16.48.1.l.1",
                              "16x^2 + 8xy + y^2 + z^2 - zw ; 16xy + z^2 - 2zw - w^2",
                              "base_point = 0,0,1,1\n");
  int code = run_pipeline(conf.string());
  CHECK(code == kOk);
  nlohmann::json j = nlohmann::json::parse(slurp(dir / "out" / "16.48.1.l.1.json"));
  CHECK(j["verdict"]["infinitely_many_quadratic_points"] == "yes");
  fs::remove_all(dir);
}

TEST_CASE("replaying twice is byte-identical") {
  fs::path dir = fs::temp_directory_path() / "qpt_report_detrm";
  fs::path conf = make_config(dir, "det.1", std::string(kQ1) + " ; " + kQ2);
  REQUIRE(run_pipeline(conf.string()) == kOk);
  std::string first = slurp(dir / "out" / "det.1.json");
  REQUIRE(run_pipeline(conf.string()) == kOk);
  std::string second = slurp(dir / "out" / "det.1.json");
  CHECK(first == second);
  CHECK(!first.empty());
  fs::remove_all(dir);
}

TEST_CASE("exit codes") {
  std::string err;
  CHECK(run_pipeline("no_such_file.conf", &err) == kMissingInput);
  CHECK(!err.empty());

  fs::path dir = fs::temp_directory_path() / "qpt_report_err";
  fs::create_directories(dir);
  fs::path empty = dir / "empty.conf";
  std::ofstream(empty) << "# nothing\n";
  CHECK(run_pipeline(empty.string()) == kUsageError);

  fs::path nolabel = dir / "nolabel.conf";
  std::ofstream(nolabel) << "height = 10\n";
  CHECK(run_pipeline(nolabel.string()) == kUsageError);

  fs::path badcurve = dir / "badcurve.conf";
  std::ofstream(badcurve) << "label = x\ncurve = " << (dir / "missing.txt").string() << "\n";
  CHECK(run_pipeline(badcurve.string()) == kMissingInput);
  fs::remove_all(dir);
}

TEST_CASE("bundle round trip through JSON") {
  EvidenceBundle b{"16.96.5.ec.1",
                   5,
                   {{"pointless_conic", "conic over the canonical model", "yes", "dossier"},
                    {"jacobian_positive_rank_factor", "newform ranks", "no", "tables"}}};
  VerdictRecord v = compose_verdict(b);
  nlohmann::json j = verdict_to_json(v);
  CHECK(j["infinitely_many_quadratic_points"] == "no");
  CHECK(j["rules"].size() == 2);

  nlohmann::json bj;
  bj["label"] = b.label;
  bj["genus"] = b.genus;
  for (const EvidenceRule& r : b.rules)
    bj["rules"].push_back({{"name", r.name}, {"inputs", r.inputs}, {"outcome", r.outcome}, {"refs", r.refs}});
  EvidenceBundle back = bundle_from_json(bj);
  CHECK(back.label == b.label);
  CHECK(back.genus == 5);
  REQUIRE(back.rules.size() == 2);
  CHECK(back.rules[0].name == "pointless_conic");
}

TEST_CASE("summary tables tally genera and deciding rules") {
  VerdictRecord a = compose_verdict({"a", 0, {}});
  VerdictRecord b = compose_verdict({"b", 1, {{"rational_g12", "", "yes", ""}}});
  VerdictRecord c = compose_verdict({"c", 1, {{"rational_g12", "", "no", ""}}});
  VerdictRecord d = compose_verdict({"d", 5, {}});  // unresolved
  std::string csv = emit_tables({a, b, c, d});
  CHECK(csv.find("genus,yes,no,unknown") != std::string::npos);
  CHECK(csv.find("genus0") != std::string::npos);
  CHECK(csv.find("rational_g12") != std::string::npos);
  CHECK(csv.find("d") != std::string::npos);  // unresolved label listed
  CHECK_THROWS(emit_tables({}));
}
