#include "qpt/census.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qpt {

LabelRecord parse_label(const std::string& label, const std::string& family) {
  std::vector<std::string> parts;
  std::stringstream ss(label);
  std::string tok;
  while (std::getline(ss, tok, '.')) parts.push_back(tok);
  if (parts.size() != 5) throw std::invalid_argument("label must have 5 fields: " + label);
  LabelRecord rec;
  rec.label = label;
  rec.family = family;
  size_t pos = 0;
  rec.level = std::stoll(parts[0], &pos);
  if (pos != parts[0].size()) throw std::invalid_argument("bad level field: " + label);
  rec.index = std::stoll(parts[1], &pos);
  if (pos != parts[1].size()) throw std::invalid_argument("bad index field: " + label);
  rec.genus = std::stoll(parts[2], &pos);
  if (pos != parts[2].size()) throw std::invalid_argument("bad genus field: " + label);
  if (rec.level < 1 || rec.index < 1 || rec.genus < 0)
    throw std::invalid_argument("label fields out of range: " + label);
  return rec;
}

LabelIngest ingest_labels(const std::string& path, const std::string& family) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open label file: " + path);
  LabelIngest out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string trimmed;
    for (char c : line)
      if (!isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    if (trimmed.empty()) continue;
    try {
      out.records.push_back(parse_label(trimmed, family));
    } catch (const std::exception& e) {
      out.errors.push_back({lineno, e.what()});
    }
  }
  return out;
}

namespace {

// canonical form: lexicographically minimal conjugated element set
std::vector<std::uint64_t> canonical_elements(const Subgroup& h,
                                              const std::vector<Mat2>& conjugators) {
  std::vector<std::uint64_t> best = h.elements();
  for (const Mat2& g : conjugators) {
    std::vector<std::uint64_t> cand = h.conjugate(g).elements();
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace

CensusResult enumerate_admissible(long long modulus, long long max_genus, bool allow_large) {
  long long p = 0;
  if (!is_prime_power(modulus, &p))
    throw std::invalid_argument("enumerate_admissible: modulus must be a prime power");
  if (modulus > 16 && !allow_large)
    throw std::invalid_argument("enumerate_admissible: modulus > 16 needs the override flag");

  std::vector<Mat2> all;
  for (std::uint64_t code : gl2_elements(modulus)) all.push_back(Mat2::decode(code, modulus));

  // BFS over subgroups containing -I, deduped by canonical conjugated element set
  Subgroup start = Subgroup::close({minus_identity(modulus)}, modulus);
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Subgroup> queue{start}, found{start};
  seen.insert(canonical_elements(start, all));
  while (!queue.empty()) {
    Subgroup h = std::move(queue.back());
    queue.pop_back();
    for (const Mat2& g : all) {
      if (h.contains(g)) continue;
      std::vector<Mat2> gens = h.generators();
      gens.push_back(g);
      Subgroup k = Subgroup::close(gens, modulus);
      if (seen.insert(canonical_elements(k, all)).second) {
        queue.push_back(k);
        found.push_back(k);
      }
    }
  }

  CensusResult result;
  result.modulus = modulus;
  for (const Subgroup& h : found) {
    if (!h.det_surjective() || h.level() != modulus) continue;
    long long genus = congruence_data(h.sl2_part()).genus;
    if (genus > max_genus) continue;
    result.classes.push_back({h, genus});
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const CensusClass& a, const CensusClass& b) {
              if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
              return a.group.elements() < b.group.elements();
            });
  for (const CensusClass& c : result.classes) ++result.genus_tally[c.genus];
  return result;
}

TallyReport tally_match(const CensusResult& census, const std::vector<LabelRecord>& records) {
  TallyReport rep;
  rep.computed = census.genus_tally;
  for (const LabelRecord& r : records) {
    if (r.level != census.modulus) continue;
    ++rep.from_table[r.genus];
  }
  std::set<long long> genera;
  for (auto& [g, _] : rep.computed) genera.insert(g);
  for (auto& [g, _] : rep.from_table) genera.insert(g);
  for (long long g : genera) {
    long long a = rep.computed.count(g) ? rep.computed.at(g) : 0;
    long long b = rep.from_table.count(g) ? rep.from_table.at(g) : 0;
    if (a != b) {
      rep.match = false;
      rep.mismatches.push_back("genus " + std::to_string(g) + ": computed " + std::to_string(a) +
                               " vs table " + std::to_string(b));
    }
  }
  return rep;
}

}  // namespace qpt
