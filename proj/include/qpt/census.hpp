#pragma once

#include "qpt/genus.hpp"
#include "qpt/subgroup.hpp"

#include <map>
#include <string>
#include <vector>

namespace qpt {

struct LabelRecord {
  std::string label;  // "N.i.g.x.n"
  long long level = 0;
  long long index = 0;
  long long genus = 0;
  std::string family;
};

struct LabelParseError {
  int line = 0;
  std::string text;
};

struct LabelIngest {
  std::vector<LabelRecord> records;
  std::vector<LabelParseError> errors;
};

LabelRecord parse_label(const std::string& label, const std::string& family = "");
LabelIngest ingest_labels(const std::string& path, const std::string& family = "");

struct CensusClass {
  Subgroup group;
  long long genus = 0;
};

struct CensusResult {
  long long modulus = 0;
  std::vector<CensusClass> classes;             // admissible, level exactly N
  std::map<long long, long long> genus_tally;   // genus -> class count
};

// All conjugacy classes of admissible subgroups of GL2(Z/N) of level exactly N
// and genus <= max_genus. N must be a prime power; the default guard rejects
// N > 16 unless allow_large is set.
CensusResult enumerate_admissible(long long modulus, long long max_genus,
                                  bool allow_large = false);

struct TallyReport {
  std::map<long long, long long> computed;   // genus -> count
  std::map<long long, long long> from_table; // genus -> count
  std::vector<std::string> mismatches;
  bool match = true;
};

TallyReport tally_match(const CensusResult& census, const std::vector<LabelRecord>& records);

}  // namespace qpt
