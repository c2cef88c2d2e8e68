#pragma once

#include "qpt/mat2.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qpt {

// Finite-level data of Gamma_H: a subgroup of SL2(Z/M) given by its element set.
struct SL2Part {
  long long modulus = 1;
  std::vector<std::uint64_t> elements;  // sorted encodings, closed under *

  long long order() const { return static_cast<long long>(elements.size()); }
  bool contains(const Mat2& m) const;
  // smallest m | modulus such that the group is the full preimage of its
  // reduction mod m under SL2(Z/modulus) -> SL2(Z/m)
  long long level() const;
  std::vector<Mat2> element_matrices() const;
};

// Subgroup of GL2(Z/N) stored as an explicit sorted element set.
class Subgroup {
 public:
  // Closes the generated subgroup. Throws on non-invertible generators or
  // when the closure exceeds max_order.
  static Subgroup close(const std::vector<Mat2>& gens, long long modulus,
                        long long max_order = 1000000);
  static Subgroup from_elements(std::vector<std::uint64_t> elems, long long modulus,
                                std::vector<Mat2> gens = {});

  long long modulus() const { return modulus_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  const std::vector<std::uint64_t>& elements() const { return elements_; }
  const std::vector<Mat2>& generators() const { return generators_; }
  std::vector<Mat2> element_matrices() const;

  bool contains(const Mat2& m) const;
  bool has_minus_identity() const;
  std::vector<long long> det_image() const;  // sorted residues
  bool det_surjective() const;
  long long level() const;  // GL2 level
  long long index_in_gl2() const;
  bool admissible() const;  // -I in H and det surjective
  SL2Part sl2_part() const;

  Subgroup conjugate(const Mat2& g) const;
  Subgroup reduce(long long m) const;  // image mod m | N

 private:
  long long modulus_ = 1;
  std::vector<Mat2> generators_;
  std::vector<std::uint64_t> elements_;
  mutable long long level_ = 0;  // lazy
};

bool conjugacy_equal(const Subgroup& h1, const Subgroup& h2);

// Text format: "N; [[a,b],[c,d]]; [[e,f],[g,h]]; ..." (whitespace-insensitive)
Subgroup parse_subgroup_line(const std::string& line);
std::string subgroup_line(const Subgroup& h);

// All elements of GL2(Z/N) / SL2(Z/N), as encodings in increasing order.
std::vector<std::uint64_t> gl2_elements(long long n);
std::vector<std::uint64_t> sl2_elements(long long n);

}  // namespace qpt
