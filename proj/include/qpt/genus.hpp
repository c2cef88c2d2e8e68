#pragma once

#include "qpt/subgroup.hpp"

#include <vector>

namespace qpt {

struct CongruenceData {
  long long sl2_level = 1;
  long long index_psl2 = 1;  // mu
  long long e2 = 0;          // order-2 elliptic points
  long long e3 = 0;          // order-3 elliptic points
  long long cusps = 0;
  long long genus = 0;
  bool minus_identity_adjoined = false;
};

struct NormalizerQuotient {
  long long quotient_order = 1;
  std::vector<long long> element_orders;  // sorted multiset
};

// Invariants of the congruence subgroup via the coset action of
// S = [[0,-1],[1,0]] and T = [[1,1],[0,1]] on right cosets of +-Gamma.
CongruenceData congruence_data(const SL2Part& gamma);

// N(+-Gamma_M)/(+-Gamma_M) inside SL2(Z/M)/{+-I}.
NormalizerQuotient normalizer_quotient(const SL2Part& gamma);

// Level bound of the associated GL2 group: M*b, or 2*M*b when M = 2 (mod 4),
// where b is the lcm of quotient element orders supported on the primes of M.
// Requires prime-power M.
long long level_bound(const SL2Part& gamma);

}  // namespace qpt
