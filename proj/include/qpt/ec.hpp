#pragma once

#include "qpt/quartic.hpp"
#include "qpt/scheme.hpp"

#include <array>
#include <string>
#include <vector>

namespace qpt {

// "y^2 = x^3 - 2x" or "y^2 + x*y = x^3 + x^2 + x + 1" (long Weierstrass)
WeierstrassCurve parse_weierstrass(const std::string& text);
std::string weierstrass_str(const WeierstrassCurve& e);

bool good_reduction(const WeierstrassCurve& e, long long p);

// #E(F_{p^k}) including the point at infinity, by brute force
long long ec_count(const WeierstrassCurve& e, long long p, int k = 1);

// a_p = p + 1 - #E(F_p); asserts the Hasse bound, rejects bad reduction
long long ap_trace(const WeierstrassCurve& e, long long p);

enum class MismatchVerdict { MISMATCH, INCONCLUSIVE };

struct MismatchReport {
  MismatchVerdict verdict = MismatchVerdict::INCONCLUSIVE;
  // one row per prime: (p, #quotient(F_p), #E(F_p))
  std::vector<std::array<long long, 3>> counts;
  long long witness_prime = 0;  // first prime where the counts differ
};

// Can Jac(quotient) be isogenous to E? Point counts over F_p are isogeny
// invariants for elliptic factors of matching dimension, so any difference
// refutes; agreement proves nothing.
MismatchReport mismatch_filter(const ProjScheme& quotient, const WeierstrassCurve& e,
                               const std::vector<long long>& primes);

// gcd of #E(F_p) over >= 2 good primes; the rational torsion order divides it
long long torsion_bound(const WeierstrassCurve& e, const std::vector<long long>& primes);

}  // namespace qpt
