#pragma once

#include <cstdint>
#include <vector>

namespace qpt {

// Arithmetic in F_{p^k}, k <= 3, via a fixed monic irreducible of degree k.
// Elements are encoded as integers in [0, p^k): base-p digit vectors are the
// coefficients of the polynomial-basis representation.
class Fq {
 public:
  Fq(long long p, int k);

  long long p() const { return p_; }
  int k() const { return k_; }
  long long q() const { return q_; }
  // non-leading coefficients of the chosen monic irreducible
  const std::vector<long long>& modulus_tail() const { return irr_; }

  long long add(long long a, long long b) const;
  long long sub(long long a, long long b) const;
  long long neg(long long a) const;
  long long mul(long long a, long long b) const;
  long long pow(long long a, long long e) const;
  long long inv(long long a) const;
  long long from_int(long long n) const;  // image of an integer (prime field)

 private:
  long long p_, q_;
  int k_;
  std::vector<long long> irr_;  // x^k + irr_[k-1] x^{k-1} + ... + irr_[0]

  std::vector<long long> digits(long long a) const;
  long long undigits(const std::vector<long long>& d) const;
};

}  // namespace qpt
