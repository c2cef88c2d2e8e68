#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpt {

// 2x2 matrix over Z/N, entries reduced to [0, N), row-major (a b; c d).
struct Mat2 {
  long long n = 1;                      // modulus
  std::array<long long, 4> e{1, 0, 0, 1};

  Mat2() = default;
  Mat2(long long mod, long long a, long long b, long long c, long long d);

  long long det() const;
  bool invertible() const;
  Mat2 operator*(const Mat2& o) const;
  Mat2 inverse() const;
  Mat2 reduce(long long m) const;

  bool operator==(const Mat2& o) const = default;
  // entries packed base N; total order within a fixed modulus
  std::uint64_t encode() const;
  static Mat2 decode(std::uint64_t code, long long mod);

  std::string str() const;
};

Mat2 identity(long long mod);
Mat2 minus_identity(long long mod);

long long mod_inverse(long long a, long long n);

// |GL2(Z/N)| = N^4 prod_{p|N} (1-1/p)(1-1/p^2)
long long gl2_order(long long n);
long long sl2_order(long long n);

std::vector<long long> divisors(long long n);
bool is_prime_power(long long n, long long* p_out = nullptr);

}  // namespace qpt
