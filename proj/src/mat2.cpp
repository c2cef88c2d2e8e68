#include "qpt/mat2.hpp"

#include <numeric>

namespace qpt {

namespace {
long long mod_reduce(long long x, long long n) {
  x %= n;
  return x < 0 ? x + n : x;
}
}  // namespace

Mat2::Mat2(long long mod, long long a, long long b, long long c, long long d) : n(mod) {
  if (mod < 1) throw std::invalid_argument("Mat2: modulus must be positive");
  e = {mod_reduce(a, mod), mod_reduce(b, mod), mod_reduce(c, mod), mod_reduce(d, mod)};
}

long long Mat2::det() const { return mod_reduce(e[0] * e[3] - e[1] * e[2], n); }

bool Mat2::invertible() const { return std::gcd(det(), n) == 1; }

Mat2 Mat2::operator*(const Mat2& o) const {
  if (n != o.n) throw std::invalid_argument("Mat2: modulus mismatch");
  return Mat2(n, e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3],
              e[2] * o.e[0] + e[3] * o.e[2], e[2] * o.e[1] + e[3] * o.e[3]);
}

Mat2 Mat2::inverse() const {
  long long di = mod_inverse(det(), n);
  return Mat2(n, di * e[3], -di * e[1], -di * e[2], di * e[0]);
}

Mat2 Mat2::reduce(long long m) const { return Mat2(m, e[0], e[1], e[2], e[3]); }

std::uint64_t Mat2::encode() const {
  std::uint64_t u = static_cast<std::uint64_t>(n);
  return ((static_cast<std::uint64_t>(e[0]) * u + e[1]) * u + e[2]) * u + e[3];
}

Mat2 Mat2::decode(std::uint64_t code, long long mod) {
  std::uint64_t u = static_cast<std::uint64_t>(mod);
  long long d = static_cast<long long>(code % u);
  code /= u;
  long long c = static_cast<long long>(code % u);
  code /= u;
  long long b = static_cast<long long>(code % u);
  code /= u;
  long long a = static_cast<long long>(code);
  return Mat2(mod, a, b, c, d);
}

std::string Mat2::str() const {
  return "[[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "],[" +
         std::to_string(e[2]) + "," + std::to_string(e[3]) + "]]";
}

Mat2 identity(long long mod) { return Mat2(mod, 1, 0, 0, 1); }
Mat2 minus_identity(long long mod) { return Mat2(mod, -1, 0, 0, -1); }

long long mod_inverse(long long a, long long n) {
  a = mod_reduce(a, n);
  long long t = 0, newt = 1, r = n, newr = a;
  while (newr != 0) {
    long long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not a unit");
  return mod_reduce(t, n);
}

namespace {
std::vector<long long> prime_factors(long long n) {
  std::vector<long long> ps;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}
}  // namespace

long long gl2_order(long long n) {
  if (n < 1) throw std::invalid_argument("gl2_order: n >= 1 required");
  long long ord = n * n * n * n;
  for (long long p : prime_factors(n)) {
    ord = ord / p * (p - 1);
    ord = ord / (p * p) * (p * p - 1);
  }
  return ord;
}

long long sl2_order(long long n) {
  long long ord = n * n * n;
  for (long long p : prime_factors(n)) ord = ord / (p * p) * (p * p - 1);
  return ord;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> lo, hi;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d * d != n) hi.push_back(n / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

bool is_prime_power(long long n, long long* p_out) {
  if (n < 2) return false;
  auto ps = prime_factors(n);
  if (ps.size() != 1) return false;
  if (p_out) *p_out = ps[0];
  return true;
}

}  // namespace qpt
