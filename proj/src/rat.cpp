#include "qpt/rat.hpp"

namespace qpt {

std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

bool is_square(const Rat& r) {
  return r >= 0 && is_square(num(r)) && is_square(den(r));
}

Int squarefree_part(Int n) {
  if (n == 0) return 0;
  Int sign = n < 0 ? -1 : 1;
  n = abs(n);
  Int out = 1;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return sign * out * n;
}

Int int_pow(Int base, unsigned exp) {
  Int out = 1;
  while (exp) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

long long p_valuation(Int& n, const Int& p) {
  long long v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int legendre(Int a, const Int& p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::invalid_argument("legendre: a divisible by p");
  Int r = boost::multiprecision::powm(a, (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

std::string to_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

}  // namespace qpt
