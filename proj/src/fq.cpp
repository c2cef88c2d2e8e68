#include "qpt/fq.hpp"

#include <stdexcept>

namespace qpt {

namespace {

long long mod_pow(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; d++)
    if (n % d == 0) return false;
  return true;
}

// does the monic poly x^k + tail (coeffs over F_p) have no root / factor?
// brute-force irreducibility for k <= 3: no roots suffices for k in {2,3}.
bool irreducible(long long p, const std::vector<long long>& tail) {
  int k = (int)tail.size();
  for (long long x = 0; x < p; x++) {
    long long v = 1;
    for (int i = k - 1; i >= 0; i--) v = (v * x + tail[i]) % p;
    if (v == 0) return false;
  }
  return k <= 3;
}

}  // namespace

Fq::Fq(long long p, int k) : p_(p), k_(k) {
  if (!is_prime_ll(p)) throw std::invalid_argument("Fq: p must be prime");
  if (k < 1 || k > 3) throw std::invalid_argument("Fq: only degrees 1..3 supported");
  q_ = 1;
  for (int i = 0; i < k; i++) {
    if (q_ > (1LL << 40) / p) throw std::invalid_argument("Fq: field too large");
    q_ *= p;
  }
  if (k == 1) return;
  // smallest irreducible in lexicographic order of tail coefficients
  std::vector<long long> tail(k, 0);
  while (true) {
    if (irreducible(p_, tail)) { irr_ = tail; return; }
    int i = 0;
    while (i < k && ++tail[i] == p_) tail[i++] = 0;
    if (i == k) throw std::logic_error("Fq: no irreducible found");
  }
}

std::vector<long long> Fq::digits(long long a) const {
  std::vector<long long> d(k_);
  for (int i = 0; i < k_; i++) { d[i] = a % p_; a /= p_; }
  return d;
}

long long Fq::undigits(const std::vector<long long>& d) const {
  long long a = 0;
  for (int i = k_ - 1; i >= 0; i--) a = a * p_ + d[i];
  return a;
}

long long Fq::add(long long a, long long b) const {
  if (k_ == 1) return (a + b) % p_;
  auto da = digits(a), db = digits(b);
  for (int i = 0; i < k_; i++) da[i] = (da[i] + db[i]) % p_;
  return undigits(da);
}

long long Fq::neg(long long a) const {
  if (k_ == 1) return (p_ - a) % p_;
  auto d = digits(a);
  for (auto& c : d) c = (p_ - c) % p_;
  return undigits(d);
}

long long Fq::sub(long long a, long long b) const { return add(a, neg(b)); }

long long Fq::mul(long long a, long long b) const {
  if (k_ == 1) return a * b % p_;
  auto da = digits(a), db = digits(b);
  std::vector<long long> prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; i++)
    for (int j = 0; j < k_; j++) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  // reduce by x^k = -tail
  for (int i = 2 * k_ - 2; i >= k_; i--) {
    long long c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < k_; j++)
      prod[i - k_ + j] = (prod[i - k_ + j] + (p_ - irr_[j]) % p_ * c) % p_;
  }
  prod.resize(k_);
  return undigits(prod);
}

long long Fq::pow(long long a, long long e) const {
  if (k_ == 1) return mod_pow(a, e, p_);
  long long r = from_int(1), b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

long long Fq::inv(long long a) const {
  if (a == 0) throw std::invalid_argument("Fq: inverse of zero");
  return pow(a, q_ - 2);
}

long long Fq::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return r;
}

}  // namespace qpt
