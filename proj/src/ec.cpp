#include "qpt/ec.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qpt {

WeierstrassCurve parse_weierstrass(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("curve equation needs '='");
  std::vector<std::string> vars = {"x", "y"};
  MultiPoly lhs = parse_multipoly(text.substr(0, eq), vars);
  MultiPoly rhs = parse_multipoly(text.substr(eq + 1), vars);

  auto coeff = [](const MultiPoly& p, int ex, int ey) {
    auto it = p.terms.find({ex, ey});
    return it == p.terms.end() ? Rat(0) : it->second;
  };
  if (coeff(lhs, 0, 2) != 1)
    throw std::invalid_argument("left side must start with y^2");
  WeierstrassCurve e;
  e.a1 = coeff(lhs, 1, 1);
  e.a3 = coeff(lhs, 0, 1);
  if (coeff(rhs, 3, 0) != 1)
    throw std::invalid_argument("right side must be monic of degree 3 in x");
  e.a2 = coeff(rhs, 2, 0);
  e.a4 = coeff(rhs, 1, 0);
  e.a6 = coeff(rhs, 0, 0);
  // everything else must cancel
  MultiPoly check = mp_add(lhs, mp_scale(rhs, Rat(-1)));
  for (const auto& [ex, c] : check.terms) {
    std::vector<int> m = ex;
    bool known = (m == std::vector<int>{0, 2}) || (m == std::vector<int>{1, 1}) ||
                 (m == std::vector<int>{0, 1}) || (m == std::vector<int>{3, 0}) ||
                 (m == std::vector<int>{2, 0}) || (m == std::vector<int>{1, 0}) ||
                 (m == std::vector<int>{0, 0});
    if (!known && c != 0)
      throw std::invalid_argument("not a Weierstrass equation");
  }
  if (e.disc() == 0) throw std::invalid_argument("singular Weierstrass equation");
  return e;
}

std::string weierstrass_str(const WeierstrassCurve& e) {
  auto term = [](const Rat& c, const std::string& mono, bool lead) {
    if (c == 0) return std::string();
    std::string out;
    if (c > 0 && !lead) out += " + ";
    if (c < 0) out += lead ? "-" : " - ";
    Rat a = c < 0 ? Rat(-c) : c;
    if (a != 1 || mono.empty()) out += to_string(a);
    if (a != 1 && !mono.empty()) out += "*";
    out += mono;
    return out;
  };
  std::string lhs = "y^2";
  lhs += term(e.a1, "x*y", false);
  lhs += term(e.a3, "y", false);
  std::string rhs = "x^3";
  rhs += term(e.a2, "x^2", false);
  rhs += term(e.a4, "x", false);
  rhs += term(e.a6, "", false);
  return lhs + " = " + rhs;
}

bool good_reduction(const WeierstrassCurve& e, long long p) {
  for (const Rat& a : {e.a1, e.a2, e.a3, e.a4, e.a6})
    if (den(a) % p == 0) return false;
  Rat d = e.disc();
  if (den(d) % p == 0) return false;
  return num(d) % p != 0;
}

long long ec_count(const WeierstrassCurve& e, long long p, int k) {
  if (!good_reduction(e, p)) throw std::invalid_argument("bad reduction at p");
  Fq F(p, k);
  auto red = [&](const Rat& a) {
    Int n = num(a) % p, d = den(a) % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    return F.mul(F.from_int((long long)n), F.inv(F.from_int((long long)d)));
  };
  long long a1 = red(e.a1), a2 = red(e.a2), a3 = red(e.a3), a4 = red(e.a4), a6 = red(e.a6);
  long long count = 1;  // the point at infinity
  for (long long x = 0; x < F.q(); x++) {
    // x^3 + a2 x^2 + a4 x + a6
    long long rhs = F.add(F.mul(F.add(F.mul(F.add(x, a2), x), a4), x), a6);
    for (long long y = 0; y < F.q(); y++) {
      long long lhs = F.add(F.mul(y, y), F.mul(y, F.add(F.mul(a1, x), a3)));
      if (lhs == rhs) count++;
    }
  }
  return count;
}

long long ap_trace(const WeierstrassCurve& e, long long p) {
  long long n = ec_count(e, p, 1);
  long long ap = p + 1 - n;
  if ((double)ap * ap > 4.0 * p)
    throw std::logic_error("Hasse bound violated; counting bug");
  return ap;
}

MismatchReport mismatch_filter(const ProjScheme& quotient, const WeierstrassCurve& e,
                               const std::vector<long long>& primes) {
  MismatchReport rep;
  for (long long p : primes) {
    long long cq = count_points(quotient, p, 1);
    long long ce = ec_count(e, p, 1);
    rep.counts.push_back({p, cq, ce});
    if (cq != ce && rep.verdict == MismatchVerdict::INCONCLUSIVE) {
      rep.verdict = MismatchVerdict::MISMATCH;
      rep.witness_prime = p;
    }
  }
  return rep;
}

long long torsion_bound(const WeierstrassCurve& e, const std::vector<long long>& primes) {
  std::vector<long long> good;
  for (long long p : primes)
    if (good_reduction(e, p)) good.push_back(p);
  if (good.size() < 2)
    throw std::invalid_argument("torsion bound needs at least two primes of good reduction");
  long long g = 0;
  for (long long p : good) g = std::gcd(g, ec_count(e, p, 1));
  return g;
}

}  // namespace qpt
