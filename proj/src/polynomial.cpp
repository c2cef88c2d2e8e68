#include "qpt/polynomial.hpp"

#include <algorithm>

namespace qpt {

RatPoly trim(RatPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

Rat lead(const RatPoly& p) { return p.empty() ? Rat(0) : p.back(); }

RatPoly add(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(std::move(out));
}

RatPoly sub(const RatPoly& a, const RatPoly& b) { return add(a, scale(b, Rat(-1))); }

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(std::move(out));
}

RatPoly scale(const RatPoly& a, const Rat& c) {
  if (c == 0) return {};
  RatPoly out = a;
  for (Rat& x : out) x *= c;
  return out;
}

Rat eval(const RatPoly& p, const Rat& x) {
  Rat acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly derivative(const RatPoly& p) {
  if (p.size() < 2) return {};
  RatPoly out(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * Rat(static_cast<int>(i));
  return out;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  RatPoly rem = a, quot;
  int db = degree(b);
  if (degree(a) >= db) quot.assign(a.size() - b.size() + 1, Rat(0));
  while (degree(rem) >= db) {
    Rat c = lead(rem) / lead(b);
    int shift = degree(rem) - db;
    quot[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[i + shift] -= c * b[i];
    rem = trim(std::move(rem));
  }
  return {trim(std::move(quot)), rem};
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(a, Rat(1) / lead(a));
  return a;
}

RatPoly squarefree_part(const RatPoly& p) {
  if (degree(p) < 1) return p;
  RatPoly g = poly_gcd(p, derivative(p));
  return divmod(p, g).first;
}

bool is_squarefree(const RatPoly& p) { return degree(poly_gcd(p, derivative(p))) < 1; }

std::vector<Int> primitive_integer(const RatPoly& p, Rat* content) {
  Int denom = 1;
  for (const Rat& c : p) denom = lcm(denom, den(c));
  std::vector<Int> scaled;
  scaled.reserve(p.size());
  Int g = 0;
  for (const Rat& c : p) {
    Int v = num(c) * (denom / den(c));
    scaled.push_back(v);
    g = gcd(g, v);
  }
  if (g == 0) g = 1;
  Int sign = !p.empty() && p.back() < 0 ? -1 : 1;
  g *= sign;
  for (Int& v : scaled) v /= g;
  if (content) *content = Rat(g, denom);
  return scaled;
}

Int resultant(const RatPoly& a, const RatPoly& b, Int* denominator_scale) {
  // Sylvester determinant over Q via fraction-free Bareiss on the scaled
  // integer matrix; returns the integer resultant of the primitive parts
  // times content powers folded into denominator_scale when requested.
  Rat r = rat_resultant(a, b);
  if (denominator_scale) {
    *denominator_scale = den(r);
    return num(r);
  }
  if (den(r) != 1) throw std::logic_error("resultant: unexpected denominator");
  return num(r);
}

static Rat rat_pow(const Rat& base, int e) {
  Rat r = 1;
  for (int i = 0; i < e; i++) r *= base;
  return r;
}

Rat rat_resultant(const RatPoly& a, const RatPoly& b) {
  return rat_resultant_padded(a, b, degree(a), degree(b));
}

Rat rat_resultant_padded(const RatPoly& a, const RatPoly& b, int m, int n) {
  if (m < degree(a) || n < degree(b))
    throw std::invalid_argument("resultant: formal degree below actual degree");
  if (m < 0 || n < 0) return 0;
  auto coef = [](const RatPoly& p, int i) { return i <= degree(p) ? p[i] : Rat(0); };
  if (m == 0) return rat_pow(coef(a, 0), n);
  if (n == 0) return rat_pow(coef(b, 0), m);
  int size = m + n;
  std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = coef(a, m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = coef(b, n - j);
  // Gaussian elimination over Q
  Rat det = 1;
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int row = col; row < size; ++row)
      if (s[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(s[pivot], s[col]);
      det = -det;
    }
    det *= s[col][col];
    Rat inv = Rat(1) / s[col][col];
    for (int row = col + 1; row < size; ++row) {
      if (s[row][col] == 0) continue;
      Rat f = s[row][col] * inv;
      for (int j = col; j < size; ++j) s[row][j] -= f * s[col][j];
    }
  }
  return det;
}

Rat discriminant(const RatPoly& p) {
  int d = degree(p);
  if (d < 1) throw std::invalid_argument("discriminant: degree >= 1 required");
  Rat res = rat_resultant(p, derivative(p));
  Rat disc = res / lead(p);
  if ((d * (d - 1) / 2) % 2) disc = -disc;
  return disc;
}

int real_root_count(const RatPoly& p) {
  RatPoly sf = squarefree_part(p);
  if (degree(sf) < 1) return 0;
  std::vector<RatPoly> chain{sf, derivative(sf)};
  while (degree(chain.back()) > 0) {
    RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    chain.push_back(scale(r, Rat(-1)));
  }
  auto signs_at_inf = [&](int dir) {
    int changes = 0, prev = 0;
    for (const RatPoly& q : chain) {
      if (q.empty()) continue;
      Rat l = lead(q);
      int sgn = (l > 0 ? 1 : -1);
      if (dir < 0 && degree(q) % 2 == 1) sgn = -sgn;
      if (prev != 0 && sgn != prev) ++changes;
      prev = sgn;
    }
    return changes;
  };
  return signs_at_inf(-1) - signs_at_inf(+1);
}

std::vector<Rat> rational_roots(const RatPoly& p) {
  std::vector<Rat> roots;
  RatPoly q = trim(p);
  if (q.empty()) throw std::invalid_argument("rational_roots of zero polynomial");
  // strip x = 0 roots
  size_t shift = 0;
  while (shift < q.size() && q[shift] == 0) ++shift;
  if (shift > 0) {
    roots.push_back(0);
    q.erase(q.begin(), q.begin() + shift);
  }
  if (degree(q) < 1) return roots;
  std::vector<Int> z = primitive_integer(q);
  Int a0 = abs(z.front()), an = abs(z.back());
  auto divs = [](const Int& n) {
    std::vector<Int> out;
    for (Int d = 1; d * d <= n; ++d)
      if (n % d == 0) {
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
      }
    return out;
  };
  for (const Int& r : divs(a0))
    for (const Int& s : divs(an)) {
      if (gcd(r, s) != 1) continue;
      for (int sign : {1, -1}) {
        Rat cand(sign * r, s);
        if (eval(q, cand) == 0) roots.push_back(cand);
      }
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace qpt
