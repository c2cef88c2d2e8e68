#include "qpt/hyperell.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qpt {

int HyperellipticModel::genus() const {
  int d = degree(f);
  if (d < 1) throw std::invalid_argument("constant right-hand side");
  return (d - 1) / 2;
}

namespace {

// recursive-descent parser for univariate integer/rational expressions in x
struct ExprParser {
  std::string s;
  size_t pos = 0;
  explicit ExprParser(std::string str) : s(std::move(str)) {}

  void ws() { while (pos < s.size() && std::isspace((unsigned char)s[pos])) pos++; }
  char peek() { ws(); return pos < s.size() ? s[pos] : '\0'; }
  bool eat(char c) { if (peek() == c) { pos++; return true; } return false; }

  RatPoly parse() {
    RatPoly p = sum();
    if (peek() != '\0') throw std::invalid_argument("trailing input in polynomial");
    return p;
  }

  RatPoly sum() {
    RatPoly acc = eat('-') ? scale(product(), Rat(-1)) : product();
    while (true) {
      if (eat('+')) acc = add(acc, product());
      else if (eat('-')) acc = sub(acc, product());
      else return acc;
    }
  }

  RatPoly product() {
    RatPoly acc = power();
    while (true) {
      char c = peek();
      if (c == '*') { pos++; acc = mul(acc, power()); }
      else if (c == '(' || c == 'x' || std::isdigit((unsigned char)c))
        acc = mul(acc, power());  // implicit multiplication
      else return acc;
    }
  }

  RatPoly power() {
    RatPoly base = atom();
    if (eat('^')) {
      long long e = integer();
      RatPoly out = {Rat(1)};
      for (long long i = 0; i < e; i++) out = mul(out, base);
      return out;
    }
    return base;
  }

  RatPoly atom() {
    char c = peek();
    if (c == '(') {
      pos++;
      RatPoly inner = sum();
      if (!eat(')')) throw std::invalid_argument("missing ')'");
      return inner;
    }
    if (c == 'x') { pos++; return {Rat(0), Rat(1)}; }
    if (std::isdigit((unsigned char)c)) {
      Int n = big_integer();
      if (eat('/')) return {Rat(n, big_integer())};
      return {Rat(n)};
    }
    throw std::invalid_argument("unexpected character in polynomial");
  }

  long long integer() {
    ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) pos++;
    if (pos == start) throw std::invalid_argument("expected an integer");
    return std::stoll(s.substr(start, pos - start));
  }

  Int big_integer() {
    ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) pos++;
    if (pos == start) throw std::invalid_argument("expected an integer");
    return Int(s.substr(start, pos - start));
  }
};

}  // namespace

HyperellipticModel parse_hyperelliptic(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("model needs 'y^2 = f(x)'");
  std::string lhs = text.substr(0, eq);
  lhs.erase(std::remove_if(lhs.begin(), lhs.end(),
                           [](char c) { return std::isspace((unsigned char)c); }),
            lhs.end());
  if (lhs != "y^2")
    throw std::invalid_argument("left side must be y^2");
  ExprParser ep(text.substr(eq + 1));
  HyperellipticModel m{ep.parse()};
  int d = degree(m.f);
  if (d < 1 || d > 6) throw std::invalid_argument("degree of f must be between 1 and 6");
  if (!is_squarefree(m.f)) throw std::invalid_argument("f must be squarefree");
  return m;
}

namespace {

// ---- real place ----
bool soluble_over_r(const RatPoly& f) {
  if (degree(f) % 2 == 1) return true;       // odd degree: real branch point
  if (lead(f) > 0) return true;              // positive for large x
  if (real_root_count(f) > 0) return true;   // y = 0 point
  return eval(f, Rat(0)) >= 0;               // constant sign otherwise
}

// ---- p-adic places ----

std::vector<Int> integer_model(const RatPoly& f) {
  // clear denominators by the square of their lcm (y-rescaling), then strip
  // square content: both operations preserve local solubility everywhere
  Int L = 1;
  for (const Rat& c : f) L = boost::multiprecision::lcm(L, den(c));
  std::vector<Int> g;
  for (const Rat& c : f) g.push_back(num(c) * L * (L / den(c)));
  Int content = 0;
  for (const Int& c : g) content = boost::multiprecision::gcd(content, c);
  // divide by the largest square dividing the content
  if (content != 0) {
    Int sf = squarefree_part(content);
    Int sq = *exact_sqrt(content / sf);
    for (Int& c : g) c /= sq * sq;
  }
  return g;
}

Int eval_int(const std::vector<Int>& f, const Int& x) {
  Int v = 0;
  for (int i = (int)f.size() - 1; i >= 0; i--) v = v * x + f[i];
  return v;
}

std::vector<Int> derivative_int(const std::vector<Int>& f) {
  std::vector<Int> d;
  for (size_t i = 1; i < f.size(); i++) d.push_back(Int(i) * f[i]);
  return d;
}

bool unit_is_square(const Int& u, const Int& p) {
  if (p == 2) {
    Int r = u % 8;
    if (r < 0) r += 8;
    return r == 1;
  }
  return legendre(u, p) == 1;
}

// does some x = c + p^k * Z_p make f(x) a square in Q_p?
bool digit_search(const std::vector<Int>& f, const std::vector<Int>& fp,
                  const Int& p, const Int& c, int k, int depth) {
  Int value = eval_int(f, c);
  if (value == 0) return true;  // rational root: (c, 0) is a point
  Int v_copy = value;
  long long v = p_valuation(v_copy, p);  // v_copy becomes the unit part
  int slack = (p == 2) ? 3 : 1;
  if (v <= k - slack) {
    // the valuation and the relevant unit class are constant on this branch
    return v % 2 == 0 && unit_is_square(v_copy, p);
  }
  Int dval = eval_int(fp, c);
  if (dval != 0) {
    Int d_copy = dval;
    long long dv = p_valuation(d_copy, p);
    if (v > 2 * dv) return true;  // Hensel: a zero of f lies in this branch
  }
  if (depth <= 0)
    throw std::logic_error("local solubility recursion exceeded its depth bound");
  Int step = int_pow(p, (unsigned)k);
  for (Int t = 0; t < p; t++)
    if (digit_search(f, fp, p, c + t * step, k + 1, depth - 1)) return true;
  return false;
}

bool soluble_at_p(const std::vector<Int>& f, const Int& p) {
  std::vector<Int> fp = derivative_int(f);
  // generous depth bound: branches die once the valuation stabilizes, which
  // is controlled by v_p(Res(f, f'))
  RatPoly frat, fprat;
  for (const Int& c : f) frat.push_back(Rat(c));
  for (const Int& c : fp) fprat.push_back(Rat(c));
  Rat res = rat_resultant(trim(frat), trim(fprat));
  long long cap = 16;
  if (res != 0) {
    Int r = num(res);
    cap += 2 * p_valuation(r, p);
  }
  // x in Z_p
  for (Int c = 0; c < p; c++)
    if (digit_search(f, fp, p, c, 1, (int)cap)) return true;
  // x with negative valuation: x = 1/u with u in p Z_p, after rescaling y
  // by u^ceil(d/2): w^2 = u^(2 ceil(d/2)) f(1/u)
  int d = (int)f.size() - 1;
  int dd = 2 * ((d + 1) / 2);
  std::vector<Int> rev(dd + 1, Int(0));
  for (int i = 0; i <= d; i++) rev[dd - i] = f[i];
  std::vector<Int> revp = derivative_int(rev);
  return digit_search(rev, revp, p, Int(0), 1, (int)cap);
}

}  // namespace

bool hyperelliptic_soluble_at(const HyperellipticModel& m, const Place& v) {
  if (v.is_real()) return soluble_over_r(m.f);
  return soluble_at_p(integer_model(m.f), v.p);
}

LocalSolubilityReport hyperelliptic_everywhere_locally_soluble(const HyperellipticModel& m) {
  if (!is_squarefree(m.f)) throw std::invalid_argument("f must be squarefree");
  LocalSolubilityReport rep;
  std::vector<Place> places{Place{0}, Place{2}};
  Rat disc = discriminant(m.f);
  Int dn = num(disc) * den(disc);
  for (const Int& p : prime_factors_of(dn))
    if (p != 2) places.push_back(Place{p});
  std::sort(places.begin() + 2, places.end(),
            [](const Place& a, const Place& b) { return a.p < b.p; });
  for (const Place& v : places) {
    rep.checked.push_back(v);
    if (!hyperelliptic_soluble_at(m, v)) {
      rep.soluble = false;
      rep.obstruction = v;
      return rep;
    }
  }
  return rep;
}

}  // namespace qpt
