#include "qpt/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qpt {

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  }
  return d;
}

bool MultiPoly::homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    int td = std::accumulate(e.begin(), e.end(), 0);
    if (d == -1) d = td;
    if (td != d) return false;
  }
  return true;
}

MultiPoly& MultiPoly::cleanup() {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0) it = terms.erase(it); else ++it;
  }
  return *this;
}

Rat MultiPoly::eval(const std::vector<Rat>& x) const {
  if ((int)x.size() != nvars) throw std::invalid_argument("eval: wrong arity");
  Rat total = 0;
  for (const auto& [e, c] : terms) {
    Rat t = c;
    for (int i = 0; i < nvars; i++)
      for (int k = 0; k < e[i]; k++) t *= x[i];
    total += t;
  }
  return total;
}

MultiPoly mp_add(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r.nvars = std::max(a.nvars, b.nvars);
  for (const auto& [e, c] : b.terms) r.terms[e] += c;
  return r.cleanup();
}

MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  r.nvars = std::max(a.nvars, b.nvars);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(r.nvars, 0);
      for (int i = 0; i < (int)ea.size(); i++) e[i] += ea[i];
      for (int i = 0; i < (int)eb.size(); i++) e[i] += eb[i];
      r.terms[e] += ca * cb;
    }
  return r.cleanup();
}

MultiPoly mp_scale(const MultiPoly& a, const Rat& c) {
  MultiPoly r = a;
  for (auto& [e, v] : r.terms) v *= c;
  return r.cleanup();
}

MultiPoly MultiPoly::substitute_linear(const std::vector<std::vector<Rat>>& sub,
                                       int new_nvars) const {
  if ((int)sub.size() != nvars) throw std::invalid_argument("substitute_linear: wrong arity");
  // linear forms for each old variable, as MultiPoly in the new variables
  std::vector<MultiPoly> forms(nvars);
  for (int i = 0; i < nvars; i++) {
    forms[i].nvars = new_nvars;
    for (int j = 0; j < new_nvars; j++) {
      if (sub[i][j] == 0) continue;
      std::vector<int> e(new_nvars, 0);
      e[j] = 1;
      forms[i].terms[e] = sub[i][j];
    }
  }
  MultiPoly out;
  out.nvars = new_nvars;
  for (const auto& [e, c] : terms) {
    MultiPoly t;
    t.nvars = new_nvars;
    t.terms[std::vector<int>(new_nvars, 0)] = c;
    for (int i = 0; i < nvars; i++)
      for (int k = 0; k < e[i]; k++) t = mp_mul(t, forms[i]);
    out = mp_add(out, t);
  }
  return out.cleanup();
}

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  explicit Lexer(const std::string& str) : s(str) {}
  void skip_ws() { while (pos < s.size() && std::isspace((unsigned char)s[pos])) pos++; }
  bool done() { skip_ws(); return pos >= s.size(); }
  char peek() { skip_ws(); return pos < s.size() ? s[pos] : '\0'; }
};

Int parse_integer(Lexer& lx) {
  lx.skip_ws();
  size_t start = lx.pos;
  while (lx.pos < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.pos])) lx.pos++;
  if (lx.pos == start) throw std::invalid_argument("expected digits in polynomial");
  return Int(lx.s.substr(start, lx.pos - start));
}

// try to read one variable name from the fixed list (longest match first)
int match_variable(Lexer& lx, const std::vector<std::string>& vars) {
  lx.skip_ws();
  int best = -1;
  size_t best_len = 0;
  for (int i = 0; i < (int)vars.size(); i++) {
    const std::string& v = vars[i];
    if (v.size() > best_len && lx.s.compare(lx.pos, v.size(), v) == 0) {
      best = i;
      best_len = v.size();
    }
  }
  if (best >= 0) lx.pos += best_len;
  return best;
}

}  // namespace

MultiPoly parse_multipoly(const std::string& text, const std::vector<std::string>& vars) {
  MultiPoly out;
  out.nvars = (int)vars.size();
  Lexer lx(text);
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = (c == '-') ? -1 : 1;
      lx.pos++;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' between terms");
    }
    first = false;
    // term: optional rational coefficient then variable powers
    Rat coef = sign;
    bool saw_factor = false;
    if (std::isdigit((unsigned char)lx.peek())) {
      Int num = parse_integer(lx);
      Int den = 1;
      if (lx.peek() == '/') {
        lx.pos++;
        den = parse_integer(lx);
        if (den == 0) throw std::invalid_argument("zero denominator");
      }
      coef *= Rat(num, den);
      saw_factor = true;
      if (lx.peek() == '*') lx.pos++;
    }
    std::vector<int> e(out.nvars, 0);
    while (true) {
      int vi = match_variable(lx, vars);
      if (vi < 0) break;
      saw_factor = true;
      int pw = 1;
      if (lx.peek() == '^') {
        lx.pos++;
        pw = (int)parse_integer(lx);
      }
      e[vi] += pw;
      if (lx.peek() == '*') lx.pos++;
    }
    if (!saw_factor) throw std::invalid_argument("empty term in polynomial");
    out.terms[e] += coef;
  }
  return out.cleanup();
}

std::vector<std::string> detect_variables(const std::string& text) {
  // subscripted style x_1..x_9 / x1..x9 takes priority when present
  std::set<int> subs;
  for (size_t i = 0; i + 1 < text.size(); i++) {
    if (text[i] != 'x') continue;
    size_t j = i + 1;
    if (j < text.size() && text[j] == '_') j++;
    if (j < text.size() && std::isdigit((unsigned char)text[j])) subs.insert(text[j] - '0');
  }
  if (!subs.empty()) {
    int hi = *subs.rbegin();
    bool underscore = text.find("x_") != std::string::npos;
    std::vector<std::string> vars;
    for (int i = 1; i <= hi; i++)
      vars.push_back((underscore ? "x_" : "x") + std::to_string(i));
    return vars;
  }
  static const std::vector<std::string> pool = {"x", "y", "z", "w", "t", "u", "r", "s"};
  std::vector<std::string> vars;
  for (const auto& v : pool)
    if (text.find(v) != std::string::npos) vars.push_back(v);
  // keep the canonical prefix: drop trailing unused names but keep earlier
  // ones so e.g. "x^2+z^2" still lives in (x,y,z)
  int last = -1;
  for (size_t i = 0; i < pool.size(); i++)
    if (text.find(pool[i]) != std::string::npos) last = (int)i;
  vars.assign(pool.begin(), pool.begin() + (last + 1));
  return vars;
}

RatPoly binary_dehomogenize(const MultiPoly& p, int* hom_degree) {
  if (p.nvars != 2) throw std::invalid_argument("binary_dehomogenize needs 2 variables");
  if (!p.homogeneous()) throw std::invalid_argument("form is not homogeneous");
  int d = p.total_degree();
  if (hom_degree) *hom_degree = d;
  RatPoly out(d >= 0 ? d + 1 : 0, Rat(0));
  for (const auto& [e, c] : p.terms) out[e[0]] = c;
  return trim(out);
}

}  // namespace qpt
