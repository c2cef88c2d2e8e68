#include "qpt/forms.hpp"

#include "qpt/multipoly.hpp"

#include <algorithm>
#include <functional>

namespace qpt {

namespace {

// integer in the same square class as the nonzero rational
Int square_class(const Rat& x) { return num(x) * den(x); }

bool is_square_in_qp(Int n, const Int& p) {
  if (n == 0) return true;
  long long v = p_valuation(n, p);
  if (v % 2) return false;
  Int u = ((n % p) + p) % p;
  if (p == 2) {
    // unit square mod 8; n is exact so this decides the class
    Int m = ((n % 8) + 8) % 8;
    return m == 1;
  }
  return legendre(u, p) == 1;
}

int parity_pm(Int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

std::vector<Int> prime_factors_of(Int n) {
  std::vector<Int> ps;
  n = abs(n);
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
  Int x = square_class(a), y = square_class(b);
  if (v.is_real()) return (x < 0 && y < 0) ? -1 : 1;
  const Int& p = v.p;
  long long alpha = p_valuation(x, p);
  long long beta = p_valuation(y, p);
  Int u = x, w = y;  // units at p now
  if (p == 2) {
    auto eps = [](const Int& t) { return ((t - 1) / 2) % 2 != 0 ? 1 : 0; };
    auto omega = [](const Int& t) { return ((t * t - 1) / 8) % 2 != 0 ? 1 : 0; };
    long long exp = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    return parity_pm(exp);
  }
  long long eps_p = ((p - 1) / 2).convert_to<long long>();
  int sym = parity_pm(alpha * beta * eps_p);
  if (beta % 2) sym *= legendre(u, p);
  if (alpha % 2) sym *= legendre(w, p);
  return sym;
}

Rat QuadraticForm::eval(const std::vector<Rat>& x) const {
  Rat out = 0;
  int n = vars();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out += gram[i][j] * x[i] * x[j];
  return out;
}

Rat QuadraticForm::det() const {
  auto m = gram;
  int n = vars();
  Rat d = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (m[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (int row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rat f = m[row][col] / m[col][col];
      for (int j = col; j < n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  return d;
}

std::vector<Int> QuadraticForm::diagonal_squarefree() const {
  auto m = gram;
  int n = vars();
  std::vector<Int> diag;
  std::vector<int> live(n);
  for (int i = 0; i < n; ++i) live[i] = i;
  // symmetric congruence elimination; pivot on the smallest nonzero diagonal
  while (!live.empty()) {
    int pick = -1;
    Rat best;
    for (int idx : live) {
      if (m[idx][idx] == 0) continue;
      Rat h = abs(num(m[idx][idx])) + abs(den(m[idx][idx]));
      if (pick < 0 || h < best) {
        pick = idx;
        best = h;
      }
    }
    if (pick < 0) {
      // all diagonal entries vanish; create one if any off-diagonal survives
      int a = -1, b = -1;
      for (size_t s = 0; s < live.size() && a < 0; ++s)
        for (size_t t = s + 1; t < live.size(); ++t)
          if (m[live[s]][live[t]] != 0) {
            a = live[s];
            b = live[t];
            break;
          }
      if (a < 0) break;  // form is zero on the remaining block
      for (int j = 0; j < n; ++j) m[a][j] += m[b][j];
      for (int i = 0; i < n; ++i) m[i][a] += m[i][b];
      continue;
    }
    diag.push_back(squarefree_part(square_class(m[pick][pick])));
    for (int r : live) {
      if (r == pick || m[r][pick] == 0) continue;
      Rat f = m[r][pick] / m[pick][pick];
      for (int j = 0; j < n; ++j) m[r][j] -= f * m[pick][j];
      for (int i = 0; i < n; ++i) m[i][r] -= f * m[i][pick];
    }
    live.erase(std::find(live.begin(), live.end(), pick));
  }
  return diag;
}

bool diagonal_isotropic_at(const std::vector<Int>& diag, const Place& v) {
  if (diag.size() == 3) {
    Rat a(diag[0]), b(diag[1]), c(diag[2]);
    return hilbert_symbol(-a * c, -b * c, v) == 1;
  }
  if (diag.size() == 4) {
    if (v.is_real()) {
      bool pos = false, neg = false;
      for (const Int& d : diag) (d > 0 ? pos : neg) = true;
      return pos && neg;
    }
    Int disc = diag[0] * diag[1] * diag[2] * diag[3];
    if (!is_square_in_qp(disc, v.p)) return true;
    int hasse = 1;
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = i + 1; j < 4; ++j) hasse *= hilbert_symbol(Rat(diag[i]), Rat(diag[j]), v);
    return hasse == hilbert_symbol(Rat(-1), Rat(-1), v);
  }
  throw std::invalid_argument("diagonal_isotropic_at: rank 3 or 4 only");
}

namespace {

std::vector<Place> relevant_places(const std::vector<Int>& diag) {
  std::vector<Place> places{{0}, {2}};
  Int prod = 1;
  for (const Int& d : diag) prod *= d;
  for (const Int& p : prime_factors_of(prod))
    if (p != 2) places.push_back({p});
  return places;
}

std::optional<std::vector<Rat>> witness_search(const QuadraticForm& q, long long height) {
  int n = q.vars();
  std::vector<long long> x(n, 0);
  std::vector<Rat> pt(n);
  for (long long h = 1; h <= height; ++h) {
    // points with max |coord| == h
    std::function<std::optional<std::vector<Rat>>(int, bool)> rec =
        [&](int i, bool hit) -> std::optional<std::vector<Rat>> {
      if (i == n) {
        if (!hit) return std::nullopt;
        for (int k = 0; k < n; ++k) pt[k] = x[k];
        if (q.eval(pt) == 0) return pt;
        return std::nullopt;
      }
      for (long long v = -h; v <= h; ++v) {
        x[i] = v;
        if (auto r = rec(i + 1, hit || v == h || v == -h)) return r;
      }
      return std::nullopt;
    };
    if (auto r = rec(0, false)) return r;
  }
  return std::nullopt;
}

}  // namespace

SolubilityVerdict conic_has_rational_point(const QuadraticForm& q, long long search_height) {
  if (q.vars() != 3) throw std::invalid_argument("conic_has_rational_point: ternary form required");
  if (!q.nondegenerate()) throw std::invalid_argument("conic_has_rational_point: degenerate form");
  std::vector<Int> diag = q.diagonal_squarefree();
  SolubilityVerdict verdict;
  for (const Place& v : relevant_places(diag)) {
    if (!diagonal_isotropic_at(diag, v)) {
      verdict.soluble = false;
      verdict.obstruction = v;
      return verdict;
    }
  }
  verdict.soluble = true;
  verdict.witness = witness_search(q, search_height);
  return verdict;
}

SolubilityVerdict quaternary_isotropic(const QuadraticForm& q) {
  if (q.vars() != 4) throw std::invalid_argument("quaternary_isotropic: rank 4 required");
  if (!q.nondegenerate()) throw std::invalid_argument("quaternary_isotropic: degenerate form");
  std::vector<Int> diag = q.diagonal_squarefree();
  SolubilityVerdict verdict;
  for (const Place& v : relevant_places(diag)) {
    if (!diagonal_isotropic_at(diag, v)) {
      verdict.soluble = false;
      verdict.obstruction = v;
      return verdict;
    }
  }
  verdict.soluble = true;
  verdict.witness = witness_search(q, 30);
  return verdict;
}

QuadraticForm parse_ternary_form(const std::string& text) {
  // accept any three of x,y,z,w (e.g. the paper writes conics in x,y,w)
  std::vector<std::string> vars = detect_variables(text);
  MultiPoly p = parse_multipoly(text, vars);
  int n = (int)vars.size();
  std::vector<int> used;
  for (const auto& [e, c] : p.terms)
    for (int k = 0; k < n; k++)
      if (e[k] > 0 && std::find(used.begin(), used.end(), k) == used.end()) used.push_back(k);
  std::sort(used.begin(), used.end());
  if (used.size() > 3) throw std::invalid_argument("ternary form has more than 3 variables");
  while (used.size() < 3) used.push_back(-(int)used.size() - 1);  // pad with unused slots
  auto slot = [&](int k) {
    for (int s = 0; s < 3; s++)
      if (used[s] == k) return s;
    return -1;
  };
  QuadraticForm q;
  q.gram.assign(3, std::vector<Rat>(3, Rat(0)));
  for (const auto& [e, c] : p.terms) {
    int i = -1, j = -1, deg = 0;
    for (int k = 0; k < n; k++) {
      deg += e[k];
      if (e[k] == 2) i = j = slot(k);
      else if (e[k] == 1) (i < 0 ? i : j) = slot(k);
    }
    if (deg != 2 || j < 0)
      throw std::invalid_argument("ternary form must be homogeneous of degree 2");
    if (i == j) q.gram[i][i] += c;
    else { q.gram[i][j] += c / 2; q.gram[j][i] += c / 2; }
  }
  return q;
}

}  // namespace qpt
