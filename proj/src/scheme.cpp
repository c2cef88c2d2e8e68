#include "qpt/scheme.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qpt {

ProjScheme parse_scheme(const std::string& text) {
  std::vector<std::string> lines;
  std::string body;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      // trim
      auto a = line.find_first_not_of(" \t\r");
      if (a == std::string::npos) continue;
      auto b = line.find_last_not_of(" \t\r");
      lines.push_back(line.substr(a, b - a + 1));
    }
  }
  ProjScheme s;
  size_t start = 0;
  if (!lines.empty() && lines[0].rfind("vars:", 0) == 0) {
    std::istringstream vs(lines[0].substr(5));
    std::string v;
    while (std::getline(vs, v, ',')) {
      auto a = v.find_first_not_of(" \t");
      auto b = v.find_last_not_of(" \t");
      if (a != std::string::npos) s.vars.push_back(v.substr(a, b - a + 1));
    }
    start = 1;
  }
  for (size_t i = start; i < lines.size(); i++) body += lines[i] + "\n";
  if (s.vars.empty()) s.vars = detect_variables(body);
  if (s.vars.empty()) throw std::invalid_argument("scheme: no variables found");
  if (s.vars.size() > 8) throw std::invalid_argument("scheme: ambient dimension above 7");
  for (size_t i = start; i < lines.size(); i++) {
    MultiPoly g = parse_multipoly(lines[i], s.vars);
    if (g.zero()) continue;
    if (!g.homogeneous())
      throw std::invalid_argument("scheme: generator is not homogeneous: " + lines[i]);
    s.generators.push_back(std::move(g));
  }
  return s;
}

ProjScheme parse_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scheme file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scheme(buf.str());
}

long long point_budget() {
  if (const char* env = std::getenv("QPT_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return kDefaultPointBudget;
}

namespace {

// generator reduced mod p with coefficients in F_{p^k}
struct GenModP {
  std::vector<std::pair<std::vector<int>, long long>> terms;
};

GenModP reduce_generator(const MultiPoly& g, const Fq& F) {
  GenModP out;
  Int p = F.p();
  for (const auto& [e, c] : g.terms) {
    Int n = num(c) % p, d = den(c) % p;
    if (n < 0) n += p;
    if (d == 0) throw std::invalid_argument("bad reduction: denominator divisible by p");
    long long nn = (long long)n;
    long long dd = (long long)(((den(c) % p) + p) % p);
    long long coef = F.mul(F.from_int(nn), F.inv(F.from_int(dd)));
    if (coef != 0) out.terms.push_back({e, coef});
  }
  return out;
}

long long eval_mod(const GenModP& g, const Fq& F, const std::vector<long long>& x) {
  long long total = 0;
  for (const auto& [e, c] : g.terms) {
    long long t = c;
    for (size_t i = 0; i < e.size(); i++)
      for (int k = 0; k < e[i]; k++) t = F.mul(t, x[i]);
    total = F.add(total, t);
  }
  return total;
}

}  // namespace

long long count_points(const ProjScheme& s, long long p, int k) {
  Fq F(p, k);
  int n1 = (int)s.vars.size();
  // size of P^n(F_q)
  long long ambient = 0, pw = 1;
  for (int i = 0; i < n1; i++) {
    ambient += pw;
    if (pw > (4LL << 40) / F.q()) throw std::runtime_error("point enumeration budget exceeded");
    pw *= F.q();
  }
  if (ambient > point_budget())
    throw std::runtime_error("point enumeration budget exceeded (" + std::to_string(ambient) +
                             " ambient points, budget " + std::to_string(point_budget()) + ")");
  std::vector<GenModP> gens;
  for (const auto& g : s.generators) gens.push_back(reduce_generator(g, F));

  long long count = 0;
  std::vector<long long> x(n1, 0);
  // representatives: first nonzero coordinate equals 1
  for (int pivot = 0; pivot < n1; pivot++) {
    std::fill(x.begin(), x.end(), 0);
    x[pivot] = 1;
    int free_vars = n1 - pivot - 1;
    long long total = 1;
    for (int i = 0; i < free_vars; i++) total *= F.q();
    for (long long idx = 0; idx < total; idx++) {
      long long t = idx;
      for (int i = pivot + 1; i < n1; i++) { x[i] = t % F.q(); t /= F.q(); }
      bool on = true;
      for (const auto& g : gens)
        if (eval_mod(g, F, x) != 0) { on = false; break; }
      if (on) count++;
    }
  }
  return count;
}

Rat LinearInvolution::involution_scalar() const {
  int n = dim();
  if (n == 0) throw std::invalid_argument("empty involution matrix");
  for (const auto& row : matrix)
    if ((int)row.size() != n) throw std::invalid_argument("involution matrix not square");
  std::vector<std::vector<Rat>> sq(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      for (int k = 0; k < n; k++) sq[i][j] += matrix[i][k] * matrix[k][j];
  Rat lambda = sq[0][0];
  if (lambda == 0) throw std::invalid_argument("matrix squared is singular, not scalar");
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      if (sq[i][j] != (i == j ? lambda : Rat(0)))
        throw std::invalid_argument("matrix squared is not a scalar matrix");
  return lambda;
}

namespace {

// express target as a Q-linear combination of the basis polynomials
bool in_span(const std::vector<MultiPoly>& basis, const MultiPoly& target) {
  std::map<std::vector<int>, int> monomials;
  auto index_terms = [&](const MultiPoly& p) {
    for (const auto& [e, c] : p.terms)
      if (monomials.find(e) == monomials.end())
        monomials.emplace(e, (int)monomials.size());
  };
  for (const auto& b : basis) index_terms(b);
  index_terms(target);
  int rows = (int)monomials.size(), cols = (int)basis.size();
  std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(cols + 1, Rat(0)));
  for (int j = 0; j < cols; j++)
    for (const auto& [e, c] : basis[j].terms) A[monomials[e]][j] = c;
  for (const auto& [e, c] : target.terms) A[monomials[e]][cols] = c;
  // Gaussian elimination, consistency test on the augmented column
  int rank_row = 0;
  for (int col = 0; col < cols && rank_row < rows; col++) {
    int piv = -1;
    for (int r = rank_row; r < rows; r++)
      if (A[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(A[rank_row], A[piv]);
    for (int r = 0; r < rows; r++) {
      if (r == rank_row || A[r][col] == 0) continue;
      Rat f = A[r][col] / A[rank_row][col];
      for (int cc = col; cc <= cols; cc++) A[r][cc] -= f * A[rank_row][cc];
    }
    rank_row++;
  }
  for (int r = rank_row; r < rows; r++)
    if (A[r][cols] != 0) return false;
  // rows below rank have zero basis part; any leftover rows with nonzero rhs fail
  for (int r = 0; r < rows; r++) {
    bool all_zero = true;
    for (int c = 0; c < cols; c++)
      if (A[r][c] != 0) { all_zero = false; break; }
    if (all_zero && A[r][cols] != 0) return false;
  }
  return true;
}

}  // namespace

bool LinearInvolution::preserves(const ProjScheme& s) const {
  int n = dim();
  if ((int)s.vars.size() != n)
    throw std::invalid_argument("involution dimension does not match the scheme");
  for (const auto& g : s.generators) {
    MultiPoly h = g.substitute_linear(matrix, n);
    if (!in_span(s.generators, h)) return false;
  }
  return true;
}

LinearInvolution parse_involution(const std::string& text, int dim) {
  // rows separated by ';', entries by ',' — e.g. "1,0;0,-1"
  LinearInvolution iota;
  std::istringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<Rat> r;
    std::istringstream es(row);
    std::string entry;
    while (std::getline(es, entry, ',')) {
      auto a = entry.find_first_not_of(" \t");
      auto b = entry.find_last_not_of(" \t");
      if (a == std::string::npos) throw std::invalid_argument("empty matrix entry");
      std::string tok = entry.substr(a, b - a + 1);
      auto slash = tok.find('/');
      if (slash == std::string::npos) r.push_back(Rat(Int(tok)));
      else r.push_back(Rat(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1))));
    }
    iota.matrix.push_back(std::move(r));
  }
  if ((int)iota.matrix.size() != dim)
    throw std::invalid_argument("involution matrix has wrong size");
  for (const auto& r : iota.matrix)
    if ((int)r.size() != dim) throw std::invalid_argument("involution matrix not square");
  return iota;
}

namespace {

// kernel basis of (M - mu*I), column vectors of length n
std::vector<std::vector<Rat>> eigenspace_basis(const std::vector<std::vector<Rat>>& M, const Rat& mu) {
  int n = (int)M.size();
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) A[i][j] = M[i][j] - (i == j ? mu : Rat(0));
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; col++) {
    int piv = -1;
    for (int r = row; r < n; r++)
      if (A[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(A[row], A[piv]);
    Rat lead = A[row][col];
    for (int c = 0; c < n; c++) A[row][c] /= lead;
    for (int r = 0; r < n; r++) {
      if (r == row || A[r][col] == 0) continue;
      Rat f = A[r][col];
      for (int c = 0; c < n; c++) A[r][c] -= f * A[row][c];
    }
    pivot_col.push_back(col);
    row++;
  }
  std::set<int> pivots(pivot_col.begin(), pivot_col.end());
  std::vector<std::vector<Rat>> basis;
  for (int col = 0; col < n; col++) {
    if (pivots.count(col)) continue;
    std::vector<Rat> v(n, Rat(0));
    v[col] = 1;
    for (size_t r = 0; r < pivot_col.size(); r++) v[pivot_col[r]] = -A[r][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

struct BinaryForm {
  RatPoly poly;  // dehomogenized at second variable = 1
  int hom_degree = 0;
};

// distinct projective roots (over the algebraic closure), squarefree cert
struct RootCount {
  int count = 0;
  bool squarefree = true;
};

RootCount count_binary_roots(const BinaryForm& f) {
  RootCount rc;
  RatPoly sf = squarefree_part(f.poly);
  rc.count = degree(sf);
  rc.squarefree = (degree(sf) == degree(f.poly));
  int inf_mult = f.hom_degree - degree(f.poly);
  if (inf_mult > 0) rc.count += 1;
  if (inf_mult > 1) rc.squarefree = false;
  return rc;
}

BinaryForm binary_gcd(const std::vector<BinaryForm>& forms) {
  BinaryForm g;
  bool started = false;
  int inf_mult = 1 << 20;
  for (const auto& f : forms) {
    if (degree(f.poly) < 0 && f.hom_degree == 0) continue;
    if (!started) { g.poly = f.poly; started = true; }
    else g.poly = poly_gcd(g.poly, f.poly);
    inf_mult = std::min(inf_mult, f.hom_degree - degree(f.poly));
  }
  if (!started) { g.hom_degree = -1; return g; }  // all zero
  g.hom_degree = degree(g.poly) + std::max(0, inf_mult);
  return g;
}

// resultant of two ternary forms with respect to variable `elim`
BinaryForm ternary_resultant(const MultiPoly& f, const MultiPoly& g, int elim) {
  int keep0 = -1, keep1 = -1;
  for (int i = 0; i < 3; i++) {
    if (i == elim) continue;
    (keep0 < 0 ? keep0 : keep1) = i;
  }
  int df = f.total_degree(), dg = g.total_degree();
  // coefficients of elim^j are binary forms; evaluate the resultant by
  // interpolation: deg(Res) = df*dg in the kept variables
  int dr = df * dg;
  // sample at keep0 = i, keep1 = 1 for enough i, plus the point at infinity,
  // then interpolate the dehomogenized polynomial of degree <= dr
  auto univariate_at = [&](const Rat& a, const Rat& b, const MultiPoly& h) {
    RatPoly u;
    for (const auto& [e, c] : h.terms) {
      Rat v = c;
      for (int k = 0; k < e[keep0]; k++) v *= a;
      for (int k = 0; k < e[keep1]; k++) v *= b;
      int j = e[elim];
      if ((int)u.size() <= j) u.resize(j + 1, Rat(0));
      u[j] += v;
    }
    return trim(u);
  };
  std::vector<Rat> xs, ys;
  for (int i = 0; i <= dr; i++) {
    Rat a = i;
    RatPoly uf = univariate_at(a, Rat(1), f);
    RatPoly ug = univariate_at(a, Rat(1), g);
    // pad to full elim-degree so the Sylvester matrix has the right shape:
    // a drop in leading coefficient is genuine content of the resultant
    xs.push_back(a);
    ys.push_back(rat_resultant_padded(uf, ug, df, dg));
  }
  // Lagrange interpolation
  RatPoly res;
  for (int i = 0; i <= dr; i++) {
    RatPoly li = {Rat(1)};
    Rat denom = 1;
    for (int j = 0; j <= dr; j++) {
      if (j == i) continue;
      li = mul(li, {-xs[j], Rat(1)});
      denom *= xs[i] - xs[j];
    }
    res = add(res, scale(li, ys[i] / denom));
  }
  BinaryForm out;
  out.poly = trim(res);
  out.hom_degree = dr;
  return out;
}

}  // namespace

FixedLocusReport fixed_locus(const ProjScheme& s, const LinearInvolution& iota) {
  Rat lambda = iota.involution_scalar();
  if (!iota.preserves(s))
    throw std::invalid_argument("involution does not preserve the ideal");
  if (!is_square(lambda))
    throw std::invalid_argument("involution scalar is not a rational square; eigenvalues irrational");
  Rat mu(*exact_sqrt(num(lambda)), *exact_sqrt(den(lambda)));
  int n = iota.dim();
  FixedLocusReport rep;
  for (int sgn : {+1, -1}) {
    Rat ev = sgn > 0 ? mu : -mu;
    auto basis = eigenspace_basis(iota.matrix, ev);
    int m = (int)basis.size();  // affine dimension of the eigenspace
    if (m == 0) { rep.per_eigenspace.push_back(0); continue; }
    if (m >= n)
      throw std::invalid_argument("involution fixes all of projective space; fixed locus is the whole curve");
    // substitution matrix: old coordinate i = sum_j basis[j][i] * y_j
    std::vector<std::vector<Rat>> sub(n, std::vector<Rat>(m, Rat(0)));
    for (int j = 0; j < m; j++)
      for (int i = 0; i < n; i++) sub[i][j] = basis[j][i];
    std::vector<MultiPoly> restricted;
    for (const auto& g : s.generators) {
      MultiPoly h = g.substitute_linear(sub, m);
      if (!h.zero()) restricted.push_back(std::move(h));
    }
    int here = 0;
    if (m == 1) {
      // a single point of P^n: on the curve iff every generator vanished
      here = restricted.empty() ? 1 : 0;
    } else if (m == 2) {
      if (restricted.empty())
        throw std::runtime_error("fixed locus contains a line: positive-dimensional");
      std::vector<BinaryForm> forms;
      for (const auto& h : restricted) {
        BinaryForm bf;
        bf.poly = binary_dehomogenize(h, &bf.hom_degree);
        forms.push_back(std::move(bf));
      }
      BinaryForm g = binary_gcd(forms);
      RootCount rc = count_binary_roots(g);
      if (!rc.squarefree)
        throw std::runtime_error("fixed point not transverse (multiple root in eigenline restriction)");
      here = rc.count;
    } else if (m == 3) {
      if ((int)restricted.size() < 2)
        throw std::runtime_error("fixed locus in an eigenplane is positive-dimensional");
      // eliminate each variable in turn; accept the first projection whose
      // combined resultant is squarefree (distinct projections of the
      // transverse intersection points)
      int best = -1;
      bool any_nonzero = false;
      for (int elim = 2; elim >= 0; elim--) {
        std::vector<BinaryForm> res_forms;
        bool degenerate = false;
        for (size_t a = 0; a + 1 < restricted.size() && !degenerate; a++)
          for (size_t b = a + 1; b < restricted.size(); b++) {
            BinaryForm r = ternary_resultant(restricted[a], restricted[b], elim);
            if (degree(r.poly) < 0 && r.hom_degree > 0) { degenerate = true; break; }
            res_forms.push_back(std::move(r));
          }
        if (degenerate || res_forms.empty()) continue;
        BinaryForm g = binary_gcd(res_forms);
        if (g.hom_degree < 0) continue;
        any_nonzero = true;
        RootCount rc = count_binary_roots(g);
        if (rc.squarefree) { best = rc.count; break; }
      }
      if (!any_nonzero)
        throw std::runtime_error("fixed locus in an eigenplane is positive-dimensional");
      if (best < 0)
        throw std::runtime_error("fixed point not transverse (no squarefree eliminant found)");
      here = best;
    } else {
      throw std::runtime_error("eigenspace of projective dimension >= 3: fixed locus not handled");
    }
    rep.per_eigenspace.push_back(here);
    rep.count += here;
  }
  return rep;
}

int quotient_genus(int genus, int fixed_points) {
  long long numer = 2LL * genus - 2 - fixed_points + 4;
  if (numer < 0 || numer % 4 != 0)
    throw std::invalid_argument("inconsistent genus / fixed-point data for a double cover");
  return (int)(numer / 4);
}

}  // namespace qpt
