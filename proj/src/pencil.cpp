#include "qpt/pencil.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qpt {

namespace {

const std::vector<std::string> kVars = {"x", "y", "z", "w"};

Rat det_n(std::vector<std::vector<Rat>> m) {
  int n = (int)m.size();
  Rat det = 1;
  for (int col = 0; col < n; col++) {
    int piv = -1;
    for (int r = col; r < n; r++)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != col) { std::swap(m[piv], m[col]); det = -det; }
    det *= m[col][col];
    for (int r = col + 1; r < n; r++) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (int c = col; c < n; c++) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

int rank_n(std::vector<std::vector<Rat>> m) {
  int n = (int)m.size(), rank = 0;
  for (int col = 0; col < n && rank < n; col++) {
    int piv = -1;
    for (int r = rank; r < n; r++)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = rank + 1; r < n; r++) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[rank][col];
      for (int c = col; c < n; c++) m[r][c] -= f * m[rank][c];
    }
    rank++;
  }
  return rank;
}

std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v) {
  Int denom = 1;
  for (const Rat& x : v) denom = boost::multiprecision::lcm(denom, den(x));
  std::vector<Int> out;
  Int g = 0;
  for (const Rat& x : v) {
    Int e = num(x) * (denom / den(x));
    out.push_back(e);
    g = boost::multiprecision::gcd(g, e);
  }
  if (g == 0) return out;
  for (Int& e : out) e /= g;
  for (const Int& e : out) {
    if (e == 0) continue;
    if (e < 0)
      for (Int& f : out) f = -f;
    break;
  }
  return out;
}

}  // namespace

Rat SymQuadric::eval(const std::vector<Rat>& x) const { return bilinear(x, x); }

Rat SymQuadric::bilinear(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  if (x.size() != 4 || y.size() != 4) throw std::invalid_argument("quadric: need 4 coordinates");
  Rat total = 0;
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++) total += gram[i][j] * x[i] * y[j];
  return total;
}

Rat SymQuadric::det() const { return det_n(gram); }
int SymQuadric::rank() const { return rank_n(gram); }

std::vector<Int> SymQuadric::kernel_vector() const {
  // row reduce a copy, then back-substitute for one kernel generator
  auto m = gram;
  int n = 4;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; col++) {
    int piv = -1;
    for (int r = row; r < n; r++)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    Rat lead = m[row][col];
    for (int c = 0; c < n; c++) m[row][c] /= lead;
    for (int r = 0; r < n; r++) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = 0; c < n; c++) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    row++;
  }
  if ((int)pivot_col.size() == n) throw std::invalid_argument("quadric is nonsingular; no vertex");
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) free_col++;
  std::vector<Rat> v(n, Rat(0));
  v[free_col] = 1;
  for (size_t r = 0; r < pivot_col.size(); r++) v[pivot_col[r]] = -m[r][free_col];
  return primitive_integer_vector(v);
}

SymQuadric pencil_member(const SymQuadric& a1, const SymQuadric& a2, const Rat& u, const Rat& v) {
  SymQuadric q;
  q.gram.assign(4, std::vector<Rat>(4, Rat(0)));
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++) q.gram[i][j] = u * a1.gram[i][j] + v * a2.gram[i][j];
  return q;
}

SymQuadric parse_quadric(const std::string& text) {
  MultiPoly p = parse_multipoly(text, kVars);
  SymQuadric q;
  q.gram.assign(4, std::vector<Rat>(4, Rat(0)));
  for (const auto& [e, c] : p.terms) {
    int i = -1, j = -1;
    int deg = 0;
    for (int k = 0; k < 4; k++) {
      deg += e[k];
      if (e[k] == 2) { i = j = k; }
      else if (e[k] == 1) { (i < 0 ? i : j) = k; }
    }
    if (deg != 2 || j < 0)
      throw std::invalid_argument("quadric polynomial must be homogeneous of degree 2");
    if (i == j) q.gram[i][i] += c;
    else { q.gram[i][j] += c / 2; q.gram[j][i] += c / 2; }
  }
  return q;
}

std::string quadric_str(const SymQuadric& q) {
  std::string out;
  for (int i = 0; i < 4; i++)
    for (int j = i; j < 4; j++) {
      Rat c = (i == j) ? q.gram[i][i] : q.gram[i][j] * 2;
      if (c == 0) continue;
      if (!out.empty()) out += (c > 0) ? " + " : " - ";
      else if (c < 0) out += "-";
      Rat a = c < 0 ? Rat(-c) : c;
      std::string mono = (i == j) ? kVars[i] + "^2" : kVars[i] + "*" + kVars[j];
      if (a != 1) out += to_string(a) + "*";
      out += mono;
    }
  return out.empty() ? "0" : out;
}

PencilCurve parse_pencil(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("pencil input needs two ';'-separated quadrics");
  PencilCurve c;
  c.q1 = parse_quadric(text.substr(0, semi));
  c.q2 = parse_quadric(text.substr(semi + 1));
  return c;
}

PencilCurve parse_pencil_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open curve file: " + path);
  std::string text, line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    text += line + "\n";
  }
  return parse_pencil(text);
}

BinaryQuartic pencil_quartic(const PencilCurve& c) {
  // det(u A1 + v A2) is homogeneous of degree 4: interpolate det(x A1 + A2)
  std::vector<Rat> xs, ys;
  for (int i = 0; i <= 4; i++) {
    xs.push_back(i);
    ys.push_back(pencil_member(c.q1, c.q2, Rat(i), Rat(1)).det());
  }
  RatPoly p;
  for (int i = 0; i <= 4; i++) {
    RatPoly li = {Rat(1)};
    Rat denom = 1;
    for (int j = 0; j <= 4; j++) {
      if (j == i) continue;
      li = mul(li, {-xs[j], Rat(1)});
      denom *= xs[i] - xs[j];
    }
    p = add(p, scale(li, ys[i] / denom));
  }
  p.resize(5, Rat(0));
  BinaryQuartic f{p[4], p[3], p[2], p[1], p[0]};
  if (f.a == 0 && f.b == 0 && f.c == 0 && f.d == 0 && f.e == 0)
    throw std::invalid_argument("degenerate pencil: det(u A1 + v A2) vanishes identically");
  return f;
}

namespace {

// try to split a primitive integer quartic into two integer quadratics
bool split_quartic(const std::vector<Int>& q, std::vector<Int>& f, std::vector<Int>& g) {
  // q = q4 x^4 + ... + q0; f = a2 x^2 + a1 x + a0, g likewise
  auto divisors = [](const Int& n) {
    std::vector<Int> out;
    Int a = n < 0 ? Int(-n) : n;
    for (Int d = 1; d * d <= a; d++)
      if (a % d == 0) {
        out.push_back(d);
        if (d * d != a) out.push_back(a / d);
      }
    return out;
  };
  for (const Int& a2 : divisors(q[4])) {
    Int b2 = q[4] / a2;
    for (Int a0 : divisors(q[0]))
      for (int s0 : {1, -1}) {
        a0 *= s0;
        if (a0 == 0) continue;
        Int b0 = q[0] / a0;
        // b = a2 b1 + b2 a1 ; d = b0 a1 + a0 b1
        Int det = b2 * a0 - a2 * b0;
        if (det == 0) continue;
        Int a1n = q[3] * a0 - a2 * q[1];
        Int b1n = b2 * q[1] - q[3] * b0;
        if (a1n % det != 0 || b1n % det != 0) continue;
        Int a1 = a1n / det, b1 = b1n / det;
        if (a2 * b0 + a1 * b1 + a0 * b2 != q[2]) continue;
        f = {a0, a1, a2};
        g = {b0, b1, b2};
        return true;
      }
  }
  return false;
}

ConeData make_cone(const PencilCurve& c, const Rat& u, const Rat& v) {
  ConeData cone;
  cone.u = u;
  cone.v = v;
  SymQuadric m = pencil_member(c.q1, c.q2, u, v);
  cone.member = m;
  cone.rank = m.rank();
  if (cone.rank != 3) return cone;
  cone.vertex = m.kernel_vector();
  // coordinate planes in the order w=0, z=0, y=0, x=0; a plane works when
  // it misses the vertex
  int plane = -1;
  for (int i : {3, 2, 1, 0})
    if (cone.vertex[i] != 0) { plane = i; break; }
  std::vector<std::vector<Rat>> basis;  // columns spanning the plane
  if (plane >= 0) {
    cone.base_plane.assign(4, Rat(0));
    cone.base_plane[plane] = 1;
    for (int j = 0; j < 4; j++) {
      if (j == plane) continue;
      std::vector<Rat> e(4, Rat(0));
      e[j] = 1;
      basis.push_back(e);
    }
  } else {
    throw std::logic_error("vertex of a rank-3 cone cannot be the zero vector");
  }
  cone.plane_basis = basis;
  QuadraticForm conic;
  conic.gram.assign(3, std::vector<Rat>(3, Rat(0)));
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) {
      Rat s = 0;
      for (int a = 0; a < 4; a++)
        for (int b = 0; b < 4; b++) s += basis[i][a] * m.gram[a][b] * basis[j][b];
      conic.gram[i][j] = s;
    }
  cone.base_conic = conic;
  return cone;
}

}  // namespace

SingularMembers singular_members(const PencilCurve& c) {
  BinaryQuartic f = pencil_quartic(c);
  if (!f.squarefree())
    throw std::invalid_argument("pencil has a repeated singular member (singular curve)");
  SingularMembers out;
  RatPoly p = f.dehomogenized();
  if (f.a == 0)  // root at infinity: the member [1:0] = A1 alone
    out.rational.push_back(make_cone(c, Rat(1), Rat(0)));
  std::vector<Rat> roots = rational_roots(p);
  std::sort(roots.begin(), roots.end());
  RatPoly rem = p;
  for (const Rat& r : roots) {
    out.rational.push_back(make_cone(c, r, Rat(1)));
    rem = divmod(rem, RatPoly{-r, Rat(1)}).first;
  }
  int d = degree(rem);
  if (d >= 2) {
    std::vector<Int> q = primitive_integer(rem);
    std::vector<Int> fac, g;
    if (d == 2) {
      ConjugateCones cc;
      cc.min_poly.clear();
      for (const Int& c : q) cc.min_poly.push_back(Rat(c));
      Rat disc = rem[1] * rem[1] - 4 * rem[2] * rem[0];
      cc.field_disc = squarefree_part(num(disc) * den(disc));
      out.irrational.push_back(cc);
    } else if (d == 4 && split_quartic(q, fac, g)) {
      for (const auto& part : {fac, g}) {
        ConjugateCones cc;
        cc.min_poly = {Rat(part[0]), Rat(part[1]), Rat(part[2])};
        Rat disc = Rat(part[1] * part[1] - 4 * part[2] * part[0]);
        cc.field_disc = squarefree_part(num(disc) * den(disc));
        out.irrational.push_back(cc);
      }
    } else {
      ConjugateCones cc;
      cc.min_poly = rem;
      cc.field_disc = 0;  // not a quadratic field; left symbolic
      out.irrational.push_back(cc);
    }
  }
  return out;
}

std::vector<QuadraticForm> base_conics(const PencilCurve& c) {
  std::vector<QuadraticForm> out;
  for (const auto& cone : singular_members(c).rational)
    if (cone.rank == 3) out.push_back(cone.base_conic);
  return out;
}

VertexLineDivisor vertex_line_divisor(const ConeData& cone, const SymQuadric& other,
                                      const std::optional<std::vector<Rat>>& base_point) {
  if (cone.rank != 3) throw std::invalid_argument("vertex line needs a rank-3 cone");
  VertexLineDivisor out;
  std::vector<Rat> V(cone.vertex.begin(), cone.vertex.end());
  std::vector<Rat> B;
  bool supplied_ok = false;
  if (base_point) {
    B = *base_point;
    if (B.size() != 4) throw std::invalid_argument("base point needs 4 coordinates");
    supplied_ok = (cone.member.eval(B) == 0);
    if (supplied_ok) {
      // reject the vertex itself (proportional coordinates)
      bool proportional = true;
      for (int i = 0; i < 4 && proportional; i++)
        for (int j = i + 1; j < 4; j++)
          if (V[i] * B[j] != V[j] * B[i]) { proportional = false; break; }
      if (proportional) supplied_ok = false;
    }
  }
  if (!supplied_ok) {
    SolubilityVerdict sv = conic_has_rational_point(cone.base_conic);
    if (!sv.soluble) {
      out.no_rational_ruling = true;
      out.obstruction = sv.obstruction;
      return out;
    }
    if (!sv.witness) throw std::logic_error("soluble conic without witness");
    B.assign(4, Rat(0));
    for (int j = 0; j < 3; j++)
      for (int i = 0; i < 4; i++) B[i] += (*sv.witness)[j] * cone.plane_basis[j][i];
  }
  out.base_point = B;
  // the line s*V + t*B meets the other quadric where
  // Q(V) s^2 + 2 <V,B> s t + Q(B) t^2 = 0
  Rat css = other.eval(V), cst = other.bilinear(V, B), ctt = other.eval(B);
  if (ctt == 0) {
    // the base point itself lies on the curve
    out.contains_rational_point = true;
    out.field_disc = 1;
    out.point_rat = B;
    out.point_irr.assign(4, Rat(0));
    return out;
  }
  Rat inner = cst * cst - css * ctt;  // quarter discriminant
  if (inner == 0 || is_square(inner)) {
    out.contains_rational_point = true;
    out.field_disc = 1;
    Rat root(*exact_sqrt(num(inner) * den(inner)), den(inner));
    // t = (-cst + root)/ctt at s = 1
    Rat t = (root - cst) / ctt;
    out.point_rat.assign(4, Rat(0));
    for (int i = 0; i < 4; i++) out.point_rat[i] = V[i] + t * B[i];
    out.point_irr.assign(4, Rat(0));
    return out;
  }
  Int d = squarefree_part(num(inner) * den(inner));
  out.field_disc = d;
  // inner = d * k^2 with k rational
  Rat k_sq = inner / Rat(d);
  Rat k(*exact_sqrt(num(k_sq)), *exact_sqrt(den(k_sq)));
  // divisor points: ctt*V + (-cst +- k sqrt(d)) B, then a rational rescale
  std::vector<Rat> pr(4), pi(4);
  for (int i = 0; i < 4; i++) {
    pr[i] = ctt * V[i] - cst * B[i];
    pi[i] = k * B[i];
  }
  Rat scale_by = 0;
  for (int i = 0; i < 4; i++)
    if (pr[i] != 0) { scale_by = pr[i]; break; }
  if (scale_by == 0)
    for (int i = 0; i < 4; i++)
      if (pi[i] != 0) { scale_by = pi[i]; break; }
  for (int i = 0; i < 4; i++) { pr[i] /= scale_by; pi[i] /= scale_by; }
  out.point_rat = pr;
  out.point_irr = pi;
  return out;
}

std::vector<SquareDiscMember> square_disc_members(const PencilCurve& c, long long bound) {
  BinaryQuartic f = pencil_quartic(c);
  if (!f.squarefree())
    throw std::invalid_argument("pencil has a repeated singular member (singular curve)");
  // clear denominators: det values are square iff L * (integer form) values are
  Int L = 1;
  for (const Rat& r : {f.a, f.b, f.c, f.d, f.e}) L = boost::multiprecision::lcm(L, den(r));
  std::array<Int, 5> g = {num(f.a) * (L / den(f.a)), num(f.b) * (L / den(f.b)),
                          num(f.c) * (L / den(f.c)), num(f.d) * (L / den(f.d)),
                          num(f.e) * (L / den(f.e))};
  std::vector<SquareDiscMember> out;
  auto consider = [&](long long m, long long n) {
    Int u = m, v = n;
    Int val = ((g[0] * u + g[1] * v) * u + g[2] * v * v) * u * u +
              (g[3] * u + g[4] * v) * v * v * v;
    if (val == 0) {
      out.push_back({Rat(m), Rat(n), false});
      return;
    }
    if (is_square(Int(val * L))) out.push_back({Rat(m), Rat(n), true});
  };
  consider(1, 0);
  for (long long n = 1; n <= bound; n++)
    for (long long m = -bound; m <= bound; m++) {
      if (std::gcd(m < 0 ? -m : m, n) != 1) continue;
      consider(m, n);
    }
  return out;
}

SolubilityVerdict ruling_has_rational_line(const SymQuadric& q) {
  if (q.rank() != 4)
    throw std::invalid_argument("ruling test needs a smooth quadric");
  Rat d = q.det();
  if (!is_square(d))
    throw std::invalid_argument("discriminant is not a square: rulings are conjugate, not rational");
  return quaternary_isotropic(q.as_form());
}

}  // namespace qpt
