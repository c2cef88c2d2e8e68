#include "qpt/quartic.hpp"

namespace qpt {

Rat BinaryQuartic::invariant_i() const { return 12 * a * e - 3 * b * d + c * c; }

Rat BinaryQuartic::invariant_j() const {
  return 72 * a * c * e - 27 * a * d * d - 27 * e * b * b + 9 * b * c * d - 2 * c * c * c;
}

Rat BinaryQuartic::disc() const {
  Rat i = invariant_i(), j = invariant_j();
  return (4 * i * i * i - j * j) / 27;
}

RatPoly BinaryQuartic::dehomogenized() const { return trim({e, d, c, b, a}); }

Rat BinaryQuartic::eval(const Rat& u, const Rat& v) const {
  return a * u * u * u * u + b * u * u * u * v + c * u * u * v * v + d * u * v * v * v +
         e * v * v * v * v;
}

BinaryQuartic BinaryQuartic::substituted(const Rat& p, const Rat& q, const Rat& r,
                                         const Rat& s) const {
  // expand f(p u + q v, r u + s v) by evaluating at 5 points and solving
  std::array<std::pair<Rat, Rat>, 5> pts{{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1}}};
  std::array<Rat, 5> vals;
  for (int k = 0; k < 5; ++k) {
    auto [u, v] = pts[k];
    vals[k] = eval(p * u + q * v, r * u + s * v);
  }
  // coefficients from values: a = f(1,0), e = f(0,1), and three linear equations
  BinaryQuartic g;
  g.a = vals[0];
  g.e = vals[1];
  Rat s1 = vals[2] - g.a - g.e;       // b + c + d
  Rat s2 = vals[3] - g.a - 16 * g.e;  // 2b + 4c + 8d
  Rat s3 = vals[4] - 16 * g.a - g.e;  // 8b + 4c + 2d
  // s2 + s3 = 10(b+d) + 8c with b+d = s1 - c
  g.c = (10 * s1 - s2 - s3) / 2;
  // s3 - s2 = 6b - 6d ; b + d = s1 - c
  Rat bd_sum = s1 - g.c;
  Rat bd_diff = (s3 - s2) / 6;
  g.b = (bd_sum + bd_diff) / 2;
  g.d = (bd_sum - bd_diff) / 2;
  return g;
}

Rat WeierstrassCurve::b2() const { return a1 * a1 + 4 * a2; }
Rat WeierstrassCurve::b4() const { return 2 * a4 + a1 * a3; }
Rat WeierstrassCurve::b6() const { return a3 * a3 + 4 * a6; }
Rat WeierstrassCurve::b8() const {
  return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}
Rat WeierstrassCurve::c4() const { return b2() * b2() - 24 * b4(); }
Rat WeierstrassCurve::c6() const {
  return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6();
}
Rat WeierstrassCurve::disc() const {
  Rat B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}
Rat WeierstrassCurve::j_invariant() const {
  Rat d = disc();
  if (d == 0) throw std::domain_error("j_invariant: singular curve");
  return c4() * c4() * c4() / d;
}

WeierstrassCurve jacobian_from_quartic(const BinaryQuartic& f) {
  if (f.disc() == 0) throw std::domain_error("jacobian_from_quartic: quartic has a repeated root");
  WeierstrassCurve e;
  e.a1 = e.a2 = e.a3 = 0;
  e.a4 = -27 * f.invariant_i();
  e.a6 = -27 * f.invariant_j();
  return e;
}

}  // namespace qpt
