#pragma once

#include "qpt/polynomial.hpp"
#include "qpt/rat.hpp"

#include <array>

namespace qpt {

// a*u^4 + b*u^3 v + c*u^2 v^2 + d*u v^3 + e*v^4
struct BinaryQuartic {
  Rat a, b, c, d, e;

  Rat invariant_i() const;  // I = 12ae - 3bd + c^2
  Rat invariant_j() const;  // J = 72ace - 27ad^2 - 27eb^2 + 9bcd - 2c^3
  Rat disc() const;         // (4I^3 - J^2)/27
  bool squarefree() const { return disc() != 0; }

  RatPoly dehomogenized() const;  // in u at v = 1
  Rat eval(const Rat& u, const Rat& v) const;

  // substitute (u,v) -> (p u + q v, r u + s v)
  BinaryQuartic substituted(const Rat& p, const Rat& q, const Rat& r, const Rat& s) const;
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct WeierstrassCurve {
  Rat a1, a2, a3, a4, a6;

  Rat b2() const, b4() const, b6() const, b8() const;
  Rat c4() const, c6() const;
  Rat disc() const;
  Rat j_invariant() const;
};

// y^2 = x^3 - 27 I x - 27 J; throws on zero quartic discriminant
WeierstrassCurve jacobian_from_quartic(const BinaryQuartic& f);

}  // namespace qpt
