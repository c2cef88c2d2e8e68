#pragma once

#include "qpt/rat.hpp"

#include <vector>

namespace qpt {

// Dense univariate polynomial over Q, coeffs[i] is the x^i coefficient.
// Trailing zeros are trimmed; the zero polynomial is the empty vector.
using RatPoly = std::vector<Rat>;

RatPoly trim(RatPoly p);
int degree(const RatPoly& p);  // -1 for zero
Rat lead(const RatPoly& p);

RatPoly add(const RatPoly& a, const RatPoly& b);
RatPoly sub(const RatPoly& a, const RatPoly& b);
RatPoly mul(const RatPoly& a, const RatPoly& b);
RatPoly scale(const RatPoly& a, const Rat& c);
Rat eval(const RatPoly& p, const Rat& x);
RatPoly derivative(const RatPoly& p);
// division with remainder; both quotient and remainder
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly poly_gcd(RatPoly a, RatPoly b);  // monic gcd
RatPoly squarefree_part(const RatPoly& p);
bool is_squarefree(const RatPoly& p);

Int resultant(const RatPoly& a, const RatPoly& b, Int* denominator_scale = nullptr);
Rat rat_resultant(const RatPoly& a, const RatPoly& b);
// Sylvester resultant with formal degrees m, n (padding leading zeros);
// needed when specializing forms can drop the leading coefficient.
Rat rat_resultant_padded(const RatPoly& a, const RatPoly& b, int m, int n);
Rat discriminant(const RatPoly& p);

// number of distinct real roots (Sturm)
int real_root_count(const RatPoly& p);

// all rational roots
std::vector<Rat> rational_roots(const RatPoly& p);

// integer-coefficient view: primitive integer polynomial and content with
// p = content * prim (content rational, prim has integer coprime coeffs)
std::vector<Int> primitive_integer(const RatPoly& p, Rat* content = nullptr);

}  // namespace qpt
