#pragma once

#include "qpt/polynomial.hpp"
#include "qpt/rat.hpp"

#include <map>
#include <string>
#include <vector>

namespace qpt {

// Sparse multivariate polynomial over Q. Exponent vectors all share nvars.
struct MultiPoly {
  int nvars = 0;
  std::map<std::vector<int>, Rat> terms;  // exponents -> coefficient

  bool zero() const { return terms.empty(); }
  int total_degree() const;
  bool homogeneous() const;
  MultiPoly& cleanup();  // drop zero coefficients

  Rat eval(const std::vector<Rat>& x) const;
  // substitute x_i = sum_j sub[i][j] * y_j  (linear change into m new vars)
  MultiPoly substitute_linear(const std::vector<std::vector<Rat>>& sub, int new_nvars) const;
};

MultiPoly mp_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_scale(const MultiPoly& a, const Rat& c);

// Parse "2048x_1^2 + 16x_3^2 + x_5x_8" or "16x^2 + 8xy - zw" against a
// fixed variable list. Implicit multiplication between variable factors.
MultiPoly parse_multipoly(const std::string& text, const std::vector<std::string>& vars);

// Default variable names: x,y,z,w,t,u,r,s for n+1 <= 8 coordinates, or
// x_1..x_{n+1} when the text uses subscripted names.
std::vector<std::string> detect_variables(const std::string& text);

// univariate/binary-form views
// restriction to two variables: coefficients of s^i t^(d-i) as RatPoly in s at t=1
RatPoly binary_dehomogenize(const MultiPoly& p, int* hom_degree);

}  // namespace qpt
