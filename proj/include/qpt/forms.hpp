#pragma once

#include "qpt/rat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qpt {

// A place of Q: a prime, or 0 for the real place.
struct Place {
  Int p = 0;  // 0 means infinity
  bool is_real() const { return p == 0; }
  std::string str() const { return is_real() ? "oo" : p.str(); }
};

// Hilbert symbol (a,b)_v for nonzero rationals.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// Quadratic form in n variables (n = 3 or 4) given by its Gram matrix.
struct QuadraticForm {
  std::vector<std::vector<Rat>> gram;

  int vars() const { return static_cast<int>(gram.size()); }
  Rat eval(const std::vector<Rat>& x) const;
  Rat det() const;
  bool nondegenerate() const { return det() != 0; }

  // diagonal entries of a congruent diagonal form, as squarefree integers
  std::vector<Int> diagonal_squarefree() const;
};

struct SolubilityVerdict {
  bool soluble = false;
  std::optional<Place> obstruction;         // set when insoluble
  std::optional<std::vector<Rat>> witness;  // set when a point was found
};

// Hasse-Minkowski for ternary forms, with a bounded witness search on success.
SolubilityVerdict conic_has_rational_point(const QuadraticForm& q, long long search_height = 200);

// Global isotropy of a nondegenerate quaternary form.
SolubilityVerdict quaternary_isotropic(const QuadraticForm& q);

// local isotropy of a diagonal form at one place (diagonal entries squarefree ints)
bool diagonal_isotropic_at(const std::vector<Int>& diag, const Place& v);

// "4x^2-2xy+y^2-2yz+2z^2" -> 3x3 Gram matrix (in x, y, z)
QuadraticForm parse_ternary_form(const std::string& text);

std::vector<Int> prime_factors_of(Int n);

}  // namespace qpt
