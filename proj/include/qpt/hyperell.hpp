#pragma once

#include "qpt/forms.hpp"
#include "qpt/polynomial.hpp"

#include <optional>
#include <string>

namespace qpt {

// y^2 = f(x) with f squarefree of degree 1..6
struct HyperellipticModel {
  RatPoly f;

  int genus() const;  // (deg-1)/2 rounded down for the smooth model
};

// "y^2 = -(65536x^4+128)"; the right side may use parentheses
HyperellipticModel parse_hyperelliptic(const std::string& text);

struct LocalSolubilityReport {
  bool soluble = true;
  std::optional<Place> obstruction;          // first failing place
  std::vector<Place> checked;                // oo, 2, odd p | disc(f)
};

// Everywhere-local solubility of the smooth projective model: R plus Q_p at
// p = 2 and every odd prime dividing disc(f). Exact, via valuation-driven
// digit recursion with Hensel termination.
LocalSolubilityReport hyperelliptic_everywhere_locally_soluble(const HyperellipticModel& m);

// Q_p-solubility at one place (p = 0 means R)
bool hyperelliptic_soluble_at(const HyperellipticModel& m, const Place& v);

}  // namespace qpt
