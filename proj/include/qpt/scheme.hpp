#pragma once

#include "qpt/fq.hpp"
#include "qpt/multipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qpt {

// A projective scheme cut out by homogeneous forms with rational coefficients.
struct ProjScheme {
  std::vector<std::string> vars;
  std::vector<MultiPoly> generators;

  int ambient_dim() const { return (int)vars.size() - 1; }
};

// Text format: one homogeneous polynomial per line, '#' comments allowed.
// An optional first line "vars: x,y,z,w" fixes the coordinate order;
// otherwise variables are detected from the text.
ProjScheme parse_scheme(const std::string& text);
ProjScheme parse_scheme_file(const std::string& path);

// Enumeration budget: maximum size of P^n(F_q) that count_points will walk.
// Overridable through the QPT_BUDGET environment variable.
long long point_budget();
constexpr long long kDefaultPointBudget = 12000;

// Number of F_{p^k}-points, by enumerating projective representatives whose
// first nonzero coordinate is 1. Throws if the coefficients do not reduce
// mod p or the ambient space exceeds the budget.
long long count_points(const ProjScheme& s, long long p, int k);

// x -> M x with M^2 = lambda * I acting on the coordinates of a scheme.
struct LinearInvolution {
  std::vector<std::vector<Rat>> matrix;

  int dim() const { return (int)matrix.size(); }
  // the scalar lambda with M^2 = lambda I; throws if M^2 is not scalar
  Rat involution_scalar() const;
  // does g(Mx) land in the span of the generators, for every generator g?
  bool preserves(const ProjScheme& s) const;
};

LinearInvolution parse_involution(const std::string& text, int dim);

struct FixedLocusReport {
  int count = 0;                       // geometric fixed points on the scheme
  std::vector<int> per_eigenspace;     // split by eigenvalue (+mu, -mu)
  bool transversal = true;
};

// Fixed points of the involution on a one-dimensional scheme, counted over
// the algebraic closure. Throws on a fixed locus of positive dimension or
// when transversality cannot be certified.
FixedLocusReport fixed_locus(const ProjScheme& s, const LinearInvolution& iota);

// Genus of the quotient of a genus-g curve by an involution with r fixed
// points (Riemann-Hurwitz). Throws unless 2g - 2 = 4g' - 4 + r has an
// integral non-negative solution g'.
int quotient_genus(int genus, int fixed_points);

}  // namespace qpt
