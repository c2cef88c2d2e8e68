#pragma once

#include "qpt/forms.hpp"
#include "qpt/multipoly.hpp"
#include "qpt/quartic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qpt {

// Quadric surface in P^3 with exact symmetric Gram matrix.
struct SymQuadric {
  std::vector<std::vector<Rat>> gram;  // 4x4, symmetric

  Rat eval(const std::vector<Rat>& x) const;
  Rat bilinear(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
  Rat det() const;
  int rank() const;
  // primitive integer generator of the kernel (rank-3 case)
  std::vector<Int> kernel_vector() const;
  QuadraticForm as_form() const { return QuadraticForm{gram}; }
};

// u*A1 + v*A2 as a quadric
SymQuadric pencil_member(const SymQuadric& a1, const SymQuadric& a2, const Rat& u, const Rat& v);

// polynomial in x,y,z,w -> Gram matrix (off-diagonal entries halved)
SymQuadric parse_quadric(const std::string& text);
std::string quadric_str(const SymQuadric& q);

struct PencilCurve {
  SymQuadric q1, q2;
};

// two ';'-separated quadric polynomials
PencilCurve parse_pencil(const std::string& text);
PencilCurve parse_pencil_file(const std::string& path);

// det(u A1 + v A2); throws if identically zero
BinaryQuartic pencil_quartic(const PencilCurve& c);

struct ConeData {
  Rat u, v;                      // parameter [u:v], v = 1 or (u,v) = (1,0)
  SymQuadric member;             // the singular member u*A1 + v*A2 itself
  int rank = 3;
  std::vector<Int> vertex;       // primitive kernel generator (rank 3)
  std::vector<Rat> base_plane;   // linear form cutting the base plane
  QuadraticForm base_conic;      // restriction of the cone to that plane
  // basis of the base plane used to write the conic (columns, in P^3 coords)
  std::vector<std::vector<Rat>> plane_basis;
};

struct ConjugateCones {
  RatPoly min_poly;   // irreducible factor of the dehomogenized quartic (x = u/v)
  Int field_disc;     // squarefree discriminant of the splitting field
};

struct SingularMembers {
  std::vector<ConeData> rational;
  std::vector<ConjugateCones> irrational;
};

// all singular members of the pencil; requires a squarefree quartic
SingularMembers singular_members(const PencilCurve& c);

std::vector<QuadraticForm> base_conics(const PencilCurve& c);

// degree-2 divisor cut on the curve by a line through a cone vertex
struct VertexLineDivisor {
  bool no_rational_ruling = false;      // base conic had no rational point
  std::optional<Place> obstruction;     // why, when no_rational_ruling
  std::vector<Rat> base_point;          // point of P^3 on the cone
  Int field_disc = 1;                   // 1 = divisor splits into rational points
  bool contains_rational_point = false;
  // the two divisor points are point_rat +- sqrt(field_disc) * point_irr
  std::vector<Rat> point_rat, point_irr;
};

VertexLineDivisor vertex_line_divisor(const ConeData& cone, const SymQuadric& other,
                                      const std::optional<std::vector<Rat>>& base_point = std::nullopt);

struct SquareDiscMember {
  Rat u, v;
  bool smooth = false;  // det nonzero at this member
};

// rational [u:v] with det M(u,v) a rational square, up to numerator /
// denominator height `bound`
std::vector<SquareDiscMember> square_disc_members(const PencilCurve& c, long long bound = 10000);

// For a smooth quadric with square discriminant: do its two rulings, which
// are then individually defined over Q, contain a rational line? True iff
// the quadric has a rational point.
SolubilityVerdict ruling_has_rational_line(const SymQuadric& q);

}  // namespace qpt
