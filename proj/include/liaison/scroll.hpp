#pragma once

#include <span>
#include <variant>
#include <vector>

#include "liaison/genus.hpp"  // liaison::Int

// Rational normal scrolls: divisor class lattices, the intersection form on
// the canonical resolution, transforms of Weil divisors through the vertex,
// and complete-intersection curve invariants.
//
// Lattice conventions: on the resolution, Pic = Z[H~] + Z[R~] with
//   H~^r = f,   H~^(r-1).R~ = 1,   any product with two R~ factors = 0.

namespace liaison {

struct Scroll {
  Int n = 0;             // ambient projective dimension
  std::vector<Int> a;    // nondecreasing splitting type, a.back() >= 1
  Int zeros = 0;         // number of zero entries

  Int r() const { return static_cast<Int>(a.size()); }  // scroll dimension
  Int f() const;                                        // degree = sum a = n - r + 1
  bool smooth() const { return zeros == 0; }
  // Vertex V has dimension (#zeros - 1); these require a singular scroll.
  Int vertex_dim() const;
  Int vertex_codim() const;  // r - dim V
  bool cone_law() const { return !smooth() && vertex_codim() == 2; }  // H ~ f R
};

// Validates n = f + r - 1; the splitting type is sorted on entry.
Scroll make_scroll(Int n, std::vector<Int> a);

// Weil divisor classes: FREE coordinates in (H, R) when Cl(X) has rank 2,
// CONE coordinate in R alone when the vertex has codimension 2 (H ~ f R).
struct FreeClass {
  Int h = 0, r = 0;
  bool operator==(const FreeClass&) const = default;
};
struct ConeClass {
  Int r = 0;
  bool operator==(const ConeClass&) const = default;
};
using DivisorClass = std::variant<FreeClass, ConeClass>;

struct ClassGroup {
  bool cyclic = false;  // true: Cl(X) = Z[R] with the relation H ~ relation_f * R
  Int relation_f = 0;
};
ClassGroup class_group(const Scroll& x);

// Class on the canonical resolution: h*H~ + r*R~.
struct ResolutionClass {
  Int h = 0, r = 0;
  bool operator==(const ResolutionClass&) const = default;
};

// Multilinear expansion of classes[0] . ... . classes[r-1]; exactly r classes.
Int intersection_number(const Scroll& x, std::span<const ResolutionClass> classes);

// K = -r*H + (f-2)*R, expressed in the CONE coordinate when H ~ f R.
DivisorClass canonical_class(const Scroll& x);
Int canonical_characteristic(const Scroll& x);  // = r

// Degree against H^(r-1): FREE(a,b) -> a*f + b, CONE(d) -> d.
Int divisor_degree(const Scroll& x, const DivisorClass& cls);

// FREE(a,b) -> CONE(a*f + b) on scrolls with the H ~ f R relation.
ConeClass to_cone(const Scroll& x, const FreeClass& cls);

// Integral total transform of an effective divisor ~ d*R on a scroll whose
// vertex has codimension 2: with d-1 = k*f + h (k >= -1, 0 <= h < f), the
// transform is (k+1)*H~ - (f-h-1)*R~.
ResolutionClass integral_total_transform(const Scroll& x, Int d);

// Proper transform of a divisor ~ c*H on a 3-fold with line vertex, passing
// a times through the vertex line: (c-a)*H~ + f*a*R~.  Requires 0 <= a <= c.
ResolutionClass proper_transform_line_vertex(const Scroll& x, Int c, Int a);

// Multiplicity of the vertex line in the intersection of two divisors, as the
// total-transform triple product minus the proper-transform triple product.
// Cross-checked against the closed forms a1*a2*f (two H-type divisors) and
// a1 (H-type against a ruling plane ~ R); a mismatch throws std::logic_error.
Int vertex_multiplicity(const Scroll& x, Int c1, Int a1, Int c2, Int a2);
Int vertex_multiplicity_ruling(const Scroll& x, Int c1, Int a1);

struct CiCurve {
  Int degree = 0;
  Int genus = 0;
  bool operator==(const CiCurve&) const = default;
};

// Degree and arithmetic genus of the curve cut on a 3-fold of degree f by
// hypersurfaces of degrees a and b (adjunction on the resolution lattice).
CiCurve ci_curve_invariants(Int f, Int a, Int b);
CiCurve ci_curve_invariants(const Scroll& x, Int a, Int b);

// O_X(a,b) reflexivity: always on smooth scrolls and codim(V) > 2; b < f
// when the vertex has codimension 2.
bool is_reflexive_pair(const Scroll& x, Int a, Int b);

}  // namespace liaison
