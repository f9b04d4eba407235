#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <vector>

#include "liaison/exact/linalg.hpp"

// Sparse homogeneous polynomials with exact rational coefficients, and
// degreewise linear algebra on the graded pieces of the ideals they
// generate.  No Groebner bases: every question is answered by the rank or
// kernel of an explicit matrix over Z.

namespace liaison::exact {

using Exponents = std::vector<int>;

struct Polynomial {
  int num_vars = 0;
  std::map<Exponents, mpq_class> terms;  // zero coefficients never stored

  static Polynomial monomial(int nv, Exponents e, const mpq_class& c = 1);
  static Polynomial zero(int nv) { return Polynomial{nv, {}}; }

  bool is_zero() const { return terms.empty(); }
  int degree() const;  // total degree, -1 for the zero polynomial
  bool homogeneous() const;

  Polynomial& add_term(const Exponents& e, const mpq_class& c);
  Polynomial times_monomial(const Exponents& e) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const mpq_class& c) const;

  mpq_class evaluate(std::span<const mpq_class> coords) const;

  // Multiplies out denominators and divides by content; same zero set.
  Polynomial primitive_integer_form() const;
};

// Monomials of total degree k in nv variables, lexicographic on exponent
// vectors; the canonical coordinate order for all degree-k computations.
const std::vector<Exponents>& monomial_basis(int nv, int k);
long long monomial_count(int nv, int k);  // C(k+nv-1, nv-1)

// Coefficient row of a homogeneous degree-k polynomial in monomial_basis
// coordinates (rational version and primitive integer version).
std::vector<mpq_class> coefficient_row_q(const Polynomial& p, int k);
ZRow coefficient_row(const Polynomial& p, int k);
Polynomial polynomial_from_row(int nv, int k, const ZRow& row);

struct GradedIdeal {
  int num_vars = 0;
  std::vector<Polynomial> generators;  // homogeneous, nonzero
};

GradedIdeal make_graded_ideal(int nv, std::vector<Polynomial> gens);

// Spanning rows for the degree-k piece of the ideal: every monomial multiple
// of every generator landing in degree k.
ZMat ideal_graded_span(const GradedIdeal& ideal, int k);

// dim over Q of the degree-k piece.
int ideal_graded_dimension(const GradedIdeal& ideal, int k);

// The degreewise colon (I : J)_k = { f in R_k : f*g in I for all g in J },
// computed against J's listed generators.  Returns the dimension and, via
// `basis`, primitive coefficient rows for the forms themselves.
int colon_graded_dimension(const GradedIdeal& i_ideal, const GradedIdeal& j_ideal, int k,
                           ZMat* basis = nullptr);

}  // namespace liaison::exact
