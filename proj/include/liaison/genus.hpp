#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

// Division data, first-difference profiles and genus bounds for integral
// nondegenerate curves of degree d in P^n lying on no surface of degree < s.
//
// All routines are pure and total on their stated domains; they throw
// std::domain_error on precondition violations and std::logic_error on
// internal consistency failures (which indicate a bug, never bad input).

namespace liaison {

using Int = long;  // gmpxx interoperates with long directly

enum class Branch { Low, High };

// The parameter scheme attached to (d, n, s):
//   d-1 = s*m + eps            0 <= eps <= s-1
//   s-1 = (n-2)*w + v          0 <= v <= n-3
//   Low  (eps <  w*(n-1-v)):   eps = k*w + delta,          0 <= delta < w
//   High (eps >= w*(n-1-v)):   eps + n-2-v = k*(w+1) + delta, 0 <= delta < w+1
// e = 0 on the Low branch, 1 on the High branch.
struct GenusParameters {
  Int d = 0, n = 0, s = 0;
  Int m = 0, eps = 0;
  Int w = 0, v = 0;
  Branch branch = Branch::Low;
  Int k = 0, delta = 0;
  Int e = 0;
};

// Preconditions: n >= 3, s >= n-1, d >= s+1.
GenusParameters compute_parameters(Int d, Int n, Int s);

// The extremal first-difference profile of a hyperplane section.
// values[r] holds delta_h(r) for 0 <= r <= m+w+e; the profile vanishes
// outside that window.
struct DeltaHTable {
  GenusParameters params;
  std::vector<Int> values;

  Int at(Int r) const {
    if (r < 0 || r >= static_cast<Int>(values.size())) return 0;
    return values[static_cast<size_t>(r)];
  }
  Int support_end() const { return static_cast<Int>(values.size()) - 1; }
  Int sum() const;
};

// Requires m >= w: below that the piecewise cases fail to partition the
// window and no profile exists.  Asserts sum == d before returning.
DeltaHTable delta_h_table(const GenusParameters& p);

// Maximal arithmetic genus: sum_{r>=2} (r-1) * delta_h(r).
Int max_genus(const GenusParameters& p);
Int max_genus(Int d, Int n, Int s);

// Verbatim evaluation of the printed closed form for the bound, kept for
// auditability.  `discrepancy` is set when it disagrees with the
// delta-h sum; the flag is reported, never used to alter max_genus.
struct ClosedFormGenus {
  mpq_class value;
  bool discrepancy = false;
};
ClosedFormGenus closed_form_genus(const GenusParameters& p);

// Classical Castelnuovo bound for a nondegenerate curve of the given degree
// in P^ambient_dim: with deg-1 = m0*(ambient_dim-1) + eps0, the bound is
// C(m0,2)*(ambient_dim-1) + m0*eps0.  Requires deg >= ambient_dim >= 2.
Int castelnuovo_genus(Int deg, Int ambient_dim);

// The printed variant C(m0,2) + m0*eps0, recorded alongside the classical
// value for audit purposes.
Int castelnuovo_genus_printed(Int deg, Int ambient_dim);

// Smallest integer d strictly above
//   (2s/(n-2)) * prod_{i=1}^{n-2} ((n-1)!)^(1/(n-1-i)).
// The comparison is exact: both sides are raised to L = lcm(1..n-2) and
// compared as integers; ties lose (the inequality is strict).
mpz_class min_admissible_degree(Int n, Int s);

// Tail sum sum_{r=m+w-i+1}^{m+w+e} delta_h(r).  Requires 0 <= i <= min(w, m).
Int residual_h0_bound(const GenusParameters& p, Int i);

}  // namespace liaison
