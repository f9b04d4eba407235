#include "liaison/linkage.hpp"

#include <stdexcept>
#include <string>

namespace liaison {

Int linked_genus(Int p1, Int pY, Int deg_k_restricted) {
  return p1 - pY + deg_k_restricted + 1;
}

Int linked_genus_scroll(const LinkageData& data, Int f) {
  if (data.deg1 && *data.deg1 + data.deg2 != data.a * data.b * f)
    throw std::domain_error("linked_genus_scroll: deg1 + deg2 != a*b*f (got " +
                            std::to_string(*data.deg1) + " + " + std::to_string(data.deg2) +
                            " on a c.i. of degree " + std::to_string(data.a * data.b * f) + ")");
  Int deg_k = (data.a + data.b - 3) * data.deg2 + (data.n - 4) * data.degR2;
  return linked_genus(data.p1, data.pY, deg_k);
}

Int duality_rhs(Int deg_z1, const std::function<Int(Int)>& h_z1, Int c, Int chW, Int i) {
  Int value = deg_z1 - h_z1(c - chW - i);
  if (value < 0)
    throw std::domain_error("duality_rhs: negative value, inconsistent Hilbert function");
  return value;
}

// Shared tail of both worked constructions: C linked to its residual by the
// c.i. of type (w+1, m+1) on a 3-fold of degree n-2, with the residual
// supported on ruling planes so that deg(R|C) accounts for the whole
// conservation budget (w+1)(m+1).
static Int chain_cross_check(const GenusParameters& p, Int residual_genus, Int residual_degree) {
  const Int f = p.n - 2;
  const Int a = p.w + 1, b = p.m + 1;
  CiCurve ci = ci_curve_invariants(f, a, b);
  if (p.d + residual_degree != ci.degree)
    throw std::logic_error("linkage chain: degree conservation failed");
  LinkageData data;
  data.a = a;
  data.b = b;
  data.n = p.n;
  data.deg2 = p.d;
  data.degR2 = a * b;
  data.p1 = residual_genus;
  data.pY = ci.genus;
  data.deg1 = residual_degree;
  return linked_genus_scroll(data, f);
}

static Int plane_curve_genus(Int deg) { return (deg - 1) * (deg - 2) / 2; }

Example1Report classify_example1(Int d, Int n, Int s) {
  Example1Report rep;
  rep.params = compute_parameters(d, n, s);
  const GenusParameters& p = rep.params;

  rep.applicable = (p.eps >= s - 2 - p.w) && (p.eps <= s - 2);
  if (!rep.applicable) return rep;

  rep.deg_c_prime = s - p.eps - 1;
  rep.genus_c_prime = plane_curve_genus(rep.deg_c_prime);
  rep.plane_components = n - 3 - p.v;
  rep.hr_variant = (p.v == 0);
  if (rep.hr_variant) {
    rep.composition = "C' plus the c.i. of a degree-" + std::to_string(p.m + 1) +
                      " hypersurface on a divisor ~ H - R";
    return rep;  // component intersections unmodelled, no cross-check
  }
  rep.composition = "C' plus " + std::to_string(rep.plane_components) +
                    " plane curve(s) of degree " + std::to_string(p.m + 1) +
                    " on distinct ruling planes";

  // Disjoint components: p_a of the union drops by one per extra piece.
  Int residual_genus = rep.genus_c_prime +
                       rep.plane_components * (p.m * (p.m - 1) / 2) - rep.plane_components;
  Int residual_degree = rep.deg_c_prime + rep.plane_components * (p.m + 1);
  rep.genus_cross_check = chain_cross_check(p, residual_genus, residual_degree);
  return rep;
}

Example2Report example2_construction(Int d, Int n, Int s) {
  GenusParameters p = compute_parameters(d, n, s);
  if (p.v == n - 3) return example2_construction(d, n, s, Example2Variant::VEqualsNMinus3);
  if (p.v == n - 4) return example2_construction(d, n, s, Example2Variant::VEqualsNMinus4);
  throw std::domain_error("example2_construction: unmodeled variant, v = " +
                          std::to_string(p.v) + " is neither n-3 nor n-4");
}

Example2Report example2_construction(Int d, Int n, Int s, Example2Variant forced) {
  Example2Report rep;
  rep.params = compute_parameters(d, n, s);
  const GenusParameters& p = rep.params;
  rep.variant = forced;

  const bool is_n3 = (forced == Example2Variant::VEqualsNMinus3);
  if (is_n3 && p.v != n - 3)
    throw std::domain_error("example2_construction: variant mismatch, v = " +
                            std::to_string(p.v) + " != n-3");
  if (!is_n3 && p.v != n - 4)
    throw std::domain_error("example2_construction: variant mismatch, v = " +
                            std::to_string(p.v) + " != n-4");

  rep.deg_d = p.eps + (is_n3 ? 1 : 2) - (n - 3) * (p.w + 1);
  if (rep.deg_d < 0 || rep.deg_d > p.w)
    throw std::domain_error("example2_construction: deg D = " + std::to_string(rep.deg_d) +
                            " outside [0, w]");
  rep.s_class = is_n3 ? FreeClass{p.w + 1, 0} : FreeClass{p.w + 1, -1};
  rep.deg_c_prime = s - p.eps - 1;

  Int residual_degree;
  if (is_n3) {
    // C' alone; its plane-curve genus is the printed Clebsch value.
    rep.partner_genus = plane_curve_genus(rep.deg_c_prime);
    rep.degree_identity = (d == s * (p.m + 1) - s + p.eps + 1);
    residual_degree = rep.deg_c_prime;
  } else {
    // C'' = C' plus a disjoint plane curve of degree m+1 (Noether's value).
    rep.partner_genus = plane_curve_genus(rep.deg_c_prime) + p.m * (p.m - 1) / 2 - 1;
    rep.degree_identity = (d == s * (p.m + 1) - rep.deg_c_prime);
    residual_degree = rep.deg_c_prime + (p.m + 1);
  }
  if (!rep.degree_identity)
    throw std::logic_error("example2_construction: degree identity failed");
  rep.genus_cross_check = chain_cross_check(p, rep.partner_genus, residual_degree);
  return rep;
}

}  // namespace liaison
