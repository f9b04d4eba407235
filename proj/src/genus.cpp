#include "liaison/genus.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace liaison {

GenusParameters compute_parameters(Int d, Int n, Int s) {
  if (n < 3) throw std::domain_error("compute_parameters: n >= 3 required");
  if (s < n - 1) throw std::domain_error("compute_parameters: s >= n-1 required");
  if (d < s + 1) throw std::domain_error("compute_parameters: d >= s+1 required");

  GenusParameters p;
  p.d = d;
  p.n = n;
  p.s = s;
  p.m = (d - 1) / s;
  p.eps = (d - 1) - s * p.m;
  p.w = (s - 1) / (n - 2);
  p.v = (s - 1) - (n - 2) * p.w;

  if (p.eps < p.w * (n - 1 - p.v)) {
    p.branch = Branch::Low;
    p.e = 0;
    if (p.w == 0) {
      if (p.eps > 0)
        throw std::domain_error("compute_parameters: degenerate division eps = k*w + delta with w = 0");
      p.k = 0;
      p.delta = 0;
    } else {
      p.k = p.eps / p.w;
      p.delta = p.eps - p.k * p.w;
    }
  } else {
    p.branch = Branch::High;
    p.e = 1;
    Int lhs = p.eps + n - 2 - p.v;
    p.k = lhs / (p.w + 1);
    p.delta = lhs - p.k * (p.w + 1);
  }
  return p;
}

Int DeltaHTable::sum() const {
  Int total = 0;
  for (Int x : values) total += x;
  return total;
}

DeltaHTable delta_h_table(const GenusParameters& p) {
  if (p.m < p.w)
    throw std::domain_error(
        "delta_h_table: profile undefined for m < w (d too small relative to s)");

  DeltaHTable t;
  t.params = p;
  const Int end = p.m + p.w + p.e;
  t.values.resize(static_cast<size_t>(end) + 1);
  for (Int r = 0; r <= end; ++r) {
    Int val;
    if (r <= p.w)
      val = (p.n - 2) * r + 1;
    else if (r <= p.m)
      val = p.s;
    else if (r <= p.m + p.delta)
      val = p.s + p.k - (p.n - 2) * (r - p.m);
    else
      val = p.s + p.k - (p.n - 2) * (r - p.m) - 1;
    if (val < 0)
      throw std::logic_error("delta_h_table: negative profile value at r=" + std::to_string(r));
    t.values[static_cast<size_t>(r)] = val;
  }
  if (t.sum() != p.d)
    throw std::logic_error("delta_h_table: profile sums to " + std::to_string(t.sum()) +
                           ", expected d = " + std::to_string(p.d));
  return t;
}

Int max_genus(const GenusParameters& p) {
  DeltaHTable t = delta_h_table(p);
  Int g = 0;
  for (Int r = 2; r <= t.support_end(); ++r) g += (r - 1) * t.at(r);
  return g;
}

Int max_genus(Int d, Int n, Int s) { return max_genus(compute_parameters(d, n, s)); }

ClosedFormGenus closed_form_genus(const GenusParameters& p) {
  const mpq_class half(1, 2);
  mpq_class g = 1;
  g += half * p.d * (p.m + p.w - 2);
  g -= half * (p.m + 1) * (p.w - 3);
  g += half * p.v * p.m * (p.w + 1);
  mpq_class rho;
  if (p.branch == Branch::Low) {
    rho = half * (-p.delta) * (p.w - p.delta);
  } else {
    rho = half * p.eps - half * p.w * (p.n - 2 - p.v) - half * p.delta * (p.w - p.delta + 1);
  }
  g += rho;
  g.canonicalize();

  ClosedFormGenus out;
  out.value = g;
  out.discrepancy = (g != mpq_class(max_genus(p)));
  return out;
}

Int castelnuovo_genus(Int deg, Int ambient_dim) {
  if (ambient_dim < 2 || deg < ambient_dim)
    throw std::domain_error("castelnuovo_genus: requires deg >= ambient_dim >= 2");
  Int m0 = (deg - 1) / (ambient_dim - 1);
  Int eps0 = (deg - 1) - m0 * (ambient_dim - 1);
  return m0 * (m0 - 1) / 2 * (ambient_dim - 1) + m0 * eps0;
}

Int castelnuovo_genus_printed(Int deg, Int ambient_dim) {
  if (ambient_dim < 2 || deg < ambient_dim)
    throw std::domain_error("castelnuovo_genus_printed: requires deg >= ambient_dim >= 2");
  Int m0 = (deg - 1) / (ambient_dim - 1);
  Int eps0 = (deg - 1) - m0 * (ambient_dim - 1);
  return m0 * (m0 - 1) / 2 + m0 * eps0;
}

mpz_class min_admissible_degree(Int n, Int s) {
  if (n < 3) throw std::domain_error("min_admissible_degree: n >= 3 required");
  if (s < 1) throw std::domain_error("min_admissible_degree: s >= 1 required");

  // L = lcm(1..n-2); both sides of d*(n-2) > 2s * ((n-1)!)^(sum 1/j) are
  // raised to the L-th power so the comparison happens in Z.
  unsigned long L = 1;
  for (Int j = 2; j <= n - 2; ++j) L = std::lcm(L, static_cast<unsigned long>(j));

  mpz_class fact = 1;
  for (Int i = 2; i <= n - 1; ++i) fact *= i;

  unsigned long exp_sum = 0;  // sum_j L/j, an integer by choice of L
  for (Int j = 1; j <= n - 2; ++j) exp_sum += L / static_cast<unsigned long>(j);

  mpz_class rhs;
  mpz_class base = 2 * mpz_class(s);
  mpz_pow_ui(rhs.get_mpz_t(), base.get_mpz_t(), L);
  mpz_class fact_pow;
  mpz_pow_ui(fact_pow.get_mpz_t(), fact.get_mpz_t(), exp_sum);
  rhs *= fact_pow;

  auto admissible = [&](const mpz_class& d) {
    mpz_class lhs_base = d * (n - 2);
    mpz_class lhs;
    mpz_pow_ui(lhs.get_mpz_t(), lhs_base.get_mpz_t(), L);
    return lhs > rhs;  // strict: ties are not admissible
  };

  mpz_class hi = 1;
  while (!admissible(hi)) hi *= 2;
  mpz_class lo = hi / 2;  // lo is never admissible (0 when hi == 1)
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) / 2;
    if (admissible(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

Int residual_h0_bound(const GenusParameters& p, Int i) {
  if (i < 0 || i > p.w || i > p.m)
    throw std::domain_error("residual_h0_bound: requires 0 <= i <= min(w, m)");
  DeltaHTable t = delta_h_table(p);
  Int total = 0;
  for (Int r = p.m + p.w - i + 1; r <= p.m + p.w + p.e; ++r) total += t.at(r);
  return total;
}

}  // namespace liaison
