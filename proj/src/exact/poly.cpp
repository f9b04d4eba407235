#include "liaison/exact/poly.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

namespace liaison::exact {

static int exponent_sum(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

Polynomial Polynomial::monomial(int nv, Exponents e, const mpq_class& c) {
  if (static_cast<int>(e.size()) != nv)
    throw std::invalid_argument("Polynomial::monomial: exponent arity mismatch");
  Polynomial p{nv, {}};
  if (c != 0) p.terms.emplace(std::move(e), c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) d = std::max(d, exponent_sum(e));
  return d;
}

bool Polynomial::homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms) {
    int s = exponent_sum(e);
    if (d == -1) d = s;
    if (s != d) return false;
  }
  return true;
}

Polynomial& Polynomial::add_term(const Exponents& e, const mpq_class& c) {
  if (static_cast<int>(e.size()) != num_vars)
    throw std::invalid_argument("Polynomial::add_term: exponent arity mismatch");
  auto it = terms.find(e);
  if (it == terms.end()) {
    if (c != 0) terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
  return *this;
}

Polynomial Polynomial::times_monomial(const Exponents& e) const {
  Polynomial out{num_vars, {}};
  for (const auto& [exp, c] : terms) {
    Exponents sum(exp);
    for (int i = 0; i < num_vars; ++i) sum[static_cast<size_t>(i)] += e[static_cast<size_t>(i)];
    out.terms.emplace(std::move(sum), c);
  }
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out{num_vars, {}};
  for (const auto& [ea, ca] : terms)
    for (const auto& [eb, cb] : rhs.terms) {
      Exponents sum(ea);
      for (int i = 0; i < num_vars; ++i) sum[static_cast<size_t>(i)] += eb[static_cast<size_t>(i)];
      out.add_term(sum, ca * cb);
    }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  for (const auto& [e, c] : rhs.terms) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  for (const auto& [e, c] : rhs.terms) out.add_term(e, -c);
  return out;
}

Polynomial Polynomial::operator*(const mpq_class& c) const {
  Polynomial out{num_vars, {}};
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms) out.terms.emplace(e, coeff * c);
  return out;
}

mpq_class Polynomial::evaluate(std::span<const mpq_class> coords) const {
  if (static_cast<int>(coords.size()) != num_vars)
    throw std::invalid_argument("Polynomial::evaluate: coordinate arity mismatch");
  mpq_class total = 0;
  for (const auto& [e, c] : terms) {
    mpq_class val = c;
    for (int i = 0; i < num_vars; ++i) {
      for (int t = 0; t < e[static_cast<size_t>(i)]; ++t) val *= coords[static_cast<size_t>(i)];
    }
    total += val;
  }
  return total;
}

Polynomial Polynomial::primitive_integer_form() const {
  if (is_zero()) return *this;
  mpz_class den = 1;
  for (const auto& [e, c] : terms)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  mpz_class content = 0;
  std::vector<std::pair<Exponents, mpz_class>> scaled;
  scaled.reserve(terms.size());
  for (const auto& [e, c] : terms) {
    mpq_class q = c * den;
    q.canonicalize();
    scaled.emplace_back(e, q.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.back().second.get_mpz_t());
  }
  Polynomial out{num_vars, {}};
  for (auto& [e, z] : scaled) {
    mpz_class reduced;
    mpz_divexact(reduced.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
    out.terms.emplace(std::move(e), mpq_class(reduced));
  }
  return out;
}

namespace {

void enumerate_monomials(int nv, int k, Exponents& current, int pos,
                         std::vector<Exponents>& out) {
  if (pos == nv - 1) {
    current[static_cast<size_t>(pos)] = k;
    out.push_back(current);
    return;
  }
  for (int e = k; e >= 0; --e) {
    current[static_cast<size_t>(pos)] = e;
    enumerate_monomials(nv, k - e, current, pos + 1, out);
  }
}

}  // namespace

const std::vector<Exponents>& monomial_basis(int nv, int k) {
  static std::map<std::pair<int, int>, std::vector<Exponents>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(nv, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (nv < 1 || k < 0) throw std::invalid_argument("monomial_basis: nv >= 1, k >= 0 required");
  std::vector<Exponents> basis;
  Exponents current(static_cast<size_t>(nv), 0);
  enumerate_monomials(nv, k, current, 0, basis);
  return cache.emplace(key, std::move(basis)).first->second;
}

long long monomial_count(int nv, int k) {
  // C(k + nv - 1, nv - 1)
  long long num = 1, den = 1;
  for (int i = 1; i <= nv - 1; ++i) {
    num *= k + i;
    den *= i;
  }
  return num / den;
}

std::vector<mpq_class> coefficient_row_q(const Polynomial& p, int k) {
  if (!p.homogeneous()) throw std::invalid_argument("coefficient_row: inhomogeneous polynomial");
  if (!p.is_zero() && p.degree() != k)
    throw std::invalid_argument("coefficient_row: degree mismatch");
  const auto& basis = monomial_basis(p.num_vars, k);
  std::vector<mpq_class> row(basis.size(), mpq_class(0));
  for (const auto& [e, c] : p.terms) {
    // basis is enumerated in descending lex order
    auto it = std::lower_bound(basis.begin(), basis.end(), e, std::greater<Exponents>());
    if (it == basis.end() || *it != e)
      throw std::logic_error("coefficient_row: monomial not in basis");
    row[static_cast<size_t>(it - basis.begin())] = c;
  }
  return row;
}

ZRow coefficient_row(const Polynomial& p, int k) {
  auto q = coefficient_row_q(p.primitive_integer_form(), k);
  ZRow row(q.size());
  for (size_t i = 0; i < q.size(); ++i) row[i] = q[i].get_num();  // denominators are 1
  return row;
}

Polynomial polynomial_from_row(int nv, int k, const ZRow& row) {
  const auto& basis = monomial_basis(nv, k);
  if (row.size() != basis.size())
    throw std::invalid_argument("polynomial_from_row: size mismatch");
  Polynomial p{nv, {}};
  for (size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) p.terms.emplace(basis[i], mpq_class(row[i]));
  return p;
}

GradedIdeal make_graded_ideal(int nv, std::vector<Polynomial> gens) {
  for (const auto& g : gens) {
    if (g.num_vars != nv) throw std::invalid_argument("make_graded_ideal: arity mismatch");
    if (g.is_zero()) throw std::invalid_argument("make_graded_ideal: zero generator");
    if (!g.homogeneous()) throw std::invalid_argument("make_graded_ideal: inhomogeneous generator");
  }
  return GradedIdeal{nv, std::move(gens)};
}

ZMat ideal_graded_span(const GradedIdeal& ideal, int k) {
  ZMat rows;
  for (const auto& g : ideal.generators) {
    const int dg = g.degree();
    if (dg > k) continue;
    Polynomial gi = g.primitive_integer_form();
    for (const auto& mono : monomial_basis(ideal.num_vars, k - dg))
      rows.push_back(coefficient_row(gi.times_monomial(mono), k));
  }
  return rows;
}

int ideal_graded_dimension(const GradedIdeal& ideal, int k) {
  if (k < 0) return 0;
  return rank(ideal_graded_span(ideal, k), static_cast<size_t>(monomial_count(ideal.num_vars, k)));
}

int colon_graded_dimension(const GradedIdeal& i_ideal, const GradedIdeal& j_ideal, int k,
                           ZMat* basis) {
  if (i_ideal.num_vars != j_ideal.num_vars)
    throw std::invalid_argument("colon_graded_dimension: ideals in different rings");
  if (k < 0) return 0;
  const int nv = i_ideal.num_vars;
  const auto& xs = monomial_basis(nv, k);
  const size_t dim_rk = xs.size();

  // Constraint rows on the coefficient vector of f: for every generator g
  // of J, the coordinates of f*g modulo the degree-(k+deg g) piece of I
  // must vanish.  Column j of each block is the reduced image of x_j * g;
  // per-column scales are tracked so kernel vectors can be unscaled back
  // into genuine colon forms.
  ZMat constraints;
  std::vector<std::vector<mpq_class>> col_scale_blocks;
  std::vector<size_t> block_rows;

  for (const auto& g : j_ideal.generators) {
    const int m = k + g.degree();
    Echelon piece(ideal_graded_span(i_ideal, m),
                  static_cast<size_t>(monomial_count(nv, m)));
    Polynomial gi = g.primitive_integer_form();

    std::vector<ZRow> reduced(dim_rk);
    std::vector<mpq_class> scales(dim_rk);
    for (size_t j = 0; j < dim_rk; ++j)
      reduced[j] = piece.residual(coefficient_row(gi.times_monomial(xs[j]), m), &scales[j]);

    const size_t coords = reduced.empty() ? 0 : reduced[0].size();
    for (size_t c = 0; c < coords; ++c) {
      ZRow row(dim_rk);
      bool nonzero = false;
      for (size_t j = 0; j < dim_rk; ++j) {
        row[j] = reduced[j][c];
        nonzero = nonzero || row[j] != 0;
      }
      if (!nonzero) continue;
      constraints.push_back(std::move(row));
      block_rows.push_back(col_scale_blocks.size());
    }
    col_scale_blocks.push_back(std::move(scales));
  }

  // Row scaling: each constraint row may be divided freely, but its entries
  // carry the per-column scales of its block.  Unscale first, then the row
  // is an honest linear condition on f and can be normalized.
  ZMat clean;
  clean.reserve(constraints.size());
  for (size_t r = 0; r < constraints.size(); ++r) {
    const auto& scales = col_scale_blocks[block_rows[r]];
    std::vector<mpq_class> qrow(dim_rk);
    for (size_t j = 0; j < dim_rk; ++j) {
      if (constraints[r][j] != 0) qrow[j] = mpq_class(constraints[r][j]) / scales[j];
      qrow[j].canonicalize();
    }
    ZRow scaled;
    {
      mpz_class den = 1;
      for (const auto& q : qrow) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
      scaled.resize(dim_rk);
      for (size_t j = 0; j < dim_rk; ++j) {
        mpq_class s = qrow[j] * den;
        s.canonicalize();
        scaled[j] = s.get_num();
      }
      normalize_row(scaled);
    }
    clean.push_back(std::move(scaled));
  }

  ZMat kernel = kernel_basis(clean, dim_rk);
  if (basis) *basis = kernel;
  return static_cast<int>(kernel.size());
}

}  // namespace liaison::exact
