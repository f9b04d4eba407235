#include "liaison/exact/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>
#include <string>

#include "liaison/linkage.hpp"

namespace liaison::exact {

namespace {

Polynomial mono(int nv, Exponents e, int coeff = 1) {
  return Polynomial::monomial(nv, std::move(e), coeff);
}

}  // namespace

const char* surface_name(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::Quadric: return "quadric";
    case SurfaceKind::Cone: return "cone";
    case SurfaceKind::CubicScroll: return "cubic-scroll";
  }
  return "?";
}

const char* mode_name(LinkMode mode) {
  return mode == LinkMode::PointSplit ? "point-split" : "ideal-colon";
}

SurfaceModel surface_model(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::Quadric: {
      // x0*x3 - x1*x2 = 0 in P^3
      Polynomial q = mono(4, {1, 0, 0, 1}) - mono(4, {0, 1, 1, 0});
      return SurfaceModel{kind, 3, 2, make_graded_ideal(4, {q})};
    }
    case SurfaceKind::Cone: {
      // x0*x2 - x1^2 = 0 in P^3, vertex (0:0:0:1)
      Polynomial q = mono(4, {1, 0, 1, 0}) - mono(4, {0, 2, 0, 0});
      return SurfaceModel{kind, 3, 2, make_graded_ideal(4, {q})};
    }
    case SurfaceKind::CubicScroll: {
      // 2x2 minors of [x0 x2 x3; x1 x3 x4]: the scroll S(1,2) in P^4
      Polynomial g1 = mono(5, {1, 0, 0, 1, 0}) - mono(5, {0, 1, 1, 0, 0});
      Polynomial g2 = mono(5, {1, 0, 0, 0, 1}) - mono(5, {0, 1, 0, 1, 0});
      Polynomial g3 = mono(5, {0, 0, 0, 2, 0}) - mono(5, {0, 0, 1, 0, 1});
      return SurfaceModel{kind, 4, 3, make_graded_ideal(5, {g1, g2, g3})};
    }
  }
  throw std::logic_error("surface_model: unknown kind");
}

QuadricRuleParams default_quadric_params(Int a1, Int a2) {
  QuadricRuleParams p;
  for (Int j = 0; j < a1 + a2; ++j) {
    p.a_family.push_back(P1{mpq_class(j), 1});
    p.b_family.push_back(P1{mpq_class(j), 1});
  }
  return p;
}

namespace {

void check_distinct(const std::vector<P1>& family, const char* name) {
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j) {
      // (x:y) == (x':y') iff x*y' - x'*y == 0
      if (family[i].x * family[j].y - family[j].x * family[i].y == 0)
        throw std::domain_error(std::string("duplicate ruling parameter in the ") + name +
                                " family");
    }
}

ProjectivePoint segre_crossing(const P1& a, const P1& b) {
  return ProjectivePoint({a.x * b.x, a.x * b.y, a.y * b.x, a.y * b.y});
}

void apply_selector(LinkageInstance& inst, const std::vector<int>& selector) {
  std::vector<int> sorted = selector;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::domain_error("split selector: repeated index");
  inst.z1_index = sorted;
  inst.z1 = inst.z->subset(sorted);
  inst.z2 = inst.z->complement(sorted);
}

}  // namespace

LinkageInstance build_quadric_ruled_ci(Int a1, Int a2, const QuadricRuleParams& params,
                                       const std::vector<int>& z1_selector) {
  if (a1 < 1 || a2 < 1) throw std::domain_error("build_quadric_ruled_ci: a1, a2 >= 1 required");
  if (static_cast<Int>(params.a_family.size()) != a1 + a2 ||
      static_cast<Int>(params.b_family.size()) != a1 + a2)
    throw std::domain_error("build_quadric_ruled_ci: need a1+a2 parameters per family");
  check_distinct(params.a_family, "A");
  check_distinct(params.b_family, "B");

  SurfaceModel w = surface_model(SurfaceKind::Quadric);
  LinkageInstance inst;
  inst.surface = SurfaceKind::Quadric;
  inst.mode = LinkMode::PointSplit;
  inst.a1 = a1;
  inst.a2 = a2;
  inst.iw = w.ideal;
  inst.z = PointSet(3);
  inst.z1 = PointSet(3);

  // First curve owns the leading a1 parameters of each family.  Crossings:
  // A-rules of one curve against B-rules of the other.
  for (Int i = 0; i < a1; ++i)
    for (Int j = 0; j < a2; ++j)
      inst.z->add(segre_crossing(params.a_family[size_t(i)], params.b_family[size_t(a1 + j)]));
  for (Int j = 0; j < a2; ++j)
    for (Int i = 0; i < a1; ++i)
      inst.z->add(segre_crossing(params.a_family[size_t(a1 + j)], params.b_family[size_t(i)]));

  apply_selector(inst, z1_selector);
  return inst;
}

LinkageInstance build_cubic_scroll_ci(Int a1, Int a2, const std::vector<int>& z1_selector) {
  if (a1 < 1 || a2 < 1) throw std::domain_error("build_cubic_scroll_ci: a1, a2 >= 1 required");

  SurfaceModel w = surface_model(SurfaceKind::CubicScroll);
  LinkageInstance inst;
  inst.surface = SurfaceKind::CubicScroll;
  inst.mode = LinkMode::PointSplit;
  inst.a1 = a1;
  inst.a2 = a2;
  inst.iw = w.ideal;
  inst.z = PointSet(4);
  inst.z1 = PointSet(4);

  // Ruled coordinates on S(1,2): a point over base (s:t) with fiber
  // coordinate (l:m) sits at (l*s, l*t, m*s^2, m*s*t, m*t^2).
  auto embed = [&](const P1& base, const P1& fiber) {
    const mpq_class &s = base.x, &t = base.y, &l = fiber.x, &m = fiber.y;
    inst.ruled_coords.emplace_back(base, fiber);
    return ProjectivePoint({l * s, l * t, m * s * s, m * s * t, m * t * t});
  };

  // Each curve: conic sections {l + m*(p*s + p^2*t) = 0} with p a power of
  // three (pairwise base crossings then land at distinct -(p_i+p_j)), plus
  // rulings at positive integer base values.
  std::vector<mpq_class> conic1, conic2, fiber1, fiber2;
  mpq_class pw = 3;
  for (Int i = 0; i < a1; ++i, pw *= 3) conic1.push_back(pw);
  for (Int j = 0; j < a2; ++j, pw *= 3) conic2.push_back(pw);
  for (Int i = 0; i < a1; ++i) fiber1.push_back(i + 1);
  for (Int j = 0; j < a2; ++j) fiber2.push_back(a1 + j + 1);

  auto conic_conic = [&](const mpq_class& p, const mpq_class& q) {
    P1 base{-(p + q), 1};
    P1 fiber{p * base.x + p * p, -1};  // l:m on the first conic
    return embed(base, fiber);
  };
  auto conic_fiber = [&](const mpq_class& conic_p, const mpq_class& fiber_q) {
    P1 base{fiber_q, 1};
    P1 fiber{conic_p * fiber_q + conic_p * conic_p, -1};
    return embed(base, fiber);
  };

  for (const auto& p : conic1)
    for (const auto& q : conic2) inst.z->add(conic_conic(p, q));
  for (const auto& p : conic1)
    for (const auto& q : fiber2) inst.z->add(conic_fiber(p, q));
  for (const auto& p : conic2)
    for (const auto& q : fiber1) inst.z->add(conic_fiber(p, q));

  apply_selector(inst, z1_selector);
  return inst;
}

PointSet default_surface_points(SurfaceKind kind, int count) {
  if (count < 0) throw std::domain_error("default_surface_points: count >= 0 required");
  if (kind == SurfaceKind::Cone) {
    // (u^2, u, 1, t): smooth part of the cone x0*x2 = x1^2
    PointSet z(3);
    for (int j = 0; j < count; ++j)
      z.add(ProjectivePoint({mpq_class(j) * j, mpq_class(j), 1, mpq_class(j + 1)}));
    return z;
  }
  if (kind == SurfaceKind::Quadric) {
    // Segre image of ((j:1), (j+1:1))
    PointSet z(3);
    for (int j = 0; j < count; ++j)
      z.add(segre_crossing(P1{mpq_class(j), 1}, P1{mpq_class(j + 1), 1}));
    return z;
  }
  throw std::domain_error("default_surface_points: unsupported surface");
}

namespace {

bool on_surface(const SurfaceModel& w, const ProjectivePoint& pt) {
  for (const auto& g : w.ideal.generators)
    if (g.evaluate(pt.coords) != 0) return false;
  return true;
}

// h_{R/I}(k) for I spanned by the given generators.
int quotient_dimension(const GradedIdeal& ideal, int k) {
  return static_cast<int>(monomial_count(ideal.num_vars, k)) - ideal_graded_dimension(ideal, k);
}

}  // namespace

LinkageInstance build_random_ci_through_points(SurfaceKind kind, Int a1, Int a2,
                                               const PointSet& z1, std::uint64_t seed) {
  if (kind == SurfaceKind::CubicScroll)
    throw std::domain_error(
        "build_random_ci_through_points: ideal-colon mode is restricted to the quadric and the "
        "cone (the cubic-scroll twist is not an O(i) twist)");
  if (a1 < 1 || a2 < 1 || a1 > a2)
    throw std::domain_error("build_random_ci_through_points: need 1 <= a1 <= a2");
  SurfaceModel w = surface_model(kind);
  if (z1.ambient_dim != w.ambient_dim)
    throw std::domain_error("build_random_ci_through_points: ambient dimension mismatch");
  if (z1.points.empty())
    throw std::domain_error("build_random_ci_through_points: Z1 must be nonempty");
  for (const auto& pt : z1.points) {
    if (!on_surface(w, pt))
      throw std::domain_error("build_random_ci_through_points: Z1 point off the surface");
  }
  if (kind == SurfaceKind::Cone) {
    const ProjectivePoint vertex({0, 0, 0, 1});
    for (const auto& pt : z1.points)
      if (pt == vertex)
        throw std::domain_error("build_random_ci_through_points: Z1 meets the cone vertex");
  }

  const int nv = w.ambient_dim + 1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);

  auto sample_form = [&](Int deg) {
    ZMat through = vanishing_forms(z1, static_cast<int>(deg));
    const size_t cols = static_cast<size_t>(monomial_count(nv, static_cast<int>(deg)));
    Echelon on_w(ideal_graded_span(w.ideal, static_cast<int>(deg)), cols);
    if (static_cast<int>(through.size()) <= on_w.rank())
      throw std::domain_error(
          "build_random_ci_through_points: infeasible, every degree-" + std::to_string(deg) +
          " form through Z1 contains the surface");
    for (int attempt = 0; attempt < 64; ++attempt) {
      ZRow combo(cols, 0);
      for (const auto& basis_row : through) {
        const int c = coeff(rng);
        if (c == 0) continue;
        for (size_t j = 0; j < cols; ++j) combo[j] += c * basis_row[j];
      }
      if (is_zero(combo) || on_w.contains(combo)) continue;
      return polynomial_from_row(nv, static_cast<int>(deg), combo);
    }
    throw std::domain_error("build_random_ci_through_points: could not sample a form off W");
  };

  const Int deg_z = 2 * a1 * a2;
  for (int attempt = 0; attempt < 32; ++attempt) {
    Polynomial f1 = sample_form(a1);
    Polynomial f2 = sample_form(a2);
    std::vector<Polynomial> gens = w.ideal.generators;
    gens.push_back(f1);
    gens.push_back(f2);
    GradedIdeal iz = make_graded_ideal(nv, std::move(gens));
    // A proper c.i. has Hilbert function stabilized at 2*a1*a2 by degree
    // a1+a2-1; shared components make it larger or still growing.
    const int kstar = static_cast<int>(a1 + a2) - 1;
    if (quotient_dimension(iz, kstar) != deg_z) continue;
    if (quotient_dimension(iz, kstar + 1) != deg_z) continue;

    LinkageInstance inst;
    inst.surface = kind;
    inst.mode = LinkMode::IdealColon;
    inst.a1 = a1;
    inst.a2 = a2;
    inst.seed = seed;
    inst.iw = w.ideal;
    inst.z1 = z1;
    inst.iz = std::move(iz);
    inst.iz1 = minimal_point_ideal(z1);
    return inst;
  }
  throw std::domain_error(
      "build_random_ci_through_points: nongeneric after retry budget, every sampled pair shared "
      "components");
}

namespace {

// h0 of O(i*H + R) on S(1,2): sections are sum_j l^(i-j) m^j g_j(s,t) with
// deg g_j = 1 + i + j.
Int scroll_twist_h0(Int i) {
  Int total = 0;
  for (Int j = 0; j <= i; ++j) total += i + j + 2;
  return total;
}

// Evaluation of the O(i*H + R) section basis at the ruled coordinates of the
// given points; returns the number of independent conditions.
int scroll_twist_conditions(const LinkageInstance& inst, const std::vector<int>& which, Int i) {
  std::vector<std::vector<mpq_class>> rows;
  for (int idx : which) {
    const auto& [base, fiber] = inst.ruled_coords[static_cast<size_t>(idx)];
    std::vector<mpq_class> row;
    for (Int j = 0; j <= i; ++j) {
      mpq_class fiber_part = 1;
      for (Int t = 0; t < i - j; ++t) fiber_part *= fiber.x;
      for (Int t = 0; t < j; ++t) fiber_part *= fiber.y;
      const Int deg_st = 1 + i + j;
      for (Int alpha = deg_st; alpha >= 0; --alpha) {
        mpq_class base_part = 1;
        for (Int t = 0; t < alpha; ++t) base_part *= base.x;
        for (Int t = 0; t < deg_st - alpha; ++t) base_part *= base.y;
        row.push_back(fiber_part * base_part);
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return 0;
  return rank(scale_rows(rows), rows.empty() ? 0 : rows[0].size());
}

std::vector<int> complement_indices(size_t total, const std::vector<int>& chosen) {
  std::vector<bool> in(total, false);
  for (int i : chosen) in[static_cast<size_t>(i)] = true;
  std::vector<int> out;
  for (size_t i = 0; i < total; ++i)
    if (!in[i]) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace

VerificationReport verify_duality(const LinkageInstance& inst, const std::vector<Int>& i_range) {
  const auto start = std::chrono::steady_clock::now();
  const Int amin = std::min(inst.a1, inst.a2);
  for (Int i : i_range)
    if (i < 0 || i >= amin)
      throw std::domain_error("verify_duality: twist i = " + std::to_string(i) +
                              " outside 0 <= i < min(a1, a2)");

  VerificationReport rep;
  rep.surface = inst.surface;
  rep.mode = inst.mode;
  rep.a1 = inst.a1;
  rep.a2 = inst.a2;
  rep.seed = inst.seed;
  rep.z1_index = inst.z1_index;
  rep.deg_z1 = static_cast<Int>(inst.z1.size());
  rep.twist_note = (inst.surface == SurfaceKind::CubicScroll)
                       ? "omega_W(i+ch_W) = O_W(i,1); sections of i*H+R in ruled coordinates"
                       : "omega_W(i+ch_W) = O_W(i) via f-2 = 0 and H ~ f*R";

  const Int c = inst.c();
  auto h_z1 = [&](Int k) { return static_cast<Int>(hilbert_function(inst.z1, static_cast<int>(k))); };

  rep.pass = true;
  for (Int i : i_range) {
    Int lhs = 0;
    switch (inst.mode) {
      case LinkMode::PointSplit: {
        if (inst.surface == SurfaceKind::CubicScroll) {
          std::vector<int> z2_idx = complement_indices(inst.z->size(), inst.z1_index);
          lhs = scroll_twist_h0(i) - scroll_twist_conditions(inst, z2_idx, i);
        } else {
          Int all = monomial_count(4, static_cast<int>(i));
          Int vanish = all - hilbert_function(*inst.z2, static_cast<int>(i));
          lhs = vanish - ideal_graded_dimension(inst.iw, static_cast<int>(i));
        }
        break;
      }
      case LinkMode::IdealColon: {
        Int colon = colon_graded_dimension(*inst.iz, *inst.iz1, static_cast<int>(i));
        lhs = colon - ideal_graded_dimension(inst.iw, static_cast<int>(i));
        break;
      }
    }
    Int rhs = duality_rhs(rep.deg_z1, h_z1, c, LinkageInstance::chW, i);
    VerificationRow row{i, lhs, rhs, lhs == rhs};
    rep.pass = rep.pass && row.equal;
    rep.rows.push_back(row);
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

}  // namespace liaison::exact
