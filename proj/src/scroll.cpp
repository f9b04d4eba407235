#include "liaison/scroll.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace liaison {

Int Scroll::f() const { return std::accumulate(a.begin(), a.end(), Int{0}); }

Int Scroll::vertex_dim() const {
  if (smooth()) throw std::domain_error("scroll: smooth scrolls have no vertex");
  return zeros - 1;
}

Int Scroll::vertex_codim() const { return r() - vertex_dim(); }

Scroll make_scroll(Int n, std::vector<Int> a) {
  if (a.empty()) throw std::domain_error("make_scroll: empty splitting type");
  for (Int x : a)
    if (x < 0) throw std::domain_error("make_scroll: splitting entries must be >= 0");
  std::sort(a.begin(), a.end());
  if (a.back() < 1) throw std::domain_error("make_scroll: degenerate scroll (all entries zero)");

  Scroll s;
  s.n = n;
  s.a = std::move(a);
  s.zeros = static_cast<Int>(std::count(s.a.begin(), s.a.end(), Int{0}));
  if (n != s.f() + s.r() - 1)
    throw std::domain_error("make_scroll: dimension mismatch, need n = f + r - 1 (got n=" +
                            std::to_string(n) + ", f=" + std::to_string(s.f()) +
                            ", r=" + std::to_string(s.r()) + ")");
  return s;
}

ClassGroup class_group(const Scroll& x) {
  ClassGroup g;
  if (x.cone_law()) {
    g.cyclic = true;
    g.relation_f = x.f();
  }
  return g;
}

Int intersection_number(const Scroll& x, std::span<const ResolutionClass> classes) {
  if (static_cast<Int>(classes.size()) != x.r())
    throw std::domain_error("intersection_number: expected exactly r = " +
                            std::to_string(x.r()) + " classes");
  Int h_product = 1;
  for (const auto& c : classes) h_product *= c.h;
  Int total = x.f() * h_product;
  for (size_t j = 0; j < classes.size(); ++j) {
    Int partial = classes[j].r;
    for (size_t i = 0; i < classes.size(); ++i)
      if (i != j) partial *= classes[i].h;
    total += partial;
  }
  return total;  // terms with two or more R~ factors vanish
}

DivisorClass canonical_class(const Scroll& x) {
  FreeClass k{-x.r(), x.f() - 2};
  if (x.cone_law()) return to_cone(x, k);
  return k;
}

Int canonical_characteristic(const Scroll& x) { return x.r(); }

Int divisor_degree(const Scroll& x, const DivisorClass& cls) {
  if (std::holds_alternative<FreeClass>(cls)) {
    if (x.cone_law())
      throw std::domain_error("divisor_degree: FREE class on a scroll with cyclic class group");
    const auto& fc = std::get<FreeClass>(cls);
    return fc.h * x.f() + fc.r;
  }
  if (!x.cone_law())
    throw std::domain_error("divisor_degree: CONE class on a scroll with free class group");
  return std::get<ConeClass>(cls).r;
}

ConeClass to_cone(const Scroll& x, const FreeClass& cls) {
  if (!x.cone_law())
    throw std::domain_error("to_cone: scroll has no H ~ f R relation");
  return ConeClass{cls.h * x.f() + cls.r};
}

ResolutionClass integral_total_transform(const Scroll& x, Int d) {
  if (!x.cone_law())
    throw std::domain_error("integral_total_transform: requires vertex of codimension 2");
  if (d < 0) throw std::domain_error("integral_total_transform: requires d >= 0");
  const Int f = x.f();
  // d-1 = k*f + h with 0 <= h < f (k = -1 exactly when d = 0)
  Int k = (d - 1 >= 0) ? (d - 1) / f : -1;
  Int h = (d - 1) - k * f;
  return ResolutionClass{k + 1, -(f - h - 1)};
}

static void require_line_vertex_threefold(const Scroll& x, const char* who) {
  if (x.r() != 3 || x.smooth() || x.vertex_dim() != 1)
    throw std::domain_error(std::string(who) + ": requires a 3-fold whose vertex is a line");
}

ResolutionClass proper_transform_line_vertex(const Scroll& x, Int c, Int a) {
  require_line_vertex_threefold(x, "proper_transform_line_vertex");
  if (a < 0 || a > c)
    throw std::domain_error("proper_transform_line_vertex: requires 0 <= a <= c");
  return ResolutionClass{c - a, x.f() * a};
}

Int vertex_multiplicity(const Scroll& x, Int c1, Int a1, Int c2, Int a2) {
  require_line_vertex_threefold(x, "vertex_multiplicity");
  const ResolutionClass hyper{1, 0};
  ResolutionClass total1 = integral_total_transform(x, c1 * x.f());
  ResolutionClass total2 = integral_total_transform(x, c2 * x.f());
  ResolutionClass proper1 = proper_transform_line_vertex(x, c1, a1);
  ResolutionClass proper2 = proper_transform_line_vertex(x, c2, a2);

  const ResolutionClass tt[3] = {total1, total2, hyper};
  const ResolutionClass pp[3] = {proper1, proper2, hyper};
  Int mult = intersection_number(x, tt) - intersection_number(x, pp);
  if (mult != a1 * a2 * x.f())
    throw std::logic_error("vertex_multiplicity: lattice value " + std::to_string(mult) +
                           " != closed form a1*a2*f = " + std::to_string(a1 * a2 * x.f()));
  return mult;
}

Int vertex_multiplicity_ruling(const Scroll& x, Int c1, Int a1) {
  require_line_vertex_threefold(x, "vertex_multiplicity_ruling");
  const ResolutionClass hyper{1, 0};
  ResolutionClass total1 = integral_total_transform(x, c1 * x.f());
  ResolutionClass total_r = integral_total_transform(x, 1);  // ruling plane ~ R
  ResolutionClass proper1 = proper_transform_line_vertex(x, c1, a1);
  const ResolutionClass proper_r{0, 1};

  const ResolutionClass tt[3] = {total1, total_r, hyper};
  const ResolutionClass pp[3] = {proper1, proper_r, hyper};
  Int mult = intersection_number(x, tt) - intersection_number(x, pp);
  if (mult != a1)
    throw std::logic_error("vertex_multiplicity_ruling: lattice value " + std::to_string(mult) +
                           " != closed form a1 = " + std::to_string(a1));
  return mult;
}

CiCurve ci_curve_invariants(Int f, Int a, Int b) {
  if (f < 1) throw std::domain_error("ci_curve_invariants: f >= 1 required");
  if (a < 1 || b < 1) throw std::domain_error("ci_curve_invariants: a, b >= 1 required");
  Int twice = a * b * ((a + b - 3) * f + f - 2);
  if (twice % 2 != 0)
    throw std::logic_error("ci_curve_invariants: odd adjunction degree");  // lattice parity
  return CiCurve{a * b * f, 1 + twice / 2};
}

CiCurve ci_curve_invariants(const Scroll& x, Int a, Int b) {
  if (x.r() != 3) throw std::domain_error("ci_curve_invariants: requires a 3-fold scroll");
  return ci_curve_invariants(x.f(), a, b);
}

bool is_reflexive_pair(const Scroll& x, Int /*a*/, Int b) {
  if (x.smooth() || x.vertex_codim() > 2) return true;
  return b < x.f();
}

}  // namespace liaison
