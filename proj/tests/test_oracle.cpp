#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liaison/exact/oracle.hpp"
#include "liaison/report_json.hpp"

using namespace liaison::exact;
using liaison::Int;

namespace {

std::vector<int> random_split(std::mt19937_64& rng, size_t total) {
  std::uniform_int_distribution<int> flip(0, 1);
  std::vector<int> out;
  for (size_t i = 0; i < total; ++i)
    if (flip(rng)) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<Int> full_range(Int a1, Int a2) {
  std::vector<Int> r;
  for (Int i = 0; i < std::min(a1, a2); ++i) r.push_back(i);
  return r;
}

}  // namespace

TEST_CASE("surface models carry their points") {
  auto quad = surface_model(SurfaceKind::Quadric);
  auto inst = build_quadric_ruled_ci(2, 2, default_quadric_params(2, 2), {0, 1});
  for (const auto& pt : inst.z->points)
    for (const auto& g : quad.ideal.generators) CHECK(g.evaluate(pt.coords) == 0);

  auto scroll_inst = build_cubic_scroll_ci(2, 2, {});
  REQUIRE(scroll_inst.z->size() == 12);
  auto scroll = surface_model(SurfaceKind::CubicScroll);
  for (const auto& pt : scroll_inst.z->points)
    for (const auto& g : scroll.ideal.generators) CHECK(g.evaluate(pt.coords) == 0);
}

TEST_CASE("quadric split: hand-anchored rows") {
  // |Z1| = 7: three planes through the leftover point vs 7 - h(1) = 3
  auto inst = build_quadric_ruled_ci(2, 2, default_quadric_params(2, 2),
                                     {0, 1, 2, 3, 4, 5, 6});
  auto rep = verify_duality(inst, {1});
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].lhs == 3);
  CHECK(rep.rows[0].rhs == 3);
  CHECK(rep.pass);

  // full split: constants through the empty residual vs 8 - h(2) = 1
  inst = build_quadric_ruled_ci(2, 2, default_quadric_params(2, 2),
                                {0, 1, 2, 3, 4, 5, 6, 7});
  rep = verify_duality(inst, {0});
  CHECK(rep.rows[0].lhs == 1);
  CHECK(rep.rows[0].rhs == 1);

  // 3/5 split with a noncollinear Z1
  inst = build_quadric_ruled_ci(2, 2, default_quadric_params(2, 2), {0, 1, 2});
  rep = verify_duality(inst, {1});
  CHECK(rep.rows[0].lhs == 0);
  CHECK(rep.rows[0].rhs == 0);
}

TEST_CASE("quadric split: every split and twist balances") {
  std::mt19937_64 rng(42);
  for (auto [a1, a2] : std::vector<std::pair<Int, Int>>{{1, 1}, {2, 2}, {2, 3}}) {
    auto params = default_quadric_params(a1, a2);
    for (int trial = 0; trial < 8; ++trial) {
      auto split = random_split(rng, static_cast<size_t>(2 * a1 * a2));
      auto inst = build_quadric_ruled_ci(a1, a2, params, split);
      auto rep = verify_duality(inst, full_range(a1, a2));
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("quadric construction rejects duplicate parameters") {
  auto params = default_quadric_params(2, 2);
  params.a_family[3] = params.a_family[0];
  CHECK_THROWS_AS(build_quadric_ruled_ci(2, 2, params, {}), std::domain_error);
}

TEST_CASE("twist range is enforced") {
  auto inst = build_quadric_ruled_ci(2, 2, default_quadric_params(2, 2), {0});
  CHECK_THROWS_AS(verify_duality(inst, {2}), std::domain_error);
  CHECK_THROWS_AS(verify_duality(inst, {-1}), std::domain_error);
}

TEST_CASE("cone ideal-colon instances") {
  auto z1 = default_surface_points(SurfaceKind::Cone, 4);
  auto inst = build_random_ci_through_points(SurfaceKind::Cone, 2, 2, z1, 1);
  // stabilized degree of the link is 2*a1*a2
  for (int k = 3; k <= 4; ++k)
    CHECK(monomial_count(4, k) - ideal_graded_dimension(*inst.iz, k) == 8);
  auto rep = verify_duality(inst, full_range(2, 2));
  CHECK(rep.pass);
  for (const auto& row : rep.rows) CHECK(row.lhs == row.rhs);
}

TEST_CASE("cone colon mode across sizes and seeds") {
  for (int size = 1; size <= 5; ++size) {
    auto z1 = default_surface_points(SurfaceKind::Cone, size);
    for (std::uint64_t seed : {11u, 12u}) {
      auto inst = build_random_ci_through_points(SurfaceKind::Cone, 2, 2, z1, seed);
      CHECK(verify_duality(inst, full_range(2, 2)).pass);
    }
  }
}

TEST_CASE("quadric ideal-colon two-point link") {
  PointSet z1(3);
  z1.add(ProjectivePoint({mpq_class(0), mpq_class(0), mpq_class(1), mpq_class(1)}));
  auto inst = build_random_ci_through_points(SurfaceKind::Quadric, 1, 1, z1, 5);
  for (int k = 1; k <= 2; ++k)
    CHECK(monomial_count(4, k) - ideal_graded_dimension(*inst.iz, k) == 2);
  CHECK(verify_duality(inst, {0}).pass);
}

TEST_CASE("infeasible when every form through Z1 contains the surface") {
  // 5 spanning points kill all linear forms, so a (1,1) link cannot exist
  auto z1 = default_surface_points(SurfaceKind::Quadric, 5);
  CHECK_THROWS_AS(build_random_ci_through_points(SurfaceKind::Quadric, 1, 1, z1, 3),
                  std::domain_error);
}

TEST_CASE("colon construction rejects off-surface and vertex points") {
  PointSet off(3);
  off.add(ProjectivePoint({mpq_class(1), mpq_class(1), mpq_class(1), mpq_class(1)}));
  CHECK_THROWS_AS(build_random_ci_through_points(SurfaceKind::Cone, 2, 2, off, 1),
                  std::domain_error);
  PointSet vertex(3);
  vertex.add(ProjectivePoint({mpq_class(0), mpq_class(0), mpq_class(0), mpq_class(1)}));
  CHECK_THROWS_AS(build_random_ci_through_points(SurfaceKind::Cone, 2, 2, vertex, 1),
                  std::domain_error);
  CHECK_THROWS_AS(
      build_random_ci_through_points(SurfaceKind::CubicScroll, 2, 2, off, 1),
      std::domain_error);
}

TEST_CASE("cubic scroll: twisted sections balance") {
  // full split: h0(O(i*H+R)) against deg Z - h_Z(c-2-i)
  auto inst = build_cubic_scroll_ci(2, 2, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  auto rep = verify_duality(inst, {0, 1});
  CHECK(rep.rows[0].lhs == 2);  // pencil of rulings
  CHECK(rep.rows[0].rhs == 2);  // 12 points impose only 10 conditions on quadrics
  CHECK(rep.rows[1].lhs == 7);
  CHECK(rep.rows[1].rhs == 7);  // 12 - h(1), the points span P^4
  CHECK(rep.pass);

  std::mt19937_64 rng(99);
  for (auto [a1, a2] : std::vector<std::pair<Int, Int>>{{1, 1}, {2, 2}, {2, 3}}) {
    for (int trial = 0; trial < 6; ++trial) {
      auto split = random_split(rng, static_cast<size_t>(3 * a1 * a2));
      auto inst2 = build_cubic_scroll_ci(a1, a2, split);
      CHECK(verify_duality(inst2, full_range(a1, a2)).pass);
    }
  }
}

TEST_CASE("reports serialize deterministically and round-trip") {
  auto inst = build_quadric_ruled_ci(2, 2, default_quadric_params(2, 2), {0, 2, 5});
  inst.seed = 77;
  auto rep = verify_duality(inst, {0, 1});

  liaison::Json j = liaison::verification_report_json(rep);
  std::string once = liaison::canonical_dump(j);
  std::string twice = liaison::canonical_dump(liaison::Json::parse(once));
  CHECK(once == twice);

  CHECK(j["surface"] == "quadric");
  CHECK(j["degrees"] == liaison::Json::array({2, 2}));
  CHECK(j["seed"] == 77);
  CHECK(j["pass"] == true);
  CHECK(j["rows"].size() == 2);

  std::string inst_once = liaison::canonical_dump(liaison::instance_json(inst));
  CHECK(inst_once == liaison::canonical_dump(liaison::Json::parse(inst_once)));

  // identical seeds give byte-identical reports
  auto inst_b = build_quadric_ruled_ci(2, 2, default_quadric_params(2, 2), {0, 2, 5});
  inst_b.seed = 77;
  auto rep_b = verify_duality(inst_b, {0, 1});
  CHECK(liaison::canonical_dump(liaison::verification_report_json(rep_b)) == once);
}

TEST_CASE("point sets round-trip through JSON") {
  auto z = default_surface_points(SurfaceKind::Cone, 3);
  liaison::Json j = liaison::point_set_json(z);
  auto back = liaison::point_set_from_json(j, 3);
  REQUIRE(back.size() == z.size());
  for (size_t i = 0; i < z.size(); ++i) CHECK(back.points[i] == z.points[i]);
}
