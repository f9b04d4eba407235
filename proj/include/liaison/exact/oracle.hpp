#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liaison/exact/points.hpp"
#include "liaison/genus.hpp"  // liaison::Int

// Brute-force verification of the Hilbert duality
//   h0(I_{Z2/W} (x) omega_W(i + ch_W)) = deg Z1 - h_{Z1}(c - ch_W - i)
// for i < min(a1, a2), on desk-scale complete intersections Z of type
// (a1, a2) cut on three model surfaces, using exact rational linear algebra
// only.  All model surfaces have ch_W = 2.

namespace liaison::exact {

enum class SurfaceKind { Quadric, Cone, CubicScroll };
enum class LinkMode { PointSplit, IdealColon };

struct SurfaceModel {
  SurfaceKind kind;
  int ambient_dim;  // projective dimension of the ambient space
  int degree;       // f
  GradedIdeal ideal;
};
SurfaceModel surface_model(SurfaceKind kind);

// A point of P^1, kept as an exact pair (not both zero).
struct P1 {
  mpq_class x, y;
};

struct LinkageInstance {
  SurfaceKind surface = SurfaceKind::Quadric;
  LinkMode mode = LinkMode::PointSplit;
  Int a1 = 0, a2 = 0;
  std::uint64_t seed = 0;

  GradedIdeal iw;  // ambient ideal of W

  // PointSplit: the full crossing set, the chosen indices of Z1, and the
  // two halves.
  std::optional<PointSet> z;
  std::vector<int> z1_index;
  PointSet z1;
  std::optional<PointSet> z2;

  // IdealColon: I_Z = I_W + (F1, F2) and a generating set for I_{Z1}.
  std::optional<GradedIdeal> iz;
  std::optional<GradedIdeal> iz1;

  // CubicScroll bookkeeping: ruled coordinates (base (s:t), fiber (l:m))
  // for each point of z, needed for the O(i*H + R) section spaces.
  std::vector<std::pair<P1, P1>> ruled_coords;

  Int c() const { return a1 + a2; }
  static constexpr Int chW = 2;
};

// Distinct ruling parameters for the quadric construction: a_family and
// b_family each hold a1+a2 values (first a1 cut the first curve).
struct QuadricRuleParams {
  std::vector<P1> a_family;
  std::vector<P1> b_family;
};
QuadricRuleParams default_quadric_params(Int a1, Int a2);

// C1 = a1 rules of each family, C2 = a2 rules of each family; Z is the set
// of 2*a1*a2 pairwise crossings, all rational.  z1_selector picks Z1 by
// index into the crossing list.
LinkageInstance build_quadric_ruled_ci(Int a1, Int a2, const QuadricRuleParams& params,
                                       const std::vector<int>& z1_selector);

// Canonical family on the cubic scroll S(1,2) in P^4: each curve is a1
// (resp. a2) conic sections plus as many rulings; Z is the 3*a1*a2 rational
// crossings.
LinkageInstance build_cubic_scroll_ci(Int a1, Int a2, const std::vector<int>& z1_selector);

// Random forms F1, F2 of degrees a1, a2 through Z1 (quadric or cone; Z1 in
// the smooth part), re-rolled until deg Z stabilizes at 2*a1*a2.  The seed
// fixes the whole construction.
LinkageInstance build_random_ci_through_points(SurfaceKind kind, Int a1, Int a2,
                                               const PointSet& z1, std::uint64_t seed);

// Canonical rational smooth-part points for CLI-style use.
PointSet default_surface_points(SurfaceKind kind, int count);

struct VerificationRow {
  Int i = 0, lhs = 0, rhs = 0;
  bool equal = false;
};

struct VerificationReport {
  SurfaceKind surface;
  LinkMode mode;
  Int a1 = 0, a2 = 0;
  std::uint64_t seed = 0;
  std::vector<int> z1_index;
  Int deg_z1 = 0;
  std::vector<VerificationRow> rows;
  bool pass = false;
  std::string twist_note;  // the omega_W(i+ch_W) identification in force
  double elapsed_ms = 0;   // wall clock; excluded from serialized output
};

// Checks every i in i_range (each must satisfy 0 <= i < min(a1, a2)).
VerificationReport verify_duality(const LinkageInstance& instance,
                                  const std::vector<Int>& i_range);

const char* surface_name(SurfaceKind kind);
const char* mode_name(LinkMode mode);

}  // namespace liaison::exact
