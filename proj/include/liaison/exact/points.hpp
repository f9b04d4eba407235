#pragma once

#include <gmpxx.h>

#include <vector>

#include "liaison/exact/poly.hpp"

// Reduced point schemes with exact rational coordinates: evaluation
// matrices, Hilbert functions as ranks, vanishing ideals as kernels.

namespace liaison::exact {

struct ProjectivePoint {
  std::vector<mpq_class> coords;  // normalized: first nonzero coordinate is 1

  explicit ProjectivePoint(std::vector<mpq_class> raw);
  int ambient_dim() const { return static_cast<int>(coords.size()) - 1; }
  bool operator==(const ProjectivePoint& rhs) const { return coords == rhs.coords; }
};

struct PointSet {
  int ambient_dim = 0;  // projective dimension; points carry ambient_dim+1 coords
  std::vector<ProjectivePoint> points;

  PointSet() = default;
  explicit PointSet(int dim) : ambient_dim(dim) {}
  size_t size() const { return points.size(); }
  void add(ProjectivePoint p);  // rejects duplicates and dimension mismatches
  PointSet subset(const std::vector<int>& indices) const;
  PointSet complement(const std::vector<int>& indices) const;
};

// Rows: points; columns: monomial_basis(dim+1, k).  Rows are primitive
// integer vectors (per-point scaling does not affect ranks or kernels).
ZMat evaluation_matrix(const PointSet& z, int k);

// Number of conditions the points impose in degree k: the rank of the
// evaluation matrix.
int hilbert_function(const PointSet& z, int k);

// Coefficient rows of a basis of the degree-k piece of the vanishing ideal.
ZMat vanishing_forms(const PointSet& z, int k);

// dim of the degree-k piece of the vanishing ideal.
int vanishing_dimension(const PointSet& z, int k);

// First k with h_Z(k) = |Z|; the ideal of a reduced point set is generated
// in degrees <= that index + 1.
int stabilization_index(const PointSet& z);

// Minimal homogeneous generators of the vanishing ideal, found degreewise
// up to the generation bound above.
GradedIdeal minimal_point_ideal(const PointSet& z);

}  // namespace liaison::exact
