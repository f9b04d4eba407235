#include "liaison/exact/points.hpp"

#include <algorithm>
#include <stdexcept>

namespace liaison::exact {

ProjectivePoint::ProjectivePoint(std::vector<mpq_class> raw) : coords(std::move(raw)) {
  size_t lead = coords.size();
  for (size_t i = 0; i < coords.size(); ++i) {
    coords[i].canonicalize();
    if (coords[i] != 0) {
      lead = i;
      break;
    }
  }
  if (lead == coords.size())
    throw std::domain_error("ProjectivePoint: all coordinates zero");
  const mpq_class scale = coords[lead];
  for (size_t i = lead; i < coords.size(); ++i) {
    coords[i] /= scale;
    coords[i].canonicalize();
  }
}

void PointSet::add(ProjectivePoint p) {
  if (p.ambient_dim() != ambient_dim)
    throw std::domain_error("PointSet::add: ambient dimension mismatch");
  if (std::find(points.begin(), points.end(), p) != points.end())
    throw std::domain_error("PointSet::add: duplicate point");
  points.push_back(std::move(p));
}

PointSet PointSet::subset(const std::vector<int>& indices) const {
  PointSet out(ambient_dim);
  for (int i : indices) {
    if (i < 0 || static_cast<size_t>(i) >= points.size())
      throw std::domain_error("PointSet::subset: index out of range");
    out.add(points[static_cast<size_t>(i)]);
  }
  return out;
}

PointSet PointSet::complement(const std::vector<int>& indices) const {
  std::vector<bool> keep(points.size(), true);
  for (int i : indices) {
    if (i < 0 || static_cast<size_t>(i) >= points.size())
      throw std::domain_error("PointSet::complement: index out of range");
    keep[static_cast<size_t>(i)] = false;
  }
  PointSet out(ambient_dim);
  for (size_t i = 0; i < points.size(); ++i)
    if (keep[i]) out.add(points[i]);
  return out;
}

ZMat evaluation_matrix(const PointSet& z, int k) {
  if (k < 0) throw std::domain_error("evaluation_matrix: k >= 0 required");
  const int nv = z.ambient_dim + 1;
  const auto& basis = monomial_basis(nv, k);
  std::vector<std::vector<mpq_class>> rows;
  rows.reserve(z.size());
  for (const auto& pt : z.points) {
    std::vector<mpq_class> row;
    row.reserve(basis.size());
    for (const auto& e : basis) {
      mpq_class val = 1;
      for (int i = 0; i < nv; ++i)
        for (int t = 0; t < e[static_cast<size_t>(i)]; ++t)
          val *= pt.coords[static_cast<size_t>(i)];
      row.push_back(val);
    }
    rows.push_back(std::move(row));
  }
  return scale_rows(rows);
}

int hilbert_function(const PointSet& z, int k) {
  if (z.points.empty()) return 0;
  return rank(evaluation_matrix(z, k),
              static_cast<size_t>(monomial_count(z.ambient_dim + 1, k)));
}

ZMat vanishing_forms(const PointSet& z, int k) {
  const size_t cols = static_cast<size_t>(monomial_count(z.ambient_dim + 1, k));
  if (z.points.empty()) {
    // Whole space: identity rows.
    ZMat all(cols, ZRow(cols, 0));
    for (size_t i = 0; i < cols; ++i) all[i][i] = 1;
    return all;
  }
  return kernel_basis(evaluation_matrix(z, k), cols);
}

int vanishing_dimension(const PointSet& z, int k) {
  if (k < 0) return 0;
  return static_cast<int>(monomial_count(z.ambient_dim + 1, k)) - hilbert_function(z, k);
}

int stabilization_index(const PointSet& z) {
  const int target = static_cast<int>(z.size());
  for (int k = 0;; ++k)
    if (hilbert_function(z, k) == target) return k;
}

GradedIdeal minimal_point_ideal(const PointSet& z) {
  const int nv = z.ambient_dim + 1;
  if (z.points.empty())
    throw std::domain_error("minimal_point_ideal: empty point set");
  const int top = stabilization_index(z) + 1;  // generation degree bound

  std::vector<Polynomial> gens;
  for (int j = 1; j <= top; ++j) {
    const size_t cols = static_cast<size_t>(monomial_count(nv, j));
    GradedIdeal so_far{nv, gens};
    Echelon span(ideal_graded_span(so_far, j), cols);
    ZMat spanned = span.rows();
    for (auto& row : vanishing_forms(z, j)) {
      ZRow res = Echelon(spanned, cols).residual(row);
      if (is_zero(res)) continue;
      gens.push_back(polynomial_from_row(nv, j, row));
      spanned.push_back(std::move(row));
    }
  }
  return make_graded_ideal(nv, std::move(gens));
}

}  // namespace liaison::exact
