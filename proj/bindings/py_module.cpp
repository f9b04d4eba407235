// Python bindings for the main operations: genus numerics, scroll
// arithmetic, linkage formulas and the duality oracle.  Exact rationals
// cross the boundary as strings ("3/2"); big integers as Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liaison/exact/oracle.hpp"
#include "liaison/genus.hpp"
#include "liaison/linkage.hpp"
#include "liaison/report_json.hpp"
#include "liaison/scroll.hpp"

namespace py = pybind11;
using liaison::Int;

namespace {

py::dict params_dict(const liaison::GenusParameters& p) {
  py::dict d;
  d["d"] = p.d;
  d["n"] = p.n;
  d["s"] = p.s;
  d["m"] = p.m;
  d["eps"] = p.eps;
  d["w"] = p.w;
  d["v"] = p.v;
  d["branch"] = (p.branch == liaison::Branch::Low) ? "low" : "high";
  d["k"] = p.k;
  d["delta"] = p.delta;
  d["e"] = p.e;
  return d;
}

liaison::exact::PointSet points_from_lists(const std::vector<std::vector<std::string>>& pts,
                                           int ambient_dim) {
  liaison::exact::PointSet z(ambient_dim);
  for (const auto& raw : pts) {
    std::vector<mpq_class> coords;
    for (const auto& c : raw) coords.emplace_back(c);
    for (auto& c : coords) c.canonicalize();
    z.add(liaison::exact::ProjectivePoint(coords));
  }
  return z;
}

py::dict report_dict(const liaison::exact::VerificationReport& rep) {
  py::dict d;
  d["surface"] = liaison::exact::surface_name(rep.surface);
  d["mode"] = liaison::exact::mode_name(rep.mode);
  d["degrees"] = py::make_tuple(rep.a1, rep.a2);
  d["seed"] = rep.seed;
  d["split"] = rep.z1_index;
  d["deg_z1"] = rep.deg_z1;
  py::list rows;
  for (const auto& r : rep.rows)
    rows.append(py::make_tuple(r.i, r.lhs, r.rhs, r.equal));
  d["rows"] = rows;
  d["pass"] = rep.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic toolkit for maximal-genus curve numerology on rational normal "
            "scrolls, with a brute-force Hilbert-duality oracle";

  // genus numerics
  m.def("compute_parameters",
        [](Int d, Int n, Int s) { return params_dict(liaison::compute_parameters(d, n, s)); },
        py::arg("d"), py::arg("n"), py::arg("s"));
  m.def("delta_h",
        [](Int d, Int n, Int s) {
          auto t = liaison::delta_h_table(liaison::compute_parameters(d, n, s));
          return t.values;
        },
        py::arg("d"), py::arg("n"), py::arg("s"),
        "delta_h(r) for r = 0..m+w+e; zero outside");
  m.def("max_genus", [](Int d, Int n, Int s) { return liaison::max_genus(d, n, s); },
        py::arg("d"), py::arg("n"), py::arg("s"));
  m.def("closed_form_genus",
        [](Int d, Int n, Int s) {
          auto cf = liaison::closed_form_genus(liaison::compute_parameters(d, n, s));
          return py::make_tuple(cf.value.get_str(), cf.discrepancy);
        },
        py::arg("d"), py::arg("n"), py::arg("s"),
        "(value as a fraction string, discrepancy flag)");
  m.def("castelnuovo_genus", &liaison::castelnuovo_genus, py::arg("deg"), py::arg("ambient_dim"));
  m.def("castelnuovo_genus_printed", &liaison::castelnuovo_genus_printed, py::arg("deg"),
        py::arg("ambient_dim"));
  // big integers go through int(str)
  m.def("min_admissible_degree",
        [](Int n, Int s) {
          py::object int_type = py::module_::import("builtins").attr("int");
          return int_type(liaison::min_admissible_degree(n, s).get_str());
        },
        py::arg("n"), py::arg("s"));
  m.def("residual_h0_bound",
        [](Int d, Int n, Int s, Int i) {
          return liaison::residual_h0_bound(liaison::compute_parameters(d, n, s), i);
        },
        py::arg("d"), py::arg("n"), py::arg("s"), py::arg("i"));

  // scroll geometry
  py::class_<liaison::Scroll>(m, "Scroll")
      .def(py::init([](Int n, std::vector<Int> type) { return liaison::make_scroll(n, type); }),
           py::arg("n"), py::arg("type"))
      .def_property_readonly("n", [](const liaison::Scroll& x) { return x.n; })
      .def_property_readonly("type", [](const liaison::Scroll& x) { return x.a; })
      .def_property_readonly("dim", &liaison::Scroll::r)
      .def_property_readonly("degree", &liaison::Scroll::f)
      .def_property_readonly("smooth", &liaison::Scroll::smooth)
      .def_property_readonly("vertex_dim",
                             [](const liaison::Scroll& x) -> py::object {
                               if (x.smooth()) return py::none();
                               return py::cast(x.vertex_dim());
                             })
      .def_property_readonly("vertex_codim",
                             [](const liaison::Scroll& x) -> py::object {
                               if (x.smooth()) return py::none();
                               return py::cast(x.vertex_codim());
                             })
      .def("class_group",
           [](const liaison::Scroll& x) {
             auto g = liaison::class_group(x);
             py::dict d;
             d["cyclic"] = g.cyclic;
             if (g.cyclic) d["relation_f"] = g.relation_f;
             return d;
           })
      .def("canonical_class",
           [](const liaison::Scroll& x) {
             auto k = liaison::canonical_class(x);
             py::dict d;
             if (std::holds_alternative<liaison::FreeClass>(k)) {
               const auto& f = std::get<liaison::FreeClass>(k);
               d["kind"] = "free";
               d["H"] = f.h;
               d["R"] = f.r;
             } else {
               d["kind"] = "cone";
               d["R"] = std::get<liaison::ConeClass>(k).r;
             }
             return d;
           })
      .def("canonical_characteristic", &liaison::canonical_characteristic)
      .def("intersection_number",
           [](const liaison::Scroll& x, const std::vector<std::pair<Int, Int>>& classes) {
             std::vector<liaison::ResolutionClass> cs;
             for (auto [h, r] : classes) cs.push_back({h, r});
             return liaison::intersection_number(x, cs);
           },
           py::arg("classes"), "classes: list of (H~, R~) coefficient pairs, one per dimension")
      .def("total_transform",
           [](const liaison::Scroll& x, Int d) {
             auto c = liaison::integral_total_transform(x, d);
             return py::make_tuple(c.h, c.r);
           },
           py::arg("d"))
      .def("proper_transform",
           [](const liaison::Scroll& x, Int c, Int a) {
             auto t = liaison::proper_transform_line_vertex(x, c, a);
             return py::make_tuple(t.h, t.r);
           },
           py::arg("c"), py::arg("a"))
      .def("vertex_multiplicity", &liaison::vertex_multiplicity, py::arg("c1"), py::arg("a1"),
           py::arg("c2"), py::arg("a2"))
      .def("vertex_multiplicity_ruling", &liaison::vertex_multiplicity_ruling, py::arg("c"),
           py::arg("a"))
      .def("ci_curve",
           [](const liaison::Scroll& x, Int a, Int b) {
             auto ci = liaison::ci_curve_invariants(x, a, b);
             return py::make_tuple(ci.degree, ci.genus);
           },
           py::arg("a"), py::arg("b"))
      .def("is_reflexive", &liaison::is_reflexive_pair, py::arg("a"), py::arg("b"));

  // linkage
  m.def("linked_genus", &liaison::linked_genus, py::arg("p1"), py::arg("pY"),
        py::arg("deg_k_restricted"));
  m.def("linked_genus_scroll",
        [](Int a, Int b, Int n, Int f, Int p1, Int pY, Int deg2, Int degR2) {
          liaison::LinkageData data{a, b, n, deg2, degR2, p1, pY, std::nullopt};
          return liaison::linked_genus_scroll(data, f);
        },
        py::arg("a"), py::arg("b"), py::arg("n"), py::arg("f"), py::arg("p1"), py::arg("pY"),
        py::arg("deg2"), py::arg("degR2"));
  m.def("classify_example1",
        [](Int d, Int n, Int s) {
          auto rep = liaison::classify_example1(d, n, s);
          py::dict out;
          out["params"] = params_dict(rep.params);
          out["applicable"] = rep.applicable;
          if (rep.applicable) {
            out["deg_c_prime"] = rep.deg_c_prime;
            out["genus_c_prime"] = rep.genus_c_prime;
            out["plane_components"] = rep.plane_components;
            out["hr_variant"] = rep.hr_variant;
            out["composition"] = rep.composition;
            out["genus_cross_check"] =
                rep.genus_cross_check ? py::cast(*rep.genus_cross_check) : py::none();
          }
          return out;
        },
        py::arg("d"), py::arg("n"), py::arg("s"));
  m.def("example2_construction",
        [](Int d, Int n, Int s) {
          auto rep = liaison::example2_construction(d, n, s);
          py::dict out;
          out["params"] = params_dict(rep.params);
          out["variant"] =
              rep.variant == liaison::Example2Variant::VEqualsNMinus3 ? "v=n-3" : "v=n-4";
          out["deg_d"] = rep.deg_d;
          out["s_class"] = py::make_tuple(rep.s_class.h, rep.s_class.r);
          out["deg_c_prime"] = rep.deg_c_prime;
          out["partner_genus"] = rep.partner_genus;
          out["degree_identity"] = rep.degree_identity;
          out["genus_cross_check"] = rep.genus_cross_check;
          return out;
        },
        py::arg("d"), py::arg("n"), py::arg("s"));

  // exact oracle
  m.def("hilbert_function",
        [](const std::vector<std::vector<std::string>>& pts, int ambient_dim, int k) {
          return liaison::exact::hilbert_function(points_from_lists(pts, ambient_dim), k);
        },
        py::arg("points"), py::arg("ambient_dim"), py::arg("k"),
        "rank of the evaluation matrix of degree-k monomials at the points");
  m.def("verify_quadric_split",
        [](Int a1, Int a2, const std::vector<int>& split, std::uint64_t seed) {
          auto inst = liaison::exact::build_quadric_ruled_ci(
              a1, a2, liaison::exact::default_quadric_params(a1, a2), split);
          inst.seed = seed;
          std::vector<Int> irange;
          for (Int i = 0; i < std::min(a1, a2); ++i) irange.push_back(i);
          return report_dict(liaison::exact::verify_duality(inst, irange));
        },
        py::arg("a1"), py::arg("a2"), py::arg("split"), py::arg("seed") = 1729);
  m.def("verify_cubic_scroll_split",
        [](Int a1, Int a2, const std::vector<int>& split, std::uint64_t seed) {
          auto inst = liaison::exact::build_cubic_scroll_ci(a1, a2, split);
          inst.seed = seed;
          std::vector<Int> irange;
          for (Int i = 0; i < std::min(a1, a2); ++i) irange.push_back(i);
          return report_dict(liaison::exact::verify_duality(inst, irange));
        },
        py::arg("a1"), py::arg("a2"), py::arg("split"), py::arg("seed") = 1729);
  m.def("verify_cone_colon",
        [](Int a1, Int a2, int z1_size, std::uint64_t seed) {
          auto z1 = liaison::exact::default_surface_points(liaison::exact::SurfaceKind::Cone,
                                                           z1_size);
          auto inst = liaison::exact::build_random_ci_through_points(
              liaison::exact::SurfaceKind::Cone, a1, a2, z1, seed);
          std::vector<Int> irange;
          for (Int i = 0; i < std::min(a1, a2); ++i) irange.push_back(i);
          return report_dict(liaison::exact::verify_duality(inst, irange));
        },
        py::arg("a1"), py::arg("a2"), py::arg("z1_size"), py::arg("seed") = 1729);
}
