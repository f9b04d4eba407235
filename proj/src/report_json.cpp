#include "liaison/report_json.hpp"

#include <stdexcept>

namespace liaison {

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json rational_to_json(const mpq_class& q) {
  if (q.get_den() == 1) {
    if (q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
    return Json(q.get_num().get_str());
  }
  return Json(q.get_str());
}

Json genus_report_json(const GenusParameters& p) {
  DeltaHTable table = delta_h_table(p);
  ClosedFormGenus cf = closed_form_genus(p);

  Json j;
  j["d"] = p.d;
  j["n"] = p.n;
  j["s"] = p.s;
  j["m"] = p.m;
  j["epsilon"] = p.eps;
  j["w"] = p.w;
  j["v"] = p.v;
  j["branch"] = (p.branch == Branch::Low) ? "low" : "high";
  j["k"] = p.k;
  j["delta"] = p.delta;
  j["e"] = p.e;
  Json dh = Json::array();
  for (Int r = 0; r <= table.support_end(); ++r) dh.push_back(Json::array({r, table.at(r)}));
  j["delta_h"] = dh;
  j["max_genus"] = max_genus(p);
  j["closed_form"] = rational_to_json(cf.value);
  j["closed_form_discrepancy"] = cf.discrepancy;
  j["castelnuovo"] = Json{{"degree", p.s},
                          {"ambient", p.n - 1},
                          {"classical", castelnuovo_genus(p.s, p.n - 1)},
                          {"printed", castelnuovo_genus_printed(p.s, p.n - 1)}};
  return j;
}

Json scroll_json(const Scroll& x) {
  Json j;
  j["n"] = x.n;
  j["type"] = x.a;
  j["dimension"] = x.r();
  j["degree"] = x.f();
  if (x.smooth()) {
    j["vertex"] = nullptr;
  } else {
    j["vertex"] = Json{{"dim", x.vertex_dim()}, {"codim", x.vertex_codim()}};
  }
  return j;
}

Json divisor_class_json(const DivisorClass& cls) {
  if (std::holds_alternative<FreeClass>(cls)) {
    const auto& f = std::get<FreeClass>(cls);
    return Json{{"kind", "free"}, {"H", f.h}, {"R", f.r}};
  }
  return Json{{"kind", "cone"}, {"R", std::get<ConeClass>(cls).r}};
}

Json example1_report_json(const Example1Report& rep) {
  Json j;
  j["applicable"] = rep.applicable;
  if (!rep.applicable) return j;
  j["deg_c_prime"] = rep.deg_c_prime;
  j["genus_c_prime"] = rep.genus_c_prime;
  j["plane_components"] = rep.plane_components;
  j["hr_variant"] = rep.hr_variant;
  j["composition"] = rep.composition;
  if (rep.genus_cross_check)
    j["genus_cross_check"] = *rep.genus_cross_check;
  else
    j["genus_cross_check"] = nullptr;
  return j;
}

Json example2_report_json(const Example2Report& rep) {
  Json j;
  j["variant"] = (rep.variant == Example2Variant::VEqualsNMinus3) ? "v=n-3" : "v=n-4";
  j["deg_d"] = rep.deg_d;
  j["s_class"] = Json{{"kind", "free"}, {"H", rep.s_class.h}, {"R", rep.s_class.r}};
  j["deg_c_prime"] = rep.deg_c_prime;
  j["partner_genus"] = rep.partner_genus;
  j["degree_identity"] = rep.degree_identity;
  j["genus_cross_check"] = rep.genus_cross_check;
  return j;
}

Json point_set_json(const exact::PointSet& z) {
  Json pts = Json::array();
  for (const auto& p : z.points) {
    Json coords = Json::array();
    for (const auto& c : p.coords) coords.push_back(c.get_str());
    pts.push_back(coords);
  }
  return pts;
}

exact::PointSet point_set_from_json(const Json& j, int ambient_dim) {
  exact::PointSet z(ambient_dim);
  const Json& arr = j.contains("points") ? j.at("points") : j;
  if (!arr.is_array()) throw std::invalid_argument("point set JSON: expected an array of points");
  for (const auto& entry : arr) {
    std::vector<mpq_class> coords;
    for (const auto& c : entry) {
      if (c.is_number_integer())
        coords.emplace_back(static_cast<long>(c.get<long long>()));
      else
        coords.emplace_back(c.get<std::string>());
    }
    if (static_cast<int>(coords.size()) != ambient_dim + 1)
      throw std::invalid_argument("point set JSON: wrong number of coordinates");
    z.add(exact::ProjectivePoint(coords));
  }
  return z;
}

Json instance_json(const exact::LinkageInstance& inst) {
  Json j;
  j["surface"] = exact::surface_name(inst.surface);
  j["degrees"] = Json::array({inst.a1, inst.a2});
  j["mode"] = exact::mode_name(inst.mode);
  j["seed"] = inst.seed;
  if (inst.mode == exact::LinkMode::PointSplit) {
    j["split"] = inst.z1_index;
    j["z"] = point_set_json(*inst.z);
  } else {
    j["split"] = nullptr;
  }
  j["z1"] = point_set_json(inst.z1);
  return j;
}

Json verification_report_json(const exact::VerificationReport& rep) {
  Json j;
  j["surface"] = exact::surface_name(rep.surface);
  j["degrees"] = Json::array({rep.a1, rep.a2});
  j["mode"] = exact::mode_name(rep.mode);
  j["seed"] = rep.seed;
  if (rep.mode == exact::LinkMode::PointSplit)
    j["split"] = rep.z1_index;
  else
    j["split"] = nullptr;
  j["deg_z1"] = rep.deg_z1;
  Json rows = Json::array();
  for (const auto& r : rep.rows)
    rows.push_back(Json{{"i", r.i}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"equal", r.equal}});
  j["rows"] = rows;
  j["pass"] = rep.pass;
  j["twist"] = rep.twist_note;
  return j;
}

}  // namespace liaison
