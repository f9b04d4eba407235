// Command-line front end: genus bounds, scroll arithmetic, classification
// reports and the duality verification harness, with table or JSON output.
//
// Exit codes: 0 success, 1 usage or domain errors, 2 duality check failed.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "liaison/exact/oracle.hpp"
#include "liaison/genus.hpp"
#include "liaison/linkage.hpp"
#include "liaison/report_json.hpp"
#include "liaison/scroll.hpp"

namespace {

using liaison::Int;
using liaison::Json;

constexpr std::uint64_t kDefaultSeed = 1729;  // fixed for reproducible runs

struct Output {
  bool json = false;
  std::string path;  // empty: stdout

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
  }
};

std::vector<Int> parse_int_list(const std::string& s, char sep) {
  std::vector<Int> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    if (item.empty()) throw CLI::ValidationError("empty entry in list '" + s + "'");
    out.push_back(std::stoll(item));
  }
  return out;
}

std::string divisor_to_text(const liaison::DivisorClass& cls) {
  if (std::holds_alternative<liaison::FreeClass>(cls)) {
    const auto& f = std::get<liaison::FreeClass>(cls);
    return std::to_string(f.h) + "*H + " + std::to_string(f.r) + "*R";
  }
  return std::to_string(std::get<liaison::ConeClass>(cls).r) + "*R";
}

int run_genus(Int d, Int n, Int s, const Output& out, const std::string& csv_path) {
  auto p = liaison::compute_parameters(d, n, s);
  auto table = liaison::delta_h_table(p);

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot open csv file: " + csv_path);
    csv << "r,delta_h\n";
    for (Int r = 0; r <= table.support_end(); ++r) csv << r << "," << table.at(r) << "\n";
  }

  if (out.json) {
    out.emit(liaison::canonical_dump(liaison::genus_report_json(p)));
    return 0;
  }

  auto cf = liaison::closed_form_genus(p);
  std::ostringstream text;
  text << "parameters  d=" << p.d << " n=" << p.n << " s=" << p.s << "\n"
       << "  m=" << p.m << " eps=" << p.eps << " w=" << p.w << " v=" << p.v
       << " branch=" << (p.branch == liaison::Branch::Low ? "low" : "high") << " k=" << p.k
       << " delta=" << p.delta << " e=" << p.e << "\n"
       << "delta_h     ";
  for (Int r = 0; r <= table.support_end(); ++r) text << table.at(r) << (r < table.support_end() ? " " : "");
  text << "  (sum = " << table.sum() << ")\n"
       << "max genus   " << liaison::max_genus(p) << "\n"
       << "closed form " << cf.value.get_str() << (cf.discrepancy ? "  [discrepancy]" : "") << "\n"
       << "castelnuovo G(" << s << ", P^" << n - 1 << ") = " << liaison::castelnuovo_genus(s, n - 1)
       << "  (printed form: " << liaison::castelnuovo_genus_printed(s, n - 1) << ")\n";
  out.emit(text.str());
  return 0;
}

int run_bound(Int n, Int s, const Output& out) {
  mpz_class d = liaison::min_admissible_degree(n, s);
  if (out.json) {
    Json j;
    j["n"] = n;
    j["s"] = s;
    j["min_admissible_degree"] =
        d.fits_slong_p() ? Json(d.get_si()) : Json(d.get_str());
    out.emit(liaison::canonical_dump(j));
  } else {
    out.emit(d.get_str() + "\n");
  }
  return 0;
}

int run_scroll(const std::string& type, Int n, const std::string& verb,
               const std::string& arg, const Output& out) {
  auto scroll = liaison::make_scroll(n, [&] {
    auto v = parse_int_list(type, ',');
    return std::vector<Int>(v.begin(), v.end());
  }());

  Json j = liaison::scroll_json(scroll);
  std::ostringstream text;

  if (verb == "class-group") {
    auto g = liaison::class_group(scroll);
    j["class_group"] = g.cyclic ? Json{{"kind", "cyclic"}, {"relation", "H ~ " + std::to_string(g.relation_f) + "R"}}
                                : Json{{"kind", "free"}, {"rank", 2}};
    text << (g.cyclic ? "cyclic: H ~ " + std::to_string(g.relation_f) + "R" : "free of rank 2 on H, R")
         << "\n";
  } else if (verb == "canonical") {
    auto k = liaison::canonical_class(scroll);
    j["canonical_class"] = liaison::divisor_class_json(k);
    j["canonical_characteristic"] = liaison::canonical_characteristic(scroll);
    text << "K = " << divisor_to_text(k) << ", ch = " << liaison::canonical_characteristic(scroll)
         << "\n";
  } else if (verb == "intersect") {
    std::vector<liaison::ResolutionClass> classes;
    std::istringstream in(arg);
    std::string part;
    while (std::getline(in, part, ';')) {
      auto pair = parse_int_list(part, ',');
      if (pair.size() != 2) throw CLI::ValidationError("intersect: each class is h,r");
      classes.push_back({pair[0], pair[1]});
    }
    Int value = liaison::intersection_number(scroll, classes);
    j["intersection"] = value;
    text << value << "\n";
  } else if (verb == "total-transform") {
    auto cls = liaison::integral_total_transform(scroll, std::stoll(arg));
    j["total_transform"] = Json{{"H~", cls.h}, {"R~", cls.r}};
    text << cls.h << "*H~ + " << cls.r << "*R~\n";
  } else if (verb == "proper-transform") {
    auto nums = parse_int_list(arg, ',');
    if (nums.size() != 2) throw CLI::ValidationError("proper-transform: expected c,a");
    auto cls = liaison::proper_transform_line_vertex(scroll, nums[0], nums[1]);
    j["proper_transform"] = Json{{"H~", cls.h}, {"R~", cls.r}};
    text << cls.h << "*H~ + " << cls.r << "*R~\n";
  } else if (verb == "vertex-mult") {
    Int value;
    if (!arg.empty() && (arg.back() == 'R' || arg.back() == 'r')) {
      auto nums = parse_int_list(arg.substr(0, arg.find_last_of(',')), ',');
      if (nums.size() != 2) throw CLI::ValidationError("vertex-mult: expected c1,a1,R");
      value = liaison::vertex_multiplicity_ruling(scroll, nums[0], nums[1]);
    } else {
      auto nums = parse_int_list(arg, ',');
      if (nums.size() != 4) throw CLI::ValidationError("vertex-mult: expected c1,a1,c2,a2");
      value = liaison::vertex_multiplicity(scroll, nums[0], nums[1], nums[2], nums[3]);
    }
    j["vertex_multiplicity"] = value;
    text << value << "\n";
  } else if (verb == "ci") {
    auto nums = parse_int_list(arg, ',');
    if (nums.size() != 2) throw CLI::ValidationError("ci: expected a,b");
    auto ci = liaison::ci_curve_invariants(scroll, nums[0], nums[1]);
    j["ci_curve"] = Json{{"degree", ci.degree}, {"genus", ci.genus}};
    text << "degree " << ci.degree << ", genus " << ci.genus << "\n";
  } else if (verb == "reflexive") {
    auto nums = parse_int_list(arg, ',');
    if (nums.size() != 2) throw CLI::ValidationError("reflexive: expected a,b");
    bool ok = liaison::is_reflexive_pair(scroll, nums[0], nums[1]);
    j["reflexive"] = ok;
    text << (ok ? "true" : "false") << "\n";
  } else {
    throw CLI::ValidationError("unknown scroll verb '" + verb + "'");
  }

  out.emit(out.json ? liaison::canonical_dump(j) : text.str());
  return 0;
}

int run_classify(Int d, Int n, Int s, const Output& out) {
  auto rep1 = liaison::classify_example1(d, n, s);
  const auto& p = rep1.params;

  std::optional<liaison::Example2Report> rep2;
  if (p.v == n - 3 || p.v == n - 4) {
    try {
      rep2 = liaison::example2_construction(d, n, s);
    } catch (const std::domain_error&) {
      // outside the construction's deg D window; example 1 still reports
    }
  }

  if (out.json) {
    Json j;
    j["d"] = d;
    j["n"] = n;
    j["s"] = s;
    j["max_genus"] = liaison::max_genus(p);
    j["example1"] = liaison::example1_report_json(rep1);
    j["example2"] = rep2 ? liaison::example2_report_json(*rep2) : Json(nullptr);
    out.emit(liaison::canonical_dump(j));
    return 0;
  }

  std::ostringstream text;
  text << "max genus G(" << d << ", " << n << ", " << s << ") = " << liaison::max_genus(p) << "\n";
  if (!rep1.applicable) {
    text << "plane-residual range: not applicable (eps = " << p.eps << " outside ["
         << s - 2 - p.w << ", " << s - 2 << "])\n";
  } else {
    text << "plane-residual range: applicable; C' is a plane curve of degree " << rep1.deg_c_prime
         << " and genus " << rep1.genus_c_prime << "\n"
         << "residual composition: " << rep1.composition << "\n";
    if (rep1.genus_cross_check)
      text << "linkage-route genus: " << *rep1.genus_cross_check
           << (rep1.genus_cross_check == liaison::max_genus(p) ? "  (matches)" : "  (MISMATCH)")
           << "\n";
  }
  if (rep2) {
    text << "construction (" << (rep2->variant == liaison::Example2Variant::VEqualsNMinus3 ? "v=n-3" : "v=n-4")
         << "): deg D = " << rep2->deg_d << ", S ~ " << rep2->s_class.h << "*H"
         << (rep2->s_class.r ? " + " + std::to_string(rep2->s_class.r) + "*R" : "")
         << ", deg C' = " << rep2->deg_c_prime << ", partner genus " << rep2->partner_genus << "\n"
         << "construction genus: " << rep2->genus_cross_check
         << (rep2->genus_cross_check == liaison::max_genus(p) ? "  (matches)" : "  (MISMATCH)") << "\n";
  }
  out.emit(text.str());
  return 0;
}

int run_verify(const std::string& surface_name, Int a1, Int a2, std::optional<Int> split,
               const std::string& z1_file, std::uint64_t seed, std::optional<Int> imax,
               bool verbose, const Output& out) {
  using namespace liaison::exact;

  SurfaceKind kind;
  if (surface_name == "quadric")
    kind = SurfaceKind::Quadric;
  else if (surface_name == "cone")
    kind = SurfaceKind::Cone;
  else if (surface_name == "cubic-scroll")
    kind = SurfaceKind::CubicScroll;
  else
    throw CLI::ValidationError("unknown surface '" + surface_name + "'");

  LinkageInstance inst;
  if (!z1_file.empty()) {
    std::ifstream in(z1_file);
    if (!in) throw std::runtime_error("cannot open z1 file: " + z1_file);
    Json j = Json::parse(in);
    auto z1 = liaison::point_set_from_json(j, surface_model(kind).ambient_dim);
    inst = build_random_ci_through_points(kind, a1, a2, z1, seed);
  } else {
    Int k = split.value_or(0);
    if (kind == SurfaceKind::Quadric) {
      std::vector<int> sel;
      for (Int i = 0; i < k; ++i) sel.push_back(static_cast<int>(i));
      inst = build_quadric_ruled_ci(a1, a2, default_quadric_params(a1, a2), sel);
      inst.seed = seed;
    } else if (kind == SurfaceKind::CubicScroll) {
      std::vector<int> sel;
      for (Int i = 0; i < k; ++i) sel.push_back(static_cast<int>(i));
      inst = build_cubic_scroll_ci(a1, a2, sel);
      inst.seed = seed;
    } else {
      if (k < 1) throw CLI::ValidationError("cone verification needs --split K >= 1 (|Z1|) or --z1 FILE");
      auto z1 = default_surface_points(kind, static_cast<int>(k));
      inst = build_random_ci_through_points(kind, a1, a2, z1, seed);
    }
  }

  const Int top = imax.value_or(std::min(a1, a2) - 1);
  std::vector<Int> i_range;
  for (Int i = 0; i <= top; ++i) i_range.push_back(i);
  auto rep = verify_duality(inst, i_range);

  if (out.json) {
    out.emit(liaison::canonical_dump(liaison::verification_report_json(rep)));
  } else {
    std::ostringstream text;
    text << "surface " << liaison::exact::surface_name(rep.surface) << ", degrees (" << rep.a1
         << "," << rep.a2 << "), mode " << mode_name(rep.mode) << ", seed " << rep.seed
         << ", |Z1| = " << rep.deg_z1 << "\n"
         << "twist: " << rep.twist_note << "\n";
    for (const auto& row : rep.rows)
      text << "  i=" << row.i << "  lhs=" << row.lhs << "  rhs=" << row.rhs << "  "
           << (row.equal ? "ok" : "UNEQUAL") << "\n";
    text << (rep.pass ? "PASS" : "FAIL") << "\n";
    out.emit(text.str());
  }
  if (verbose) std::cerr << "elapsed: " << rep.elapsed_ms << " ms\n";
  return rep.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "liaison: exact-arithmetic calculator for maximal-genus curve numerology on rational "
      "normal scrolls, with a brute-force duality oracle"};
  app.require_subcommand(1);

  bool json = false;
  std::string out_path;
  bool verbose = false;
  app.add_flag("--json", json, "emit machine-readable JSON");
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_flag("--verbose", verbose, "print timing to stderr (not byte-reproducible)");

  // genus
  auto* genus = app.add_subcommand("genus", "parameter scheme, delta-h profile and genus bounds");
  Int g_d = 0, g_n = 0, g_s = 0;
  std::string csv_path;
  genus->add_option("--d", g_d, "curve degree")->required();
  genus->add_option("--n", g_n, "ambient projective dimension")->required();
  genus->add_option("--s", g_s, "minimal surface degree")->required();
  genus->add_option("--csv", csv_path, "also write the delta-h table as CSV (header r,delta_h)");

  // bound
  auto* bound = app.add_subcommand("bound", "least degree admitted by the exact degree bound");
  Int b_n = 0, b_s = 0;
  bound->add_option("--n", b_n, "ambient projective dimension")->required();
  bound->add_option("--s", b_s, "minimal surface degree")->required();

  // scroll
  auto* scroll = app.add_subcommand("scroll", "divisor and transform arithmetic on a scroll");
  std::string sc_type, sc_verb, sc_arg;
  Int sc_n = 0;
  scroll->add_option("--type", sc_type, "splitting type a1,...,ar")->required();
  scroll->add_option("--n", sc_n, "ambient projective dimension")->required();
  scroll->add_option("verb", sc_verb,
                     "class-group | canonical | intersect | total-transform | proper-transform | "
                     "vertex-mult | ci | reflexive")
      ->required();
  scroll->add_option("args", sc_arg, "verb arguments (e.g. '2,3;10,3;1,0' for intersect)");

  // classify
  auto* classify = app.add_subcommand("classify", "plane-residual classification and construction reports");
  Int c_d = 0, c_n = 0, c_s = 0;
  classify->add_option("--d", c_d, "curve degree")->required();
  classify->add_option("--n", c_n, "ambient projective dimension")->required();
  classify->add_option("--s", c_s, "minimal surface degree")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "duality oracle on an explicit complete intersection");
  std::string v_surface = "quadric", v_z1_file;
  Int v_a1 = 0, v_a2 = 0;
  std::optional<Int> v_split, v_imax;
  std::uint64_t v_seed = kDefaultSeed;
  verify->add_option("--surface", v_surface, "quadric | cone | cubic-scroll (default quadric)");
  verify->add_option("--a1", v_a1, "first hypersurface degree")->required();
  verify->add_option("--a2", v_a2, "second hypersurface degree")->required();
  verify->add_option("--split", v_split,
                     "size of Z1: first K crossings (quadric, cubic-scroll) or K canonical "
                     "smooth points (cone)");
  verify->add_option("--z1", v_z1_file, "JSON file with explicit Z1 points (ideal-colon mode)");
  verify->add_option("--seed", v_seed, "64-bit seed driving all sampling (default 1729)");
  verify->add_option("--imax", v_imax, "check twists 0..imax (default min(a1,a2)-1)");

  CLI11_PARSE(app, argc, argv);

  Output out{json, out_path};
  try {
    if (genus->parsed()) return run_genus(g_d, g_n, g_s, out, csv_path);
    if (bound->parsed()) return run_bound(b_n, b_s, out);
    if (scroll->parsed()) return run_scroll(sc_type, sc_n, sc_verb, sc_arg, out);
    if (classify->parsed()) return run_classify(c_d, c_n, c_s, out);
    if (verify->parsed())
      return run_verify(v_surface, v_a1, v_a2, v_split, v_z1_file, v_seed, v_imax, verbose, out);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 1;
}
