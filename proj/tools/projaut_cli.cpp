// Command-line front end: one subcommand per module, machine-readable
// output in json, csv or plain form. Exit codes: 0 success, 1 domain
// error, 2 usage error.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "projaut/hyperelliptic.hpp"
#include "projaut/moebius.hpp"
#include "projaut/orbifold.hpp"
#include "projaut/origami.hpp"
#include "projaut/series.hpp"
#include "projaut/textio.hpp"
#include "projaut/torus.hpp"

using json = nlohmann::ordered_json;
using namespace projaut;

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  std::string command;
  json data;
  Table table;           // used by csv / plain when non-empty
  std::string raw_text;  // exact text output (export), bypasses formatting
};

std::string format_from_env() {
  const char* env = std::getenv("PROJAUT_FORMAT");
  if (!env) return "plain";
  std::string f = env;
  if (f != "json" && f != "csv" && f != "plain")
    fail(errc::bad_input, "PROJAUT_FORMAT must be json, csv or plain");
  return f;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void print_plain(const json& value, const std::string& prefix) {
  if (value.is_object()) {
    for (const auto& [key, sub] : value.items()) {
      std::string name = prefix.empty() ? key : prefix + "." + key;
      if (sub.is_object() || sub.is_array())
        print_plain(sub, name);
      else
        std::cout << name << ": " << (sub.is_string() ? sub.get<std::string>() : sub.dump())
                  << "\n";
    }
  } else if (value.is_array()) {
    std::ostringstream flat;
    for (size_t k = 0; k < value.size(); ++k)
      flat << (k ? " " : "")
           << (value[k].is_string() ? value[k].get<std::string>() : value[k].dump());
    std::cout << prefix << ": " << flat.str() << "\n";
  }
}

void emit(const Output& out, const std::string& format) {
  if (!out.raw_text.empty()) {
    if (format == "json") {
      json doc;
      doc["schema"] = "projaut/1";
      doc["command"] = out.command;
      doc["ok"] = true;
      doc["data"] = json{{"action_file", out.raw_text}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << out.raw_text;
    }
    return;
  }
  if (format == "json") {
    json doc;
    doc["schema"] = "projaut/1";
    doc["command"] = out.command;
    doc["ok"] = true;
    doc["data"] = out.data;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    if (!out.table.header.empty()) {
      for (size_t k = 0; k < out.table.header.size(); ++k)
        std::cout << (k ? "," : "") << csv_quote(out.table.header[k]);
      std::cout << "\n";
      for (const auto& row : out.table.rows) {
        for (size_t k = 0; k < row.size(); ++k) std::cout << (k ? "," : "") << csv_quote(row[k]);
        std::cout << "\n";
      }
    } else {
      // single-record csv: keys as header, scalar values as one row
      std::vector<std::string> keys, vals;
      for (const auto& [key, sub] : out.data.items()) {
        if (sub.is_object() || sub.is_array()) continue;
        keys.push_back(key);
        vals.push_back(sub.is_string() ? sub.get<std::string>() : sub.dump());
      }
      for (size_t k = 0; k < keys.size(); ++k) std::cout << (k ? "," : "") << csv_quote(keys[k]);
      std::cout << "\n";
      for (size_t k = 0; k < vals.size(); ++k) std::cout << (k ? "," : "") << csv_quote(vals[k]);
      std::cout << "\n";
    }
    return;
  }
  if (!out.table.header.empty()) {
    for (size_t k = 0; k < out.table.header.size(); ++k)
      std::cout << (k ? "\t" : "") << out.table.header[k];
    std::cout << "\n";
    for (const auto& row : out.table.rows) {
      for (size_t k = 0; k < row.size(); ++k) std::cout << (k ? "\t" : "") << row[k];
      std::cout << "\n";
    }
    // scalar summary fields under the table
    for (const auto& [key, sub] : out.data.items())
      if (!sub.is_object() && !sub.is_array() && key != "rows" && key != "signatures")
        std::cout << key << ": " << (sub.is_string() ? sub.get<std::string>() : sub.dump())
                  << "\n";
    return;
  }
  print_plain(out.data, "");
}

json scalars_to_json(const std::vector<Scalar>& xs) {
  json arr = json::array();
  for (const Scalar& x : xs) arr.push_back(x.str());
  return arr;
}

std::string join_scalars(const std::vector<Scalar>& xs) {
  std::string out;
  for (size_t k = 0; k < xs.size(); ++k) out += (k ? " " : "") + xs[k].str();
  return out;
}

// ---- subcommand handlers ----

Output run_schwarzian(const std::string& coeffs) {
  Series f{parse_scalar_list(coeffs)};
  Series s = schwarzian(f);
  Output out;
  out.command = "schwarzian";
  out.data["input_order"] = f.order();
  out.data["order"] = s.order();
  out.data["coefficients"] = scalars_to_json(s.coeffs());
  out.table.header = {"degree", "coefficient"};
  for (int k = 0; k <= s.order(); ++k)
    out.table.rows.push_back({std::to_string(k), s.coeff(k).str()});
  return out;
}

Output run_cocycle(const std::string& fc, const std::string& gc) {
  Series f{parse_scalar_list(fc)};
  Series g{parse_scalar_list(gc)};
  Series r = cocycle_residual(f, g);
  Output out;
  out.command = "cocycle";
  out.data["order"] = r.order();
  out.data["residual"] = scalars_to_json(r.coeffs());
  out.data["zero"] = r.is_zero();
  return out;
}

Output run_fixed_locus(const std::string& path, bool as_relatively_hurwitz) {
  ActionGroup group = path == "-" ? read_action_group(std::cin) : read_action_group_file(path);
  FixedLocus locus = fixed_locus(group);
  Output out;
  out.command = "action fixed-locus";
  out.data["genus"] = group.genus();
  out.data["base"] = base_structure_name(group.base());
  out.data["pathway"] = locus.pathway;
  out.data["empty"] = locus.empty;
  out.data["dimension"] = locus.dimension;
  if (!locus.empty) {
    out.data["basepoint"] = scalars_to_json(locus.basepoint);
    json dirs = json::array();
    for (const QuadCoords& d : locus.directions) dirs.push_back(scalars_to_json(d));
    out.data["directions"] = dirs;
  }
  if (as_relatively_hurwitz)
    out.data["interpretation"] =
        "fixed points are the relatively Hurwitz structures in the Schwarzian chart, "
        "provided the generators span the full automorphism action";
  out.table.header = {"quantity", "value"};
  out.table.rows.push_back({"dimension", std::to_string(locus.dimension)});
  out.table.rows.push_back({"empty", locus.empty ? "true" : "false"});
  if (!locus.empty) {
    out.table.rows.push_back({"basepoint", join_scalars(locus.basepoint)});
    for (size_t k = 0; k < locus.directions.size(); ++k)
      out.table.rows.push_back({"direction " + std::to_string(k + 1),
                                join_scalars(locus.directions[k])});
  }
  return out;
}

Output run_hyperelliptic_invariants(int genus, const std::string& group_spec) {
  HyperellipticModel model = group_spec.find('R') == std::string::npos &&
                                     group_spec.find('r') == std::string::npos
                                 ? HyperellipticModel::plain(genus)
                                 : HyperellipticModel::rotation_family(genus);
  std::vector<MonomialAction> gens = parse_generators(model, group_spec);
  ActionGroup exported = export_action(model, gens);
  Output out;
  out.command = "hyperelliptic invariants";
  out.data["genus"] = genus;
  out.data["rotation_order"] = model.rotation_order;
  out.data["basis_size"] = model.dimension();
  json labels = json::array();
  for (const MonomialAction& g : gens) labels.push_back(g.label);
  out.data["generators"] = labels;
  out.data["invariant_dimension"] = invariant_dimension(model, gens);
  out.data["fixed_locus_dimension"] = fixed_locus(exported).dimension;
  out.data["pathway"] = exported.pathway();
  return out;
}

Output run_hyperelliptic_export(int genus, const std::string& group_spec) {
  HyperellipticModel model = group_spec.find('R') == std::string::npos &&
                                     group_spec.find('r') == std::string::npos
                                 ? HyperellipticModel::plain(genus)
                                 : HyperellipticModel::rotation_family(genus);
  std::vector<MonomialAction> gens = parse_generators(model, group_spec);
  Output out;
  out.command = "hyperelliptic export";
  out.raw_text = action_group_to_text(export_action(model, gens));
  return out;
}

Output run_orbifold_rh(long order, long genus0, const std::string& branch) {
  OrbifoldSignature sig;
  sig.group_order = order;
  sig.quotient_genus = genus0;
  if (!branch.empty())
    for (const Scalar& s : parse_scalar_list(branch))
      sig.branch_orders.push_back(s.rat().get_num().get_si());
  std::optional<long> g = riemann_hurwitz_genus(sig);
  Output out;
  out.command = "orbifold rh";
  out.data["genus"] = g ? json(*g) : json(nullptr);
  out.data["integral"] = g.has_value();
  return out;
}

Output run_orbifold_dim(long genus0, long points) {
  Output out;
  out.command = "orbifold dim";
  out.data["dimension"] = invariant_quadratic_dimension(genus0, points);
  out.data["very_large"] = is_very_large(genus0, points);
  return out;
}

Output run_orbifold_triangles(const std::string& ratio_min, long max_c) {
  mpq_class threshold = parse_mpq(ratio_min);
  std::vector<TriangleSignature> sigs = max_c > 0
                                            ? enumerate_triangle_signatures(threshold, max_c)
                                            : enumerate_triangle_signatures(threshold);
  Output out;
  out.command = "orbifold triangles";
  json rows = json::array();
  out.table.header = {"a", "b", "c", "ratio"};
  for (const TriangleSignature& s : sigs) {
    mpq_class ratio = automorphisms_per_genus(s);
    rows.push_back(json{{"a", s.a}, {"b", s.b}, {"c", s.c}, {"ratio", ratio.get_str()}});
    out.table.rows.push_back({std::to_string(s.a), std::to_string(s.b), std::to_string(s.c),
                              ratio.get_str()});
  }
  out.data["signatures"] = rows;
  return out;
}

Output run_orbifold_quotient_order(long zero_order, long stabilizer) {
  QuotientOrder q = quotient_differential_order(zero_order, stabilizer);
  Output out;
  out.command = "orbifold quotient-order";
  out.data["order"] = q.order.get_str();
  out.data["holomorphic"] = q.holomorphic;
  return out;
}

Output run_orbifold_fermat(long degree) {
  Output out;
  out.command = "orbifold fermat";
  out.data["genus"] = fermat_genus(degree);
  return out;
}

Output run_torus_classify(const std::string& tau_name, const std::string& c_text, int order) {
  TauClass tau = parse_tau_class(tau_name);
  Scalar c = parse_scalar(c_text);
  Output out;
  out.command = "torus classify";
  out.data["tau"] = tau_name;
  out.data["c"] = c.str();
  out.data["order"] = order;
  json rows = json::array();
  out.table.header = {"automorphism", "multiplier", "formula", "series", "agree"};
  long count = tau == TauClass::generic ? 2 : (tau == TauClass::square ? 4 : 6);
  std::vector<TorusAutomorphism> auts;
  auts.push_back(TorusAutomorphism::translation_by(Scalar::rational(1, 2)));
  for (long k = 1; k < count; ++k) auts.push_back(TorusAutomorphism::rotation(tau, k));
  for (const TorusAutomorphism& aut : auts) {
    TorusClassification f = classify_by_formula(c, aut, tau);
    TorusClassification s = classify_by_series(c, aut, tau, order);
    rows.push_back(json{{"label", aut.label},
                        {"multiplier", aut.multiplier.str()},
                        {"formula", classification_name(f)},
                        {"series", classification_name(s)},
                        {"agree", f == s}});
    out.table.rows.push_back({aut.label, aut.multiplier.str(), classification_name(f),
                              classification_name(s), f == s ? "yes" : "NO"});
  }
  out.data["rows"] = rows;
  out.data["relatively_hurwitz_affine"] = relatively_hurwitz_affine(tau, c);
  out.data["relatively_hurwitz_projective"] = relatively_hurwitz_projective(tau, c);
  return out;
}

Output run_origami_census(int max_squares) {
  Output out;
  out.command = "origami census";
  json rows = json::array();
  out.table.header = {"n", "h", "v", "genus", "translations", "normal", "tight"};
  for (const CensusRow& r : origami_census(max_squares)) {
    rows.push_back(json{{"n", r.n},
                        {"h", r.h_cycles},
                        {"v", r.v_cycles},
                        {"genus", r.genus},
                        {"translations", r.translation_order},
                        {"normal", r.normal},
                        {"tight", r.tight ? json(*r.tight) : json(nullptr)}});
    out.table.rows.push_back({std::to_string(r.n), r.h_cycles, r.v_cycles,
                              std::to_string(r.genus), std::to_string(r.translation_order),
                              r.normal ? "true" : "false",
                              r.tight ? (*r.tight ? "true" : "false") : ""});
  }
  out.data["rows"] = rows;
  return out;
}

Output run_origami_check(int squares, const std::string& h, const std::string& v) {
  Origami o(Perm::from_cycles(squares, h), Perm::from_cycles(squares, v));
  Output out;
  out.command = "origami check";
  int g = genus(o);
  out.data["n"] = squares;
  out.data["genus"] = g;
  out.data["translations"] = static_cast<long>(translation_group(o).size());
  out.data["normal"] = is_normal(o);
  out.data["monodromy_order"] = monodromy_group_order(o);
  if (g >= 2) {
    TranslationBoundReport b = check_hurwitz_translation_bound(o);
    out.data["bound"] = b.bound;
    out.data["tight"] = b.tight;
  } else {
    out.data["bound"] = nullptr;
    out.data["tight"] = nullptr;
  }
  return out;
}

mpq_class random_small_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  for (;;) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    if (!nonzero || q != 0) return q;
  }
}

Output run_laws(const std::string& suite, long count, int order, long seed) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  long failures = 0;
  if (suite == "cocycle") {
    for (long t = 0; t < count; ++t) {
      std::vector<Scalar> fc, gc;
      fc.push_back(Scalar(random_small_rational(rng, false)));
      fc.push_back(Scalar(random_small_rational(rng, true)));
      gc.push_back(Scalar::zero());
      gc.push_back(Scalar(random_small_rational(rng, true)));
      for (int k = 2; k <= order; ++k) {
        fc.push_back(Scalar(random_small_rational(rng, false)));
        gc.push_back(Scalar(random_small_rational(rng, false)));
      }
      if (!cocycle_residual(Series(fc), Series(gc)).is_zero()) ++failures;
    }
  } else if (suite == "moebius-kernel") {
    for (long t = 0; t < count; ++t) {
      Scalar a = Scalar::gaussian(random_small_rational(rng, false), random_small_rational(rng, false));
      Scalar b = Scalar::gaussian(random_small_rational(rng, false), random_small_rational(rng, false));
      Scalar c = Scalar::gaussian(random_small_rational(rng, false), random_small_rational(rng, false));
      Scalar d = Scalar::gaussian(random_small_rational(rng, false), random_small_rational(rng, false));
      if ((a * d - b * c).is_zero()) {
        --t;
        continue;
      }
      MobiusMap f(a, b, c, d);
      Scalar center{random_small_rational(rng, false)};
      if ((f.c() * center + f.d()).is_zero()) {
        --t;
        continue;
      }
      if (!schwarzian(f.taylor(center, order)).is_zero()) ++failures;
    }
  } else {
    fail(errc::bad_input, "unknown law suite '" + suite + "'");
  }
  Output out;
  out.command = "laws";
  out.data["suite"] = suite;
  out.data["count"] = count;
  out.data["order"] = order;
  out.data["seed"] = seed;
  out.data["failures"] = failures;
  out.data["passed"] = failures == 0;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for projective structures and their automorphisms"};
  app.require_subcommand(1);
  std::string format;
  app.add_option("--format", format, "output format: json, csv or plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  // schwarzian
  auto* schw = app.add_subcommand("schwarzian", "Schwarzian derivative of a truncated series");
  std::string schw_coeffs;
  schw->add_option("--coeffs", schw_coeffs, "series coefficients, constant term first")
      ->required();

  // cocycle
  auto* coc = app.add_subcommand("cocycle", "cocycle residual S(f o g) - (S(f) o g) g'^2 - S(g)");
  std::string coc_f, coc_g;
  coc->add_option("--f", coc_f, "outer series coefficients")->required();
  coc->add_option("--g", coc_g, "inner series coefficients (zero constant term)")->required();

  // action fixed-locus
  auto* action = app.add_subcommand("action", "affine action on quadratic differentials");
  action->require_subcommand(1);
  auto* fixed = action->add_subcommand("fixed-locus", "exact fixed locus of an action file");
  std::string action_file;
  bool as_rel_hurwitz = false;
  fixed->add_option("--file", action_file, "action file path, or - for stdin")->required();
  fixed->add_flag("--relatively-hurwitz", as_rel_hurwitz,
                  "annotate the locus as relatively Hurwitz structures");

  // hyperelliptic
  auto* hyper = app.add_subcommand("hyperelliptic", "explicit models y^2 = p(x)");
  hyper->require_subcommand(1);
  auto* invar = hyper->add_subcommand("invariants", "invariant dimension under the generators");
  int hyper_genus = 3;
  std::string hyper_group = "J";
  invar->add_option("--genus", hyper_genus, "genus g >= 2")->required();
  invar->add_option("--group", hyper_group, "generators, e.g. J or J,R1");
  auto* expo = hyper->add_subcommand("export", "emit the action file for the generators");
  expo->add_option("--genus", hyper_genus, "genus g >= 2")->required();
  expo->add_option("--group", hyper_group, "generators, e.g. J or J,R1");

  // orbifold
  auto* orb = app.add_subcommand("orbifold", "Riemann-Hurwitz and related arithmetic");
  orb->require_subcommand(1);
  auto* rh = orb->add_subcommand("rh", "genus from an orbifold signature");
  long rh_order = 1, rh_genus0 = 0;
  std::string rh_branch;
  rh->add_option("--order", rh_order, "group order N")->required();
  rh->add_option("--genus0", rh_genus0, "quotient genus")->required();
  rh->add_option("--branch", rh_branch, "branch orders, e.g. 2,3,7");
  auto* dim = orb->add_subcommand("dim", "invariant quadratic-differential dimension");
  long dim_genus0 = 0, dim_points = 3;
  dim->add_option("--genus0", dim_genus0, "quotient genus")->required();
  dim->add_option("--points", dim_points, "number of branch values")->required();
  auto* tri = orb->add_subcommand("triangles", "hyperbolic triangle signatures by ratio");
  std::string tri_ratio = "84";
  long tri_max_c = 0;
  tri->add_option("--ratio-min", tri_ratio, "minimal automorphisms-per-genus ratio")->required();
  tri->add_option("--max-c", tri_max_c, "explicit cap on c (required for ratios <= 12)");
  auto* quot = orb->add_subcommand("quotient-order", "pushforward order of a differential");
  long q_zero = 0, q_stab = 1;
  quot->add_option("--zero-order", q_zero, "vanishing order s at the point")->required();
  quot->add_option("--stabilizer", q_stab, "stabilizer order m")->required();
  auto* fermat = orb->add_subcommand("fermat", "genus of the Fermat curve");
  long fermat_degree = 4;
  fermat->add_option("--degree", fermat_degree, "curve degree n")->required();

  // torus
  auto* torus = app.add_subcommand("torus", "genus-1 affine structures");
  torus->require_subcommand(1);
  auto* classify = torus->add_subcommand("classify", "classification grid for one structure");
  std::string torus_tau = "generic", torus_c = "0";
  int torus_order = 12;
  classify->add_option("--tau", torus_tau, "lattice class: generic, square, hexagonal")
      ->required();
  classify->add_option("--c", torus_c, "affine parameter, exact literal")->required();
  classify->add_option("--order", torus_order, "series truncation order");

  // origami
  auto* ori = app.add_subcommand("origami", "square-tiled surfaces");
  ori->require_subcommand(1);
  auto* census = ori->add_subcommand("census", "exhaustive census up to conjugation");
  int census_max = 4;
  census->add_option("--max-squares", census_max, "largest square count (<= 8)")->required();
  auto* check = ori->add_subcommand("check", "invariants of one origami");
  int check_n = 1;
  std::string check_h = "()", check_v = "()";
  check->add_option("--squares", check_n, "number of squares")->required();
  check->add_option("--right", check_h, "right-neighbor permutation, cycle notation")
      ->required();
  check->add_option("--up", check_v, "top-neighbor permutation, cycle notation")->required();

  // laws
  auto* laws = app.add_subcommand("laws", "randomized exact law suites");
  std::string laws_suite = "cocycle";
  long laws_count = 50, laws_seed = 12345;
  int laws_order = kDefaultLawOrder;
  laws->add_option("--suite", laws_suite, "cocycle or moebius-kernel")
      ->check(CLI::IsMember({"cocycle", "moebius-kernel"}));
  laws->add_option("--count", laws_count, "number of random instances");
  laws->add_option("--order", laws_order, "truncation order");
  laws->add_option("--seed", laws_seed, "deterministic seed");

  // global flags like --format may appear after the subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
    for (CLI::App* sub : node->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (format.empty()) format = format_from_env();
    Output out;
    if (*schw)
      out = run_schwarzian(schw_coeffs);
    else if (*coc)
      out = run_cocycle(coc_f, coc_g);
    else if (*fixed)
      out = run_fixed_locus(action_file, as_rel_hurwitz);
    else if (*invar)
      out = run_hyperelliptic_invariants(hyper_genus, hyper_group);
    else if (*expo)
      out = run_hyperelliptic_export(hyper_genus, hyper_group);
    else if (*rh)
      out = run_orbifold_rh(rh_order, rh_genus0, rh_branch);
    else if (*dim)
      out = run_orbifold_dim(dim_genus0, dim_points);
    else if (*tri)
      out = run_orbifold_triangles(tri_ratio, tri_max_c);
    else if (*quot)
      out = run_orbifold_quotient_order(q_zero, q_stab);
    else if (*fermat)
      out = run_orbifold_fermat(fermat_degree);
    else if (*classify)
      out = run_torus_classify(torus_tau, torus_c, torus_order);
    else if (*census)
      out = run_origami_census(census_max);
    else if (*check)
      out = run_origami_check(check_n, check_h, check_v);
    else if (*laws)
      out = run_laws(laws_suite, laws_count, laws_order, laws_seed);
    else
      fail(errc::bad_input, "no subcommand selected");
    emit(out, format);
    return 0;
  } catch (const Error& e) {
    json err;
    err["schema"] = "projaut/1";
    err["error"] = json{{"code", errc_name(e.code())}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err;
    err["schema"] = "projaut/1";
    err["error"] = json{{"code", "Internal"}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
}
