// Python bindings for the main operations. Exact scalars cross the
// boundary as literal strings ("3/4", "1/2+1/2*i") so no precision is ever
// lost; permutations use 1-based cycle notation.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "projaut/hyperelliptic.hpp"
#include "projaut/moebius.hpp"
#include "projaut/orbifold.hpp"
#include "projaut/origami.hpp"
#include "projaut/series.hpp"
#include "projaut/textio.hpp"
#include "projaut/torus.hpp"

namespace py = pybind11;
using namespace projaut;

namespace {

Series series_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Scalar> cs;
  cs.reserve(coeffs.size());
  for (const std::string& c : coeffs) cs.push_back(parse_scalar(c));
  return Series(std::move(cs));
}

std::vector<std::string> series_to_strings(const Series& s) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(s.order()) + 1);
  for (const Scalar& c : s.coeffs()) out.push_back(c.str());
  return out;
}

HyperellipticModel model_for(int genus, const std::string& group_spec) {
  bool wants_rotation = group_spec.find('R') != std::string::npos ||
                        group_spec.find('r') != std::string::npos;
  return wants_rotation ? HyperellipticModel::rotation_family(genus)
                        : HyperellipticModel::plain(genus);
}

}  // namespace

PYBIND11_MODULE(projaut, m) {
  m.doc() = "exact computations for projective structures and their automorphisms";

  py::register_exception<Error>(m, "DomainError");

  // power series
  m.def(
      "schwarzian",
      [](const std::vector<std::string>& coeffs) {
        return series_to_strings(schwarzian(series_from_strings(coeffs)));
      },
      py::arg("coeffs"), "Schwarzian derivative of a truncated series, exact coefficients");
  m.def(
      "cocycle_residual",
      [](const std::vector<std::string>& f, const std::vector<std::string>& g) {
        return series_to_strings(cocycle_residual(series_from_strings(f), series_from_strings(g)));
      },
      py::arg("f"), py::arg("g"));
  m.def(
      "series_arith",
      [](const std::vector<std::string>& f, const std::vector<std::string>& g,
         const std::string& op) {
        Series a = series_from_strings(f), b = series_from_strings(g);
        if (op == "add") return series_to_strings(a + b);
        if (op == "sub") return series_to_strings(a - b);
        if (op == "mul") return series_to_strings(a * b);
        if (op == "div") return series_to_strings(a / b);
        fail(errc::bad_input, "op must be add, sub, mul or div");
      },
      py::arg("f"), py::arg("g"), py::arg("op"),
      "Exact truncated ring arithmetic; results use the smaller operand order");
  m.def(
      "derive_series",
      [](const std::vector<std::string>& f) {
        return series_to_strings(series_from_strings(f).derivative());
      },
      py::arg("f"));
  m.def(
      "compose_series",
      [](const std::vector<std::string>& f, const std::vector<std::string>& g) {
        return series_to_strings(compose(series_from_strings(f), series_from_strings(g)));
      },
      py::arg("f"), py::arg("g"));
  m.def(
      "revert_series",
      [](const std::vector<std::string>& f) {
        return series_to_strings(revert(series_from_strings(f)));
      },
      py::arg("f"));
  m.def(
      "is_moebius_series",
      [](const std::vector<std::string>& f) { return is_moebius_series(series_from_strings(f)); },
      py::arg("f"));

  // moebius maps
  py::class_<MobiusMap>(m, "MobiusMap")
      .def(py::init([](const std::string& a, const std::string& b, const std::string& c,
                       const std::string& d) {
             return MobiusMap(parse_scalar(a), parse_scalar(b), parse_scalar(c), parse_scalar(d));
           }),
           py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
      .def_static("identity", &MobiusMap::identity)
      .def_static("inversion", &MobiusMap::inversion)
      .def("inverse", &MobiusMap::inverse)
      .def("compose",
           [](const MobiusMap& f, const MobiusMap& g) { return compose(f, g); })
      .def("apply",
           [](const MobiusMap& f, const std::string& point) {
             SpherePoint p = point == "oo" ? SpherePoint::infinity()
                                           : SpherePoint(parse_scalar(point));
             return f.apply(p).str();
           },
           py::arg("point"), "Evaluate at an exact point; 'oo' is infinity")
      .def("taylor",
           [](const MobiusMap& f, const std::string& center, int order) {
             return series_to_strings(f.taylor(parse_scalar(center), order));
           },
           py::arg("center"), py::arg("order"))
      .def("__eq__", [](const MobiusMap& f, const MobiusMap& g) { return f == g; })
      .def("__repr__", [](const MobiusMap& f) { return f.str(); });

  // orbifold arithmetic
  m.def(
      "riemann_hurwitz_genus",
      [](long order, long genus0, const std::vector<long>& branch) -> py::object {
        auto g = riemann_hurwitz_genus({order, genus0, branch});
        if (!g) return py::none();
        return py::int_(*g);
      },
      py::arg("order"), py::arg("genus0"), py::arg("branch_orders") = std::vector<long>{},
      "Genus solving Riemann-Hurwitz, or None when not integral");
  m.def("invariant_quadratic_dimension", &invariant_quadratic_dimension, py::arg("genus0"),
        py::arg("points"));
  m.def("is_very_large", &is_very_large, py::arg("genus0"), py::arg("points"));
  m.def(
      "automorphisms_per_genus",
      [](long a, long b, long c) { return automorphisms_per_genus({a, b, c}).get_str(); },
      py::arg("a"), py::arg("b"), py::arg("c"));
  m.def(
      "triangle_signatures",
      [](const std::string& ratio_min, long max_c) {
        std::vector<TriangleSignature> sigs =
            max_c > 0 ? enumerate_triangle_signatures(parse_mpq(ratio_min), max_c)
                      : enumerate_triangle_signatures(parse_mpq(ratio_min));
        std::vector<std::tuple<long, long, long, std::string>> out;
        for (const TriangleSignature& s : sigs)
          out.emplace_back(s.a, s.b, s.c, automorphisms_per_genus(s).get_str());
        return out;
      },
      py::arg("ratio_min"), py::arg("max_c") = 0);
  m.def(
      "quotient_differential_order",
      [](long zero_order, long stabilizer) {
        QuotientOrder q = quotient_differential_order(zero_order, stabilizer);
        return py::make_tuple(q.order.get_str(), q.holomorphic);
      },
      py::arg("zero_order"), py::arg("stabilizer"));
  m.def("fermat_genus", &fermat_genus, py::arg("degree"));

  // hyperelliptic models
  m.def(
      "hyperelliptic_invariant_dimension",
      [](int genus, const std::string& group) {
        HyperellipticModel model = model_for(genus, group);
        return invariant_dimension(model, parse_generators(model, group));
      },
      py::arg("genus"), py::arg("group") = "J",
      "Invariant quadratic differentials under J / rotations, by character count");
  m.def(
      "hyperelliptic_fixed_locus_dimension",
      [](int genus, const std::string& group) {
        HyperellipticModel model = model_for(genus, group);
        return fixed_locus(export_action(model, parse_generators(model, group))).dimension;
      },
      py::arg("genus"), py::arg("group") = "J",
      "Same quantity through the affine-action fixed locus");
  m.def(
      "hyperelliptic_action_file",
      [](int genus, const std::string& group) {
        HyperellipticModel model = model_for(genus, group);
        return action_group_to_text(export_action(model, parse_generators(model, group)));
      },
      py::arg("genus"), py::arg("group") = "J");
  m.def(
      "fixed_locus_dimension",
      [](const std::string& action_text) -> py::object {
        FixedLocus locus = fixed_locus(parse_action_group(action_text));
        if (locus.empty) return py::none();
        return py::int_(locus.dimension);
      },
      py::arg("action_text"), "Fixed-locus dimension of an action file; None when empty");

  // torus structures
  m.def(
      "torus_classify",
      [](const std::string& tau_name, const std::string& c_text, int order) {
        TauClass tau = parse_tau_class(tau_name);
        Scalar c = parse_scalar(c_text);
        long count = tau == TauClass::generic ? 2 : (tau == TauClass::square ? 4 : 6);
        py::dict out;
        std::vector<TorusAutomorphism> auts;
        auts.push_back(TorusAutomorphism::translation_by(Scalar::rational(1, 2)));
        for (long k = 1; k < count; ++k) auts.push_back(TorusAutomorphism::rotation(tau, k));
        for (const TorusAutomorphism& aut : auts) {
          TorusClassification f = classify_by_formula(c, aut, tau);
          TorusClassification s = classify_by_series(c, aut, tau, order);
          if (f != s) fail(errc::bad_input, "pathways disagree; unreachable");
          out[py::str(aut.label)] = classification_name(f);
        }
        return out;
      },
      py::arg("tau"), py::arg("c"), py::arg("order") = 12);
  m.def(
      "relatively_hurwitz_affine",
      [](const std::string& tau, const std::string& c) {
        return relatively_hurwitz_affine(parse_tau_class(tau), parse_scalar(c));
      },
      py::arg("tau"), py::arg("c"));
  m.def(
      "relatively_hurwitz_projective",
      [](const std::string& tau, const std::string& c) {
        return relatively_hurwitz_projective(parse_tau_class(tau), parse_scalar(c));
      },
      py::arg("tau"), py::arg("c"));

  // origamis
  py::class_<Origami>(m, "Origami")
      .def(py::init([](int n, const std::string& h, const std::string& v) {
             return Origami(Perm::from_cycles(n, h), Perm::from_cycles(n, v));
           }),
           py::arg("n"), py::arg("h"), py::arg("v"))
      .def_property_readonly("n", &Origami::squares)
      .def("is_connected", [](const Origami& o) { return is_connected(o); })
      .def("genus", [](const Origami& o) { return genus(o); })
      .def("translation_order",
           [](const Origami& o) { return static_cast<long>(translation_group(o).size()); })
      .def("is_normal", [](const Origami& o) { return is_normal(o); })
      .def("monodromy_order", [](const Origami& o) { return monodromy_group_order(o); })
      .def("bound_report",
           [](const Origami& o) {
             TranslationBoundReport r = check_hurwitz_translation_bound(o);
             py::dict d;
             d["genus"] = r.genus;
             d["translations"] = r.translation_order;
             d["bound"] = r.bound;
             d["normal"] = r.normal;
             d["tight"] = r.tight;
             return d;
           })
      .def("__repr__", [](const Origami& o) {
        return "Origami(" + std::to_string(o.squares()) + ", \"" + o.right.cycle_string() +
               "\", \"" + o.up.cycle_string() + "\")";
      });
  m.def("normal_origami_genus_condition", &normal_origami_genus_condition, py::arg("genus"));
  m.def(
      "origami_census",
      [](int n_max) {
        py::list rows;
        for (const CensusRow& r : origami_census(n_max)) {
          py::dict d;
          d["n"] = r.n;
          d["h"] = r.h_cycles;
          d["v"] = r.v_cycles;
          d["genus"] = r.genus;
          d["translations"] = r.translation_order;
          d["normal"] = r.normal;
          d["tight"] = r.tight ? py::object(py::bool_(*r.tight)) : py::object(py::none());
          rows.append(d);
        }
        return rows;
      },
      py::arg("n_max"));
}
