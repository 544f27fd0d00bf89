#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "qstar/algebra/division.hpp"
#include "qstar/algebra/text.hpp"
#include "qstar/complexes/complex.hpp"
#include "qstar/cotangent/cotangent.hpp"
#include "qstar/error.hpp"
#include "qstar/grassmann/ideals.hpp"
#include "qstar/hull/hull.hpp"
#include "qstar/syzygies/syzygies.hpp"

namespace py = pybind11;
using namespace qstar;

namespace {

template <typename Fn>
auto without_gil(Fn&& fn) {
  py::gil_scoped_release release;
  return fn();
}

std::vector<std::string> strings(const std::vector<algebra::Polynomial>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

std::vector<std::string> strings(const std::vector<algebra::Monomial>& monos) {
  std::vector<std::string> out;
  for (const auto& m : monos) out.push_back(m.to_string());
  return out;
}

py::dict complex_dict(const complexes::SimplicialComplex& k) {
  std::vector<std::string> vertices;
  for (const auto& v : k.vertices()) vertices.push_back(v.to_string());
  std::vector<std::vector<std::string>> facets;
  for (auto f : k.facets()) {
    std::vector<std::string> face;
    for (const auto& v : k.labels_of(f)) face.push_back(v.to_string());
    facets.push_back(face);
  }
  py::dict d;
  d["vertices"] = vertices;
  d["facets"] = facets;
  d["f_vector"] = complexes::f_vector(k);
  d["euler_characteristic"] = complexes::euler_characteristic(k);
  d["pure"] = complexes::is_pure(k);
  d["flag"] = complexes::is_flag(k);
  return d;
}

py::dict slice_dict(const cotangent::T1Slice& s) {
  py::dict d;
  d["n"] = s.n;
  d["delta"] = py::make_tuple(s.delta.first, s.delta.second);
  d["hom_dim"] = s.hom_dim;
  d["der_dim"] = s.der_dim;
  d["t1_dim"] = s.t1_dim;
  d["consistent"] = s.consistent();
  std::vector<std::vector<std::string>> basis;
  for (const auto& a : s.basis) basis.push_back(strings(a));
  d["basis"] = basis;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact verification of the dual quotient bundle ideal on G(2,n)";
  py::register_exception<Error>(m, "QstarError", PyExc_ValueError);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = without_gil([&] { return cli::run(args, out, err); });
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs a command line; returns (exit code, stdout, stderr).");

  m.def(
      "pfaffian", [](int i, int j, int k, int l, int n) { return grassmann::pfaffian(i, j, k, l, n).to_string(); },
      py::arg("i"), py::arg("j"), py::arg("k"), py::arg("l"), py::arg("n"));
  m.def(
      "quadric_f", [](int i, int n) { return grassmann::quadric_f(i, n).to_string(); }, py::arg("i"), py::arg("n"));
  m.def(
      "bundle_ideal", [](int n) { return strings(grassmann::bundle_ideal(n).generators); }, py::arg("n"),
      "Generators of J_n: Pfaffians in lexicographic order, then f_1, ..., f_n.");
  m.def(
      "grassmannian_ideal", [](int n) { return strings(grassmann::grassmannian_ideal(n).generators); },
      py::arg("n"));
  m.def(
      "normal_form",
      [](const std::string& text, int n) {
        const auto ideal = grassmann::bundle_ideal(n);
        const algebra::NormalFormCache nf(ideal.generators, grassmann::bundle_order(n));
        return nf.of(algebra::parse_polynomial(text, n)).to_string();
      },
      py::arg("polynomial"), py::arg("n"), "Normal form modulo J_n under the bundle order.");

  m.def(
      "verify_initial_ideal",
      [](int n, const std::string& order, bool crosscheck) {
        const auto r = without_gil([&] {
          return order == "circular" ? grassmann::verify_grassmannian_initial_ideal(n, crosscheck)
                                     : grassmann::verify_bundle_initial_ideal(n, crosscheck);
        });
        py::dict d;
        d["n"] = r.n;
        d["order"] = order;
        d["gb_holds"] = r.gb_holds;
        d["match"] = r.match;
        d["initial_generators"] = strings(r.initial_generators);
        d["sr_generators"] = strings(r.sr_generators);
        d["pairs_checked"] = r.pairs_checked;
        if (r.completion_adds_nothing) d["completion_adds_nothing"] = *r.completion_adds_nothing;
        d["passed"] = r.passed();
        return d;
      },
      py::arg("n"), py::arg("order") = "paper", py::arg("crosscheck") = false);

  m.def(
      "degree_check",
      [](int n) {
        const auto r = grassmann::degree_check(n);
        py::dict d;
        d["formula_value"] = r.formula.get_str();
        d["facet_count"] = r.facet_count;
        d["standard_monomial_degree"] = r.hilbert_degree.get_str();
        d["consistent"] = r.consistent();
        return d;
      },
      py::arg("n"));

  m.def(
      "check_vanishing",
      [](int n, int trials, std::uint64_t seed) {
        const auto r = grassmann::check_vanishing(n, trials, seed);
        py::dict d;
        d["evaluations"] = r.evaluations;
        d["failures"] = r.failures;
        return d;
      },
      py::arg("n"), py::arg("trials") = 100, py::arg("seed") = 2024);

  m.def(
      "kn_complex", [](int n) { return complex_dict(complexes::kn_complex(n)); }, py::arg("n"));
  m.def(
      "associahedron", [](int n) { return complex_dict(complexes::associahedron(n)); }, py::arg("n"));

  m.def(
      "verify_syzygies",
      [](int n, int bound) {
        const auto r = without_gil([&] { return syzygies::verify_generation(n, bound); });
        py::dict families;
        for (const auto& f : r.families) {
          py::dict fd;
          fd["count"] = f.count;
          fd["all_vanish"] = f.all_vanish;
          fd["all_members"] = f.all_members;
          families[py::str(f.family)] = fd;
        }
        py::list dims;
        for (const auto& row : r.dimensions) {
          dims.append(py::make_tuple(py::make_tuple(row.dx, row.dy), row.full, row.trace, row.families));
        }
        py::dict d;
        d["trace_syzygies"] = r.trace_syzygies;
        d["families"] = families;
        d["dimensions"] = dims;
        d["passed"] = r.passed();
        return d;
      },
      py::arg("n"), py::arg("degree_bound") = 4);

  m.def(
      "t1_slice",
      [](int n, std::pair<int, int> delta, bool with_basis) {
        return slice_dict(without_gil([&] { return cotangent::t1_slice(n, delta, with_basis); }));
      },
      py::arg("n"), py::arg("delta"), py::arg("with_basis") = true);
  m.def(
      "t1_window",
      [](int n, std::pair<int, int> max_target) {
        const auto slices = without_gil([&] { return cotangent::t1_window(n, max_target); });
        py::list out;
        for (const auto& s : slices) out.append(slice_dict(s));
        return out;
      },
      py::arg("n"), py::arg("max_target") = std::pair{3, 3});

  m.def(
      "normal_form_lemma",
      [](int n, int trials, std::uint64_t seed) {
        const auto r = cotangent::check_normal_form_lemma(n, trials, seed);
        py::dict d;
        d["trials"] = r.trials;
        d["failures"] = r.failures;
        d["nontrivial"] = r.nontrivial;
        d["targeted_failures"] = r.targeted_failures;
        d["targeted_nontrivial"] = r.targeted_nontrivial;
        return d;
      },
      py::arg("n"), py::arg("trials") = 200, py::arg("seed") = 2024);

  m.def(
      "lower_facets",
      [](const std::vector<hull::Point>& points, std::size_t height) {
        std::vector<std::vector<std::size_t>> out;
        for (const auto& f : hull::lower_facets(points, height)) out.push_back(f.points);
        return out;
      },
      py::arg("points"), py::arg("height"), "Lower facets as lists of 0-based point indices.");
  m.def(
      "is_reflexive",
      [](const std::vector<hull::Point>& points) {
        return hull::reflexivity_check(hull::LatticePolytope::from_points(points)).reflexive;
      },
      py::arg("points"));
  m.def("analyze_k6_lift", [] {
    const auto r = hull::analyze_k6_lift();
    py::dict d;
    d["lower_facet_count"] = r.lower_facet_count;
    d["unimodular"] = r.triangulation.unimodular;
    d["isomorphic"] = r.witness.has_value();
    py::dict witness;
    if (r.witness) {
      for (const auto& [from, to] : *r.witness) witness[py::int_(from.a)] = to.to_string();
    }
    d["witness"] = witness;
    d["origin_to_cone"] = r.origin_to_cone;
    d["reflexive"] = r.reflexivity.reflexive;
    d["passed"] = r.passed();
    return d;
  });
}
