#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "qstar/algebra/text.hpp"
#include "qstar/complexes/complex.hpp"
#include "qstar/cotangent/cotangent.hpp"
#include "qstar/error.hpp"
#include "qstar/grassmann/ideals.hpp"
#include "qstar/hull/hull.hpp"
#include "qstar/parallel.hpp"
#include "qstar/syzygies/syzygies.hpp"

namespace qstar::cli {

namespace {

using Json = nlohmann::ordered_json;
using algebra::Monomial;
using algebra::Polynomial;
using complexes::SimplicialComplex;
using complexes::VertexLabel;

struct Outcome {
  Json report;
  std::ostringstream text;
  bool passed = true;
};

struct Options {
  bool json = false;
  std::uint64_t seed = 2024;
  unsigned threads = 0;
  std::string out;
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error("expected DX,DY, got " + text);
  try {
    std::size_t a = 0, b = 0;
    const std::string left = text.substr(0, comma), right = text.substr(comma + 1);
    const int dx = std::stoi(left, &a);
    const int dy = std::stoi(right, &b);
    if (a != left.size() || b != right.size()) throw Error("expected DX,DY, got " + text);
    return {dx, dy};
  } catch (const std::logic_error&) {
    throw Error("expected DX,DY, got " + text);
  }
}

void merge(Json& into, const Json& from) {
  for (const auto& [key, value] : from.items()) into[key] = value;
}

const char* mark(bool ok) { return ok ? "ok" : "FAIL"; }

Json strings(const std::vector<Polynomial>& polys) {
  Json a = Json::array();
  for (const auto& p : polys) a.push_back(p.to_string());
  return a;
}

Json strings(const std::vector<Monomial>& monos) {
  Json a = Json::array();
  for (const auto& m : monos) a.push_back(m.to_string());
  return a;
}

// complex

SimplicialComplex complex_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  auto arg = [&] {
    if (colon == std::string::npos) throw Error(head + " needs an argument, as in " + head + ":5");
    return std::stoi(spec.substr(colon + 1));
  };
  auto frees = [](int k) {
    std::vector<VertexLabel> v;
    for (int i = 1; i <= k; ++i) v.push_back(VertexLabel::free(i));
    return v;
  };
  if (head == "assoc") return complexes::associahedron(arg());
  if (head == "kn") return complexes::kn_complex(arg());
  if (head == "s0") return complexes::zero_sphere();
  if (head == "simplex") return complexes::simplex(frees(arg()));
  if (head == "boundary") return complexes::simplex_boundary(frees(arg()));
  return complexes::from_text(read_file(spec));
}

Json complex_json(const SimplicialComplex& k) {
  Json j;
  Json vertices = Json::array();
  for (const auto& v : k.vertices()) vertices.push_back(v.to_string());
  Json facets = Json::array();
  for (auto f : k.facets()) {
    Json face = Json::array();
    for (const auto& v : k.labels_of(f)) face.push_back(v.to_string());
    facets.push_back(face);
  }
  j["vertices"] = vertices;
  j["facets"] = facets;
  j["f_vector"] = complexes::f_vector(k);
  j["dimension"] = k.dimension();
  j["euler_characteristic"] = complexes::euler_characteristic(k);
  j["pure"] = complexes::is_pure(k);
  j["pseudomanifold"] = complexes::is_pseudomanifold(k);
  j["flag"] = complexes::is_flag(k);
  return j;
}

void complex_text(std::ostream& s, const SimplicialComplex& k) {
  s << "# " << k.vertex_count() << " vertices, " << k.facets().size() << " facets, dimension " << k.dimension()
    << "\n# f-vector";
  for (auto f : complexes::f_vector(k)) s << ' ' << f;
  s << "\n# euler characteristic " << complexes::euler_characteristic(k) << ", pure "
    << complexes::is_pure(k) << ", pseudomanifold " << complexes::is_pseudomanifold(k) << ", flag "
    << complexes::is_flag(k) << '\n'
    << complexes::to_text(k);
}

// groebner

Json initial_ideal_json(const grassmann::InitialIdealReport& r) {
  Json j;
  j["n"] = r.n;
  j["order"] = r.order;
  j["order_layers"] = r.order_layers;
  j["gb_holds"] = r.gb_holds;
  j["match"] = r.match;
  j["leading_terms_squarefree"] = r.leading_terms_squarefree;
  j["counts"] = {{"generators", r.generator_count},
                 {"initial_generators", r.initial_generators.size()},
                 {"sr_generators", r.sr_generators.size()},
                 {"pairs_checked", r.pairs_checked},
                 {"pairs_skipped", r.pairs_skipped},
                 {"reduction_steps", r.reduction_steps}};
  j["initial_generators"] = strings(r.initial_generators);
  if (r.failure) {
    j["failing_pair"] = {{"first", r.failure->first},
                         {"second", r.failure->second},
                         {"remainder", r.failure->remainder.to_string()}};
  }
  if (r.completion_adds_nothing) j["completion_adds_nothing"] = *r.completion_adds_nothing;
  return j;
}

// t1

Json slice_json(const cotangent::T1Slice& s) {
  Json j;
  j["delta"] = {s.delta.first, s.delta.second};
  j["hom_dim"] = s.hom_dim;
  j["der_dim"] = s.der_dim;
  j["t1_dim"] = s.t1_dim;
  j["pieces"] = s.pieces;
  j["derivations_in_hom"] = s.derivations_in_hom;
  if (!s.basis.empty()) {
    j["basis_verified"] = s.basis_verified;
    Json basis = Json::array();
    for (const auto& a : s.basis) basis.push_back(strings(a));
    j["basis"] = basis;
  }
  return j;
}

/// The known degree (-2,1) class for n = 5: a homomorphism outside the
/// derivation image, and every basis vector is proportional to it.
Json five_class_json(const cotangent::T1Slice& s, bool& ok) {
  const auto known = cotangent::five_pfaffian_class();
  const auto check = cotangent::classify_assignment(5, {-2, 1}, known);
  bool proportional = s.basis.size() == 1;
  if (proportional) {
    const auto& b = s.basis.front();
    std::optional<algebra::Rational> scale;
    for (std::size_t a = 0; a < b.size() && proportional; ++a) {
      if (known[a].is_zero() != b[a].is_zero()) {
        proportional = false;
      } else if (!known[a].is_zero()) {
        if (!scale) scale = b[a].terms().front().coeff / known[a].terms().front().coeff;
        proportional = b[a] == known[a] * *scale;
      }
    }
  }
  ok = check.in_hom && !check.in_derivation_image && proportional;
  Json j;
  j["images"] = strings(known);
  j["in_hom"] = check.in_hom;
  j["in_derivation_image"] = check.in_derivation_image;
  j["basis_proportional"] = proportional;
  return j;
}

void slice_row(std::ostream& s, const cotangent::T1Slice& t) {
  s << "  (" << t.delta.first << ',' << t.delta.second << ")\thom " << t.hom_dim << "\tder " << t.der_dim
    << "\tT1 " << t.t1_dim << '\n';
}

// lemma

Json sample_json(const cotangent::LemmaSample& s) {
  return {{"alpha", s.alpha},
          {"beta", s.beta},
          {"z_c", s.z_c.to_string()},
          {"z_d", s.z_d.to_string()},
          {"normal_form", s.normal_form.to_string()},
          {"holds", s.holds}};
}

// hull

Json points_json(const std::vector<std::size_t>& indices) {
  Json a = Json::array();
  for (auto i : indices) a.push_back(i + 1);
  return a;
}

Json triangulation_json(const std::vector<hull::Facet>& lower, const hull::Triangulation& t) {
  Json facets = Json::array();
  for (const auto& f : lower) facets.push_back(points_json(f.points));
  return {{"lower_facets", facets},
          {"determinants", t.determinants},
          {"unimodular", t.unimodular},
          {"proper_intersections", t.proper_intersections},
          {"covered_points", t.covered_points}};
}

Json witness_json(const std::map<VertexLabel, VertexLabel>& w) {
  Json a = Json::array();
  for (const auto& [from, to] : w) a.push_back({{"column", from.a}, {"vertex", to.to_string()}});
  return a;
}

Json reflexivity_json(const hull::Reflexivity& r) {
  return {{"reflexive", r.reflexive}, {"facet_count", r.facet_count}, {"distances", r.distances}};
}

class Commands {
 public:
  explicit Commands(const Options& options) : opt_(options) {}

  void complex_build(Outcome& o, const std::string& kind, int n, const std::string& left, const std::string& right,
                     const std::string& input, const std::string& face, const std::string& vertex) {
    SimplicialComplex k;
    if (kind == "assoc") {
      k = complexes::associahedron(n);
    } else if (kind == "kn") {
      k = complexes::kn_complex(n);
    } else if (kind == "join") {
      if (left.empty() || right.empty()) throw Error("join needs --left and --right");
      k = complexes::join(complex_from_spec(left), complex_from_spec(right));
    } else {
      if (input.empty() || face.empty()) throw Error("stellar needs --input and --face");
      std::vector<VertexLabel> labels;
      std::istringstream in(face);
      std::string token;
      while (in >> token) labels.push_back(VertexLabel::parse(token));
      k = complexes::stellar_subdivision(complex_from_spec(input), labels, VertexLabel::parse(vertex));
    }
    o.report["command"] = "complex build " + kind;
    merge(o.report, complex_json(k));
    complex_text(o.text, k);
  }

  void ideal_emit(Outcome& o, const std::string& kind, int n) {
    const auto ideal = kind == "jn" ? grassmann::bundle_ideal(n) : grassmann::grassmannian_ideal(n);
    o.report["command"] = "ideal emit " + kind;
    o.report["n"] = n;
    Json gens = Json::array();
    for (std::size_t g = 0; g < ideal.generators.size(); ++g) {
      gens.push_back({{"name", ideal.names[g]}, {"polynomial", ideal.generators[g].to_string()}});
    }
    o.report["generators"] = gens;
    o.text << algebra::format_ideal(ideal.generators, (kind == "jn" ? "J_" : "I_2,") + std::to_string(n));
  }

  void ideal_vanish(Outcome& o, int n, int trials) {
    const auto r = grassmann::check_vanishing(n, trials, opt_.seed);
    o.passed = r.failures == 0;
    o.report["command"] = "ideal vanish";
    o.report["n"] = n;
    o.report["trials"] = r.trials;
    o.report["seed"] = r.seed;
    o.report["evaluations"] = r.evaluations;
    o.report["failures"] = r.failures;
    if (r.first_failure) o.report["first_failure"] = *r.first_failure;
    o.text << "J_" << n << " at " << r.trials << " random bundle points (seed " << r.seed << "): " << r.evaluations
           << " evaluations, " << r.failures << " nonzero  " << mark(o.passed) << '\n';
  }

  void groebner_verify(Outcome& o, int n, const std::string& order, bool crosscheck) {
    const auto start = Clock::now();
    const bool bundle = order == "paper";
    const auto r = bundle ? grassmann::verify_bundle_initial_ideal(n, crosscheck)
                         : grassmann::verify_grassmannian_initial_ideal(n, crosscheck);
    o.report["command"] = "groebner verify";
    merge(o.report, initial_ideal_json(r));
    o.report["order"] = order;
    o.passed = r.passed();

    std::size_t replay_failures = 0, certificate_mismatches = 0;
    std::vector<grassmann::CaseReplay> cases;
    if (bundle) {
      cases = grassmann::replay_s_pair_cases(n);
      for (const auto& c : cases) {
        if (!c.reduces_to_zero) ++replay_failures;
        if (c.certificate_sign == 0 || c.short_form_sign == 0) ++certificate_mismatches;
      }
      o.report["case_replay"] = {{"pairs", cases.size()},
                                 {"failures", replay_failures},
                                 {"certificate_warnings", certificate_mismatches}};
      o.passed = o.passed && replay_failures == 0;
    }
    if (!opt_.json) o.report["timings_ms"] = {{"total", elapsed_ms(start)}};

    auto& s = o.text;
    s << (bundle ? "J_" : "I_2,") << n << " under the " << order << " order\n";
    for (const auto& layer : r.order_layers) s << "  layer: " << layer << '\n';
    s << "generators " << r.generator_count << ", S-pairs checked " << r.pairs_checked << ", skipped (coprime) "
      << r.pairs_skipped << ", reduction steps " << r.reduction_steps << '\n';
    s << "Groebner basis: " << (r.gb_holds ? "yes" : "no") << '\n';
    if (r.failure) {
      s << "  pair (" << r.failure->first << ", " << r.failure->second << ") leaves " << r.failure->remainder.to_string()
        << '\n';
    }
    s << "initial ideal = Stanley-Reisner ideal: " << (r.match ? "yes" : "no") << " (" << r.initial_generators.size()
      << " vs " << r.sr_generators.size() << " generators)\n";
    if (r.completion_adds_nothing) {
      s << "completion adds no leading monomial: " << (*r.completion_adds_nothing ? "yes" : "no") << '\n';
    }
    if (bundle) {
      s << "case replay: " << cases.size() << " S-pairs, " << replay_failures << " not reducing to zero, "
        << certificate_mismatches << " certificate warnings\n";
    }
    s << "time " << elapsed_ms(start) << " ms\n";
  }

  void groebner_circular(Outcome& o, int n) {
    const auto r = grassmann::check_circular_leading_terms(n);
    o.passed = r.failures == 0;
    o.report["command"] = "groebner circular";
    o.report["n"] = n;
    o.report["quadruples"] = r.quadruples;
    o.report["failures"] = r.failures;
    if (r.first_failure) o.report["first_failure"] = *r.first_failure;
    o.text << "n = " << n << ": " << r.quadruples << " Pfaffians, leading term x[i,k]x[j,l] in all but " << r.failures
           << "  " << mark(o.passed) << '\n';
  }

  void degree(Outcome& o, int n) {
    const auto r = grassmann::degree_check(n);
    o.passed = r.consistent();
    o.report["command"] = "degree";
    o.report["n"] = n;
    o.report["formula_value"] = r.formula.get_str();
    o.report["facet_count"] = r.facet_count;
    o.report["standard_monomial_degree"] = r.hilbert_degree.get_str();
    o.report["krull_dimension"] = r.krull_dimension;
    o.report["consistent"] = o.passed;
    o.text << "degree of J_" << n << ": formula " << r.formula.get_str() << " = facets " << r.facet_count
           << " = Hilbert polynomial " << r.hilbert_degree.get_str() << "  " << mark(o.passed) << '\n';
  }

  void syzygy_verify(Outcome& o, int n, int bound) {
    const auto r = syzygies::verify_generation(n, bound);
    o.passed = r.passed();
    o.report["command"] = "syzygy verify";
    o.report["n"] = n;
    o.report["order"] = r.order;
    o.report["generator_count"] = r.generator_count;
    o.report["trace_syzygies"] = r.trace_syzygies;
    Json families = Json::array();
    for (const auto& f : r.families) {
      Json j = {{"family", f.family},
                {"count", f.count},
                {"all_vanish", f.all_vanish},
                {"all_bidegree_three", f.all_bidegree_three},
                {"all_members", f.all_members}};
      if (f.first_nonmember) j["first_nonmember"] = *f.first_nonmember;
      families.push_back(j);
    }
    o.report["families"] = families;
    o.report["koszul"] = {{"vanishes", r.koszul_vanishes}, {"member", r.koszul_member}};
    o.report["degree_bound"] = r.degree_bound;
    Json dims = Json::array();
    for (const auto& d : r.dimensions) {
      dims.push_back({{"bidegree", {d.dx, d.dy}}, {"full", d.full}, {"trace", d.trace}, {"families", d.families}});
    }
    o.report["dimensions"] = dims;
    o.report["traces_complete"] = r.traces_complete();
    o.report["families_generate"] = r.families_generate();

    auto& s = o.text;
    s << "syzygies of J_" << n << " (" << r.generator_count << " generators, " << r.trace_syzygies
      << " trace syzygies, order " << r.order << ")\n";
    for (const auto& f : r.families) {
      s << "  " << f.family << ": " << f.count << " vectors, expand to zero " << mark(f.all_vanish)
        << ", bidegree 3 " << mark(f.all_bidegree_three) << ", in trace module " << mark(f.all_members) << '\n';
    }
    s << "  koszul vector in trace module " << mark(r.koszul_vanishes && r.koszul_member) << '\n';
    s << "  bidegree\tfull\ttrace\tfamilies\n";
    for (const auto& d : r.dimensions) {
      s << "  (" << d.dx << ',' << d.dy << ")\t\t" << d.full << '\t' << d.trace << '\t' << d.families << '\n';
    }
    s << "families generate up to total degree " << r.degree_bound << ": " << mark(o.passed) << '\n';
  }

  void syzygy_export(Outcome& o, int n, const std::string& family) {
    std::vector<algebra::SyzygyVector> out;
    if (family == "rijk" || family == "all") {
      const auto f = syzygies::rijk_family(n);
      out.insert(out.end(), f.begin(), f.end());
    }
    if (family == "euler" || family == "all") out.push_back(syzygies::euler_syzygy(n));
    if (family == "r5" || family == "all") {
      const auto f = syzygies::r5_family(n, true);
      out.insert(out.end(), f.begin(), f.end());
    }
    const auto gens = grassmann::bundle_ideal(n).generators;
    std::size_t nonzero = 0;
    for (const auto& s : out) {
      if (!algebra::evaluate_syzygy(s, gens).is_zero()) ++nonzero;
    }
    o.passed = nonzero == 0;
    o.report["command"] = "syzygy export";
    o.report["n"] = n;
    o.report["family"] = family;
    o.report["count"] = out.size();
    o.report["nonzero"] = nonzero;
    o.report["syzygies"] = Json::parse(syzygies::export_json(out));
    o.text << syzygies::export_json(out) << '\n';
  }

  void t1_slice(Outcome& o, int n, const std::string& delta_text, bool basis) {
    const auto delta = parse_pair(delta_text);
    const auto start = Clock::now();
    const bool known = n == 5 && delta == std::pair{-2, 1};
    const auto s = cotangent::t1_slice(n, delta, basis || known);
    o.passed = s.consistent();
    o.report["command"] = "t1 slice";
    o.report["n"] = n;
    merge(o.report, slice_json(s));
    if (known) {
      bool ok = false;
      o.report["known_class"] = five_class_json(s, ok);
      o.passed = o.passed && ok && s.t1_dim == 1;
    }
    if (!opt_.json) o.report["timings_ms"] = {{"total", elapsed_ms(start)}};
    auto& t = o.text;
    t << "T1 of J_" << n << " in degree (" << delta.first << ',' << delta.second << ")\n";
    slice_row(t, s);
    if (basis || known) {
      for (std::size_t b = 0; b < s.basis.size(); ++b) {
        t << "  class " << b + 1 << ":";
        for (std::size_t a = 0; a < s.basis[b].size(); ++a) {
          if (!s.basis[b][a].is_zero()) t << ' ' << a + 1 << " -> " << s.basis[b][a].to_string() << ';';
        }
        t << '\n';
      }
    }
    if (known) {
      t << "  (y1, -y2, y3, -y4, y5) pattern: " << mark(o.report["known_class"]["basis_proportional"].get<bool>())
        << ", nontrivial " << mark(!o.report["known_class"]["in_derivation_image"].get<bool>()) << '\n';
    }
    t << "consistency " << mark(s.consistent()) << ", time " << elapsed_ms(start) << " ms\n";
  }

  void t1_window(Outcome& o, int n, const std::string& max_text, bool basis) {
    const auto max = parse_pair(max_text);
    const auto start = Clock::now();
    const auto slices = cotangent::t1_window(n, max, basis);
    std::size_t total = 0;
    Json rows = Json::array();
    for (const auto& s : slices) {
      total += s.t1_dim;
      rows.push_back(slice_json(s));
      o.passed = o.passed && s.consistent();
    }
    o.report["command"] = "t1 window";
    o.report["n"] = n;
    o.report["max"] = {max.first, max.second};
    o.report["scope"] = "partial: only the listed degrees are computed";
    o.report["total_t1_dim"] = total;
    o.report["slices"] = rows;
    if (!opt_.json) o.report["timings_ms"] = {{"total", elapsed_ms(start)}};
    auto& t = o.text;
    t << "T1 of J_" << n << " for every degree with targets up to (" << max.first << ',' << max.second << ")\n";
    t << "  degree\thom\tder\tT1\n";
    for (const auto& s : slices) slice_row(t, s);
    t << "total T1 dimension in the window: " << total << " (partial: degrees outside the window are not computed)\n";
    t << "time " << elapsed_ms(start) << " ms\n";
  }

  void lemma(Outcome& o, int n, int trials) {
    const auto r = cotangent::check_normal_form_lemma(n, trials, opt_.seed);
    o.passed = r.passed();
    o.report["command"] = "lemma normalform";
    o.report["n"] = n;
    o.report["trials"] = r.trials;
    o.report["seed"] = r.seed;
    o.report["failures"] = r.failures;
    o.report["nontrivial"] = r.nontrivial;
    o.report["targeted"] = {{"trials", r.trials}, {"failures", r.targeted_failures}, {"nontrivial", r.targeted_nontrivial}};
    if (r.first_failure) o.report["first_failure"] = sample_json(*r.first_failure);
    o.text << "normal-form lemma, n = " << n << ": " << r.trials << " trials (seed " << r.seed << "), "
           << r.nontrivial << " nontrivial reductions, " << r.failures << " failures  " << mark(r.failures == 0)
           << '\n'
           << "targeted samples with a crossing pair in z_c: " << r.trials << ", " << r.targeted_nontrivial
           << " nontrivial, " << r.targeted_failures << " failures  " << mark(r.targeted_failures == 0) << '\n';
    if (n == 6) {
      auto mono = [n](const char* text) { return algebra::parse_polynomial(text, n).terms().front().monomial; };
      const auto s = cotangent::check_lemma_instance(n, 2, 5, mono("x[2,4]*x[3,5]"), mono("x[1,6]"));
      const auto expected = algebra::parse_polynomial("x[1,6]*x[2,3]*x[4,5] + x[1,6]*x[2,5]*x[3,4]", n);
      const bool match = s.holds && s.normal_form == expected;
      Json j = sample_json(s);
      j["expected"] = expected.to_string();
      j["matches"] = match;
      o.report["worked_example"] = j;
      o.passed = o.passed && match;
      o.text << "worked example: NF(" << s.z_c.to_string() << " * " << s.z_d.to_string()
             << ") = " << s.normal_form.to_string() << "  " << mark(match) << '\n';
    }
  }

  void hull_example(Outcome& o) {
    const auto points = hull::k6_lift_points();
    const auto r = hull::analyze_k6_lift();
    o.passed = r.passed();
    o.report["command"] = "hull example-6-7";
    o.report["point_count"] = r.point_count;
    o.report["lower_facet_count"] = r.lower_facet_count;
    o.report["triangulation"] = triangulation_json(hull::lower_facets(points, 4), r.triangulation);
    o.report["isomorphic_to_k6_join_point"] = r.witness.has_value();
    if (r.witness) o.report["witness"] = witness_json(*r.witness);
    o.report["origin_to_cone"] = r.origin_to_cone;
    o.report["projection"] = reflexivity_json(r.reflexivity);
    auto& t = o.text;
    t << "13 lattice points in R^5, height = last coordinate\n";
    t << "lower facets: " << r.lower_facet_count << ", unimodular " << mark(r.triangulation.unimodular)
      << ", proper intersections " << mark(r.triangulation.proper_intersections) << ", points used "
      << r.triangulation.covered_points << '\n';
    t << "isomorphic to K_6 * Delta_0: " << (r.witness ? "yes" : "no") << '\n';
    if (r.witness) {
      for (const auto& [from, to] : *r.witness) t << "  column " << from.a << " -> " << to.to_string() << '\n';
    }
    t << "origin column -> cone vertex " << mark(r.origin_to_cone) << '\n';
    t << "projection reflexive: " << (r.reflexivity.reflexive ? "yes" : "no") << " (" << r.reflexivity.facet_count
      << " facets)\n";
  }

  void hull_analyze(Outcome& o, const std::string& matrix, const std::string& json_input, int height, int kn) {
    std::vector<hull::Point> points;
    if (!matrix.empty()) {
      points = hull::parse_matrix(read_file(matrix));
    } else if (!json_input.empty()) {
      points = hull::parse_points_json(read_file(json_input));
    } else {
      throw Error("hull analyze needs --matrix or --points-json");
    }
    if (points.empty()) throw Error("no points");
    const std::size_t h = height < 0 ? points.front().size() - 1 : static_cast<std::size_t>(height);
    const auto lower = hull::lower_facets(points, h);
    const auto t = hull::triangulation_complex(points, lower, h);
    o.passed = t.unimodular && t.proper_intersections;
    o.report["command"] = "hull analyze";
    o.report["point_count"] = points.size();
    o.report["height"] = h;
    o.report["lower_facet_count"] = lower.size();
    o.report["triangulation"] = triangulation_json(lower, t);
    o.text << points.size() << " points, " << lower.size() << " lower facets, unimodular " << mark(t.unimodular)
           << ", proper intersections " << mark(t.proper_intersections) << '\n';
    if (kn > 0) {
      const auto target = complexes::join(complexes::kn_complex(kn), complexes::simplex({VertexLabel::free(1)}));
      const auto w = hull::complexes_isomorphic(t.complex, target);
      o.report["isomorphic_to_kn_join_point"] = w.has_value();
      if (w) o.report["witness"] = witness_json(*w);
      o.passed = o.passed && w.has_value();
      o.text << "isomorphic to K_" << kn << " * Delta_0: " << (w ? "yes" : "no") << '\n';
    }
    const auto projected = hull::project(points, h);
    try {
      const auto r = hull::reflexivity_check(hull::LatticePolytope::from_points(projected));
      o.report["projection"] = reflexivity_json(r);
      o.text << "projection reflexive: " << (r.reflexive ? "yes" : "no") << '\n';
    } catch (const Error& e) {
      o.report["projection"] = {{"reflexive", nullptr}, {"reason", e.what()}};
      o.text << "projection: " << e.what() << '\n';
    }
  }

 private:
  const Options& opt_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the dual quotient bundle ideal on G(2,n)", "qstar"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_option("--seed", opt.seed, "Seed for randomized checks");
  app.add_option("--threads", opt.threads, "Worker threads (default: all cores)")->check(CLI::Range(1u, 1024u));
  app.add_option("--out", opt.out, "Write the report to FILE");

  std::function<void(Commands&, Outcome&)> action;
  auto set = [&](auto fn) { return [&action, fn] { action = fn; }; };

  int n = 0;
  auto add_n = [&n](CLI::App* sub) {
    sub->add_option("--n", n, "Number of points n")->required()->check(CLI::Range(1, 10));
  };

  // complex build
  auto* complex_cmd = app.add_subcommand("complex", "Simplicial complexes");
  complex_cmd->require_subcommand(1);
  auto* build = complex_cmd->add_subcommand("build", "Build a complex");
  std::string kind, left, right, input, face, vertex = "v";
  build->add_option("kind", kind, "assoc, kn, join or stellar")
      ->required()
      ->check(CLI::IsMember({"assoc", "kn", "join", "stellar"}));
  build->add_option("--n", n, "Polygon size for assoc and kn")->check(CLI::Range(1, 10));
  build->add_option("--left", left, "join: complex file or assoc:N, kn:N, s0, simplex:K, boundary:K");
  build->add_option("--right", right, "join: second complex");
  build->add_option("--input", input, "stellar: complex to subdivide");
  build->add_option("--face", face, "stellar: face labels, space separated");
  build->add_option("--vertex", vertex, "stellar: new vertex label");
  build->callback(set([&](Commands& c, Outcome& o) {
    if ((kind == "assoc" || kind == "kn") && n == 0) throw Error(kind + " needs --n");
    c.complex_build(o, kind, n, left, right, input, face, vertex);
  }));

  // ideal
  auto* ideal_cmd = app.add_subcommand("ideal", "Generators of I_2,n and J_n");
  ideal_cmd->require_subcommand(1);
  auto* emit = ideal_cmd->add_subcommand("emit", "Print the generators");
  emit->add_option("kind", kind, "i2n or jn")->required()->check(CLI::IsMember({"i2n", "jn"}));
  add_n(emit);
  emit->callback(set([&](Commands& c, Outcome& o) { c.ideal_emit(o, kind, n); }));
  int trials = 100;
  auto* vanish = ideal_cmd->add_subcommand("vanish", "Evaluate J_n at random points of the bundle");
  add_n(vanish);
  vanish->add_option("--trials", trials, "Random points")->check(CLI::PositiveNumber);
  vanish->callback(set([&](Commands& c, Outcome& o) { c.ideal_vanish(o, n, trials); }));

  // groebner
  auto* gb = app.add_subcommand("groebner", "Groebner basis checks");
  gb->require_subcommand(1);
  auto* verify = gb->add_subcommand("verify", "Initial ideal against the Stanley-Reisner ideal");
  add_n(verify);
  std::string order = "paper";
  bool crosscheck = false;
  verify->add_option("--order", order, "paper (J_n) or circular (I_2,n)")
      ->check(CLI::IsMember({"paper", "circular"}));
  verify->add_flag("--complete-crosscheck", crosscheck, "Also run Buchberger completion");
  verify->callback(set([&](Commands& c, Outcome& o) { c.groebner_verify(o, n, order, crosscheck); }));
  auto* circular = gb->add_subcommand("circular", "Leading terms of every Pfaffian under the circular order");
  add_n(circular);
  circular->callback(set([&](Commands& c, Outcome& o) { c.groebner_circular(o, n); }));

  // degree
  auto* degree = app.add_subcommand("degree", "Degree of J_n three ways");
  add_n(degree);
  degree->callback(set([&](Commands& c, Outcome& o) { c.degree(o, n); }));

  // syzygy
  auto* syz = app.add_subcommand("syzygy", "Syzygies of J_n");
  syz->require_subcommand(1);
  int bound = 4;
  auto* syz_verify = syz->add_subcommand("verify", "Families against the full syzygy module");
  add_n(syz_verify);
  syz_verify->add_option("--bound", bound, "Largest total degree compared")->check(CLI::Range(3, 6));
  syz_verify->callback(set([&](Commands& c, Outcome& o) { c.syzygy_verify(o, n, bound); }));
  std::string family = "all";
  auto* syz_export = syz->add_subcommand("export", "Write the explicit syzygies as JSON");
  add_n(syz_export);
  syz_export->add_option("--family", family, "rijk, euler, r5 or all")
      ->check(CLI::IsMember({"rijk", "euler", "r5", "all"}));
  syz_export->callback(set([&](Commands& c, Outcome& o) { c.syzygy_export(o, n, family); }));

  // t1
  auto* t1 = app.add_subcommand("t1", "Graded pieces of T^1");
  t1->require_subcommand(1);
  std::string delta, max = "3,3";
  bool basis = false;
  auto* slice = t1->add_subcommand("slice", "One degree");
  add_n(slice);
  slice->add_option("--delta", delta, "Degree shift DX,DY")->required()->allow_extra_args(false);
  slice->add_flag("--basis", basis, "Print a basis of the slice");
  slice->callback(set([&](Commands& c, Outcome& o) { c.t1_slice(o, n, delta, basis); }));
  auto* window = t1->add_subcommand("window", "Every degree with targets up to a bound");
  add_n(window);
  window->add_option("--max", max, "Largest target bidegree DX,DY");
  window->add_flag("--basis", basis, "Compute bases");
  window->callback(set([&](Commands& c, Outcome& o) { c.t1_window(o, n, max, basis); }));

  // lemma
  auto* lemma = app.add_subcommand("lemma", "Normal-form lemma");
  lemma->require_subcommand(1);
  auto* nf = lemma->add_subcommand("normalform", "Random trials");
  add_n(nf);
  int lemma_trials = 200;
  nf->add_option("--trials", lemma_trials, "Number of samples")->check(CLI::PositiveNumber);
  nf->callback(set([&](Commands& c, Outcome& o) { c.lemma(o, n, lemma_trials); }));

  // hull
  auto* hull_cmd = app.add_subcommand("hull", "Lower hulls and lattice polytopes");
  hull_cmd->require_subcommand(1);
  auto* example = hull_cmd->add_subcommand("example-6-7", "The built-in 13-point lift of K_6 * Delta_0");
  example->alias("k6-lift");
  example->callback(set([&](Commands& c, Outcome& o) { c.hull_example(o); }));
  auto* analyze = hull_cmd->add_subcommand("analyze", "Lower facets of a given point set");
  std::string matrix, points_json;
  int height = -1, kn = 0;
  analyze->add_option("--matrix", matrix, "Text matrix, columns are points");
  analyze->add_option("--points-json", points_json, "JSON {\"points\": ...} or {\"matrix\": ...}");
  analyze->add_option("--height", height, "Height coordinate (default: last)");
  analyze->add_option("--kn", kn, "Compare with K_N * Delta_0")->check(CLI::Range(5, 7));
  analyze->callback(set([&](Commands& c, Outcome& o) { c.hull_analyze(o, matrix, points_json, height, kn); }));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPassed : kError;
  }

  const unsigned saved = default_threads();
  if (opt.threads > 0) set_default_threads(opt.threads);
  Outcome outcome;
  outcome.report["schema"] = 1;
  try {
    Commands commands(opt);
    action(commands, outcome);
  } catch (const std::exception& e) {
    set_default_threads(saved);
    err << "error: " << e.what() << '\n';
    return kError;
  }
  set_default_threads(saved);
  outcome.report["passed"] = outcome.passed;

  const std::string text = opt.json ? outcome.report.dump(2) + "\n" : outcome.text.str();
  if (opt.out.empty()) {
    out << text;
  } else {
    std::ofstream file(opt.out);
    if (!file) {
      err << "error: cannot write " << opt.out << '\n';
      return kError;
    }
    file << text;
  }
  return outcome.passed ? kPassed : kFailed;
}

}  // namespace qstar::cli
