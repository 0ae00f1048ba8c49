#pragma once

#include "knotgraph/bounds.hpp"
#include "knotgraph/brieskorn.hpp"
#include "knotgraph/knots.hpp"
#include "knotgraph/metricgraph.hpp"
#include "knotgraph/parse.hpp"
#include "knotgraph/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace knotgraph::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { ok = 0, verification_failed = 1, usage_error = 2 };

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Json provenance = Json::array();
  bool passed = true;

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["provenance"] = provenance;
    j["verdict"] = passed ? "pass" : "fail";
    return j;
  }
};

inline std::string rational(const Rational& q) { return to_string(q); }

// Integers go out as JSON numbers when they fit, else as decimal strings.
inline Json integer(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Json interval(const InvariantInterval& iv) {
  return Json{{"lower", integer(iv.lower)}, {"upper", integer(iv.upper)}, {"exact", iv.exact()}};
}

inline Json certificates(const std::vector<BoundCertificate>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(c.to_string());
  return out;
}

inline Json distance_bound(const DistanceBound& b) {
  return Json{{"lower", rational(b.lower_rational())},
              {"lower_integer", integer(b.lower_integer())},
              {"upper", b.upper() ? integer(*b.upper()) : Json(nullptr)},
              {"exact", b.exact()},
              {"provenance", certificates(b.provenance())}};
}

inline Json knot_list(const std::vector<FormalKnot>& ks) {
  Json out = Json::array();
  for (const auto& k : ks) out.push_back(k.to_string());
  return out;
}

// Plain-text rendering: one "key: value" line per scalar, nested keys indented.
inline void render_text(std::ostream& out, const Json& j, int indent = 0) {
  std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : "-";
    if (it->is_structured() && !it->empty() &&
        !(it->is_array() && std::all_of(it->begin(), it->end(), [](const Json& x) { return x.is_primitive(); }))) {
      out << pad << key << ":\n";
      render_text(out, *it, indent + 2);
    } else if (it->is_array()) {
      out << pad << key << ": [";
      for (std::size_t i = 0; i < it->size(); ++i) out << (i ? ", " : "") << ((*it)[i].is_string() ? (*it)[i].get<std::string>() : (*it)[i].dump());
      out << "]\n";
    } else {
      out << pad << key << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
    }
  }
}

inline std::string subset_name(unsigned mask) { return IndexSubset::from_mask(mask).to_string(); }

inline Json group_json(const FiniteAbelianGroup& g) {
  Json factors = Json::array();
  for (const auto& f : g.invariant_factors()) factors.push_back(integer(f));
  return Json{{"group", g.to_string()},
              {"free_rank", g.free_rank()},
              {"invariant_factors", factors},
              {"min_generators", min_generators(g)}};
}

inline Report brieskorn_report(const std::vector<std::string>& weights) {
  Report r{"brieskorn"};
  if (weights.size() != 3) throw std::invalid_argument("brieskorn expects three weights");
  std::vector<Integer> w;
  for (const auto& s : weights) {
    Rational q = parse_rational(s);
    if (!is_integral(q)) throw std::invalid_argument("weight '" + s + "' is not an integer");
    w.push_back(numerator_of(q));
  }
  BrieskornWeights bw(w[0], w[1], w[2]);
  r.inputs["weights"] = Json::array({integer(w[0]), integer(w[1]), integer(w[2])});
  OrlikData d = orlik_data(bw);
  Json kappa = Json::object(), kappa_prime = Json::object(), c = Json::object();
  for (unsigned m = 0; m < 8; ++m) {
    kappa[subset_name(m)] = integer(d.kappa[m]);
    kappa_prime[subset_name(m)] = integer(d.kappa_prime[m]);
    if (m != 7) c[subset_name(m)] = integer(c_value(bw, IndexSubset::from_mask(m)));
  }
  Json runs = Json::array();
  for (const auto& [dj, count] : d.d_runs) runs.push_back({{"d", integer(dj)}, {"count", integer(count)}});
  r.results = group_json(homology(bw));
  r.results["kappa"] = kappa;
  r.results["kappa_prime"] = kappa_prime;
  r.results["c"] = c;
  r.results["rank"] = integer(d.rank);
  r.results["r"] = integer(d.r);
  r.results["d_runs"] = runs;
  r.results["r_exceeds_even_support"] = d.r_exceeds_even_support;
  r.provenance.push_back("Orlik rank/torsion formula with exact integer arithmetic");
  if (d.r_exceeds_even_support)
    r.provenance.push_back("r exceeds every kappa'(I); the trailing d_j are empty products equal to 1");
  return r;
}

inline Report invariants_report(const std::string& expr, const KnotAtlas& atlas) {
  Report r{"invariants"};
  FormalKnot k = parse_knot(expr, atlas);
  r.inputs["knot"] = expr;
  r.results["normalized"] = k.to_string();
  r.results["tau"] = integer(tau(k, atlas));
  r.results["s_half"] = integer(s_half(k, atlas));
  r.results["g4"] = interval(g4_interval(k, atlas));
  r.results["u"] = interval(u_interval(k, atlas));
  r.results["gamma4"] = interval(gamma4_interval(k, atlas));
  Json covers = Json::object();
  for (std::uint64_t m : default_cover_degrees()) {
    try {
      covers[std::to_string(m)] = group_json(branched_cover_homology(k, m, atlas));
    } catch (const UnsupportedCoverError&) {
      covers[std::to_string(m)] = nullptr;
    }
  }
  r.results["covers"] = covers;
  r.provenance.push_back("tau and s/2 additive; g4, u, gamma4 as certified intervals");
  r.provenance.push_back("torus summands: Sigma_m(T(p,q)) = Sigma(p,q,m)");
  return r;
}

inline Report cover_report(const std::string& expr, std::uint64_t degree, const KnotAtlas& atlas) {
  Report r{"cover"};
  FormalKnot k = parse_knot(expr, atlas);
  r.inputs["knot"] = expr;
  r.inputs["degree"] = degree;
  FiniteAbelianGroup g = branched_cover_homology(k, degree, atlas);
  r.results = group_json(g);
  r.results["normalized"] = k.to_string();
  Json mod_p = Json::object();
  for (const auto& f : g.torsion()) mod_p[f.prime.str()] = mod_p_dimension(g, f.prime);
  r.results["mod_p_dimensions"] = mod_p;
  r.provenance.push_back("direct sum over summands of the branched-cover homology");
  return r;
}

inline MoveKind parse_graph_kind(const std::string& s) {
  if (s == "h2") return MoveKind::hn(2);
  if (s == "cc") return MoveKind::crossing_change();
  if (s.starts_with("hn:")) {
    Rational q = parse_rational(s.substr(3));
    if (!is_integral(q) || q < 2 || q > 1000) throw std::invalid_argument("hn:<n> needs an integer 2 <= n <= 1000");
    return MoveKind::hn(static_cast<unsigned>(numerator_of(q)));
  }
  throw std::invalid_argument("unknown graph '" + s + "' (expected h2, hn:<n> or cc)");
}

inline std::vector<std::uint64_t> parse_degrees(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    Rational q = parse_rational(item);
    if (!is_integral(q) || q < 2) throw std::invalid_argument("cover degrees must be integers >= 2");
    out.push_back(to_u64(numerator_of(q), "cover degree"));
  }
  if (out.empty()) throw std::invalid_argument("empty cover degree list");
  return out;
}

inline Report dist_report(const std::string& graph, const std::string& a, const std::string& b,
                          const std::string& covers, const KnotAtlas& atlas) {
  Report r{"dist"};
  MoveKind kind = parse_graph_kind(graph);
  auto degrees = parse_degrees(covers);
  FormalKnot ka = parse_knot(a, atlas), kb = parse_knot(b, atlas);
  r.inputs["graph"] = graph;
  r.inputs["from"] = a;
  r.inputs["to"] = b;
  r.inputs["covers"] = degrees;
  BoundTable table = distance_table(ka, kb, kind, degrees, atlas);
  Json t = Json::object();
  for (const auto& [n, bound] : table) t[kind.is_band() ? "d_" + std::to_string(n) : "d"] = distance_bound(bound);
  r.results["bounds"] = t;
  if (auto path = catalog_path(ka, kb, kind, atlas)) {
    Json steps = Json::array();
    for (const auto& s : certify_path(*path, kind, atlas)) steps.push_back(s.to_string());
    r.results["path"] = knot_list(*path);
    r.results["path_moves"] = steps;
  } else {
    r.results["path"] = nullptr;
  }
  r.provenance.push_back(kind.is_band() ? "lower: cover-homology bounds, propagated across n"
                                        : "lower: tau and s/2 differences");
  r.provenance.push_back("upper: catalog path with common summands cancelled");
  return r;
}

inline Json edge_json(const EdgeCertificate& e) {
  return Json{{"length", e.length},
              {"lower", rational(e.lower)},
              {"catalog_certified", e.catalog_certified},
              {"geodesic", e.geodesic},
              {"status", e.status},
              {"provenance", certificates(e.provenance)}};
}

inline Report certify_report(const std::string& family, std::int64_t k, unsigned n, const std::string& k11,
                             const KnotAtlas& atlas) {
  Report r{"certify"};
  if (k < 1) throw std::invalid_argument("--k must be >= 1");
  WitnessFamily f;
  if (family == "h2")
    f = WitnessFamily::h2;
  else if (family == "hn")
    f = WitnessFamily::hn;
  else if (family == "cc")
    f = WitnessFamily::concordance;
  else
    throw std::invalid_argument("unknown family '" + family + "' (expected h2, hn or cc)");
  TrefoilVariant v;
  if (k11 == "trefoil")
    v = TrefoilVariant::trefoil;
  else if (k11 == "mirror-trefoil")
    v = TrefoilVariant::mirror_trefoil;
  else
    throw std::invalid_argument("--k11 must be trefoil or mirror-trefoil");
  if (f == WitnessFamily::hn && n < 3) throw std::invalid_argument("--n must be >= 3 for the hn family");
  r.inputs["family"] = family;
  r.inputs["k"] = k;
  if (f == WitnessFamily::hn) r.inputs["n"] = n;
  if (f == WitnessFamily::concordance) r.inputs["k11"] = k11;

  TriangleWitness w = build_witness(f, static_cast<std::uint64_t>(k), n, v);
  TriangleCertificate c = certify(w, atlas);
  Json sides = Json::array();
  for (const auto& s : w.sides) sides.push_back(knot_list(s));
  r.results["sides"] = sides;
  r.results["midpoint"] = w.midpoint().to_string();
  r.results["edges"] = Json::array({edge_json(c.edges[0]), edge_json(c.edges[1]), edge_json(c.edges[2])});
  r.results["all_geodesic"] = c.all_geodesic;
  r.results["separation_lower"] = rational(c.separation);
  r.results["separation_integer"] = integer(ceil(c.separation));
  r.results["separation_witness"] = {{"side", c.closest.side + 1},
                                     {"knot", w.sides[c.closest.side][c.closest.index].to_string()},
                                     {"rule", c.closest.rule.to_string()}};
  r.results["lifts_to_knot_graph"] = c.lifts_to_knot_graph;
  r.results["statement"] = c.verdict;
  for (const auto& p : c.provenance) r.provenance.push_back(p);
  r.passed = c.all_geodesic;
  return r;
}

inline QuotientInvariant parse_invariant(const std::string& s) {
  if (s == "g4") return QuotientInvariant::g4;
  if (s == "u") return QuotientInvariant::u;
  if (s == "gamma4") return QuotientInvariant::gamma4;
  if (s == "tau") return QuotientInvariant::tau;
  if (s == "shalf") return QuotientInvariant::s_half;
  throw std::invalid_argument("unknown model '" + s + "'");
}

inline Json link_json(const MetricGraph& link) {
  auto diam = graph_diameter(link);
  return Json{{"vertices", link.labels()},
              {"size", link.size()},
              {"connected", diam.has_value()},
              {"diameter", diam ? Json(*diam) : Json(nullptr)}};
}

inline Report quotient_report(const std::string& model, std::int64_t size, const KnotAtlas& atlas) {
  Report r{"quotient"};
  if (size < 1) throw std::invalid_argument("--size must be >= 1");
  r.inputs["model"] = model;
  r.inputs["size"] = size;
  if (model == "g4xu") {
    TwoInvariantModel m = quotient_two_invariant_model(size, atlas);
    Json pts = Json::array();
    for (std::size_t i = 0; i < m.points.size(); ++i)
      pts.push_back({{"m", m.points[i].first}, {"n", m.points[i].second}, {"knot", m.witnesses[i].to_string()}});
    Json pairs = Json::array();
    bool all_intervals = true;
    for (std::size_t i = 0; i < m.points.size(); ++i)
      for (std::size_t j = i + 1; j < m.points.size(); ++j) {
        const DistanceBound& b = m.bounds[i][j];
        auto [m1, n1] = m.points[i];
        auto [m2, n2] = m.points[j];
        std::int64_t linf = std::max(std::abs(m1 - m2), std::abs(n1 - n2)), l1 = std::abs(m1 - m2) + std::abs(n1 - n2);
        all_intervals = all_intervals && b.lower_integer() == linf && b.upper() && *b.upper() == l1;
        pairs.push_back({{"from", m.lattice.label(static_cast<Vertex>(i))},
                         {"to", m.lattice.label(static_cast<Vertex>(j))},
                         {"lower", integer(b.lower_integer())},
                         {"upper", integer(*b.upper())},
                         {"catalog_upper", m.catalog_upper(i, j)}});
      }
    r.results["points"] = pts;
    r.results["pairs"] = pairs;
    r.results["intervals_match_norms"] = all_intervals;
    r.provenance.push_back("g4 = m and u = n verified exactly for every witness");
    r.provenance.push_back("lower: max(|dg4|, |du|); upper: l1 norm, from the bi-Lipschitz estimate");
    r.provenance.push_back("catalog_upper: shortest path using certified steps (add 6_1, add 3_1)");
    r.passed = all_intervals;
    return r;
  }
  if (model == "noncompat") {
    MetricGraph g = noncompatible_model(size);
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) edges.push_back(Json::array({std::stoi(g.label(a)), std::stoi(g.label(b))}));
    r.results["edges"] = edges;
    r.results["diameter"] = g.distances().diameter();
    bool embeds = embeds_in_real_line(g.distances(), {0, 1, 2, 3});
    r.results["subset_0123_embeds_in_line"] = embeds;
    auto compat = check_compatibility(QuotientInvariant::g4, catalog_sample(MoveKind::hn(2), size, atlas), atlas);
    r.results["g4_compatible_with_h2"] = compat.compatible;
    if (compat.witness) r.results["g4_violation"] = {{"move", compat.witness->to_string()}, {"change", integer(compat.change)}};
    r.provenance.push_back("edges {n,0} and {n,m} with |n-m| = 4; distances by breadth-first search");
    r.passed = !embeds;
    return r;
  }
  QuotientModel m = quotient_model(parse_invariant(model), size, atlas);
  Json classes = Json::array();
  for (std::size_t i = 0; i < m.witnesses.size(); ++i)
    classes.push_back({{"class", m.lowest + std::int64_t(i)}, {"witness", m.witnesses[i].to_string()}});
  Json steps = Json::array();
  for (const auto& s : m.steps) steps.push_back(s.to_string());
  const DistanceMatrix& d = m.graph.distances();
  bool path_metric = true;
  for (Vertex a = 0; a < m.graph.size(); ++a)
    for (Vertex b = 0; b < m.graph.size(); ++b) path_metric = path_metric && d(a, b) == (a > b ? a - b : b - a);
  r.results["move"] = m.kind.to_string();
  r.results["classes"] = classes;
  r.results["steps"] = steps;
  r.results["isometric_to_integers"] = path_metric;
  r.results["link_of_zero"] = link_json(link_of_vertex(m.graph, m.vertex_of(0)));
  r.provenance.push_back("each witness has invariant equal to its class; consecutive witnesses are one catalog move apart");
  r.passed = path_metric;
  return r;
}

inline MetricGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
  try {
    return read_graph(in);
  } catch (const GraphFormatError& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

inline Report hyperbolicity_report(const std::string& file, unsigned workers) {
  Report r{"hyperbolicity"};
  MetricGraph g = load_graph(file);
  r.inputs["graph"] = file;
  r.results["vertices"] = g.size();
  r.results["edges"] = g.edge_count();
  r.results["diameter"] = g.distances(workers).diameter();
  r.results["delta_four_point"] = rational(delta_four_point(g, workers));
  r.provenance.push_back("four-point delta over all vertex quadruples, exact");
  return r;
}

inline Report link_report(const std::string& file, const std::string& vertex) {
  Report r{"link"};
  MetricGraph g = load_graph(file);
  r.inputs["graph"] = file;
  r.inputs["vertex"] = vertex;
  auto v = g.find(vertex);
  if (!v) throw std::invalid_argument("vertex '" + vertex + "' is not in the graph");
  MetricGraph link = link_of_vertex(g, *v);
  r.results = link_json(link);
  Json edges = Json::array();
  for (auto [a, b] : link.edges()) edges.push_back(Json::array({link.label(a), link.label(b)}));
  r.results["edges"] = edges;
  r.provenance.push_back("induced subgraph on the unit sphere");
  return r;
}

inline Report qi_report(const std::string& xf, const std::string& yf, const std::string& mf, const std::string& a,
                        const std::string& b, const std::string& c) {
  Report r{"qi-check"};
  MetricGraph x = load_graph(xf), y = load_graph(yf);
  std::ifstream in(mf);
  if (!in) throw std::invalid_argument("cannot open map file '" + mf + "'");
  std::vector<Vertex> f;
  try {
    f = read_vertex_map(in, x, y);
  } catch (const GraphFormatError& e) {
    throw std::invalid_argument(mf + ": " + e.what());
  }
  Rational ra = parse_rational(a), rb = parse_rational(b), rc = parse_rational(c);
  r.inputs = {{"x", xf}, {"y", yf}, {"map", mf}, {"a", rational(ra)}, {"b", rational(rb)}, {"C", rational(rc)}};
  auto res = verify_quasi_isometry(x, y, f, ra, rb, rc);
  r.results["holds"] = res.holds;
  if (res.violation) {
    const auto& v = *res.violation;
    static const char* kinds[] = {"lower", "upper", "density"};
    Json viol{{"kind", kinds[static_cast<int>(v.kind)]}, {"detail", v.detail}};
    if (v.kind == QuasiIsometryViolation::Kind::density)
      viol["y"] = y.label(v.first);
    else
      viol["pair"] = Json::array({x.label(v.first), x.label(v.second)});
    r.results["violation"] = viol;
  } else {
    r.results["violation"] = nullptr;
  }
  r.provenance.push_back("exhaustive check over all source pairs and all target vertices");
  r.passed = res.holds;
  return r;
}

/// Runs the command line; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knot-graph distance bounds, branched-cover homology and hyperbolicity certificates", "knotgraph"};
  app.require_subcommand(1);
  std::string atlas_file;
  app.add_option("--atlas", atlas_file, "extra named knots (name tau s_half u_upper g4_upper [cover:m=<d>:<group>])");
  bool json = false;
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "emit a JSON report"); };

  std::vector<std::string> weights;
  auto* brieskorn = app.add_subcommand("brieskorn", "H_1 of the Brieskorn manifold Sigma(w1,w2,w3)");
  brieskorn->add_option("weights", weights)->required()->expected(3);
  add_json(brieskorn);

  std::string expr, expr2;
  auto* invariants = app.add_subcommand("invariants", "tau, s/2, g4, u, gamma4 and cover homology of a knot");
  invariants->add_option("knot", expr)->required();
  add_json(invariants);

  std::uint64_t degree = 2;
  auto* cover = app.add_subcommand("cover", "H_1 of the m-fold cyclic branched cover");
  cover->add_option("knot", expr)->required();
  cover->add_option("--degree", degree)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 20));
  add_json(cover);

  std::string graph = "h2", covers = "2,3,5,9";
  auto* dist = app.add_subcommand("dist", "certified bounds on the distance between two knots");
  dist->add_option("--graph", graph, "h2, hn:<n> or cc");
  dist->add_option("from", expr)->required();
  dist->add_option("to", expr2)->required();
  dist->add_option("--covers", covers, "cover degrees for the lower bounds");
  add_json(dist);

  std::string family = "h2", k11 = "trefoil";
  std::int64_t k = 0;
  unsigned n = 3;
  auto* cert = app.add_subcommand("certify", "certify a non-thin geodesic triangle");
  cert->add_option("--family", family, "h2, hn or cc")->required();
  cert->add_option("--k", k)->required();
  cert->add_option("--n", n, "H(n) parameter for the hn family");
  cert->add_option("--k11", k11, "trefoil or mirror-trefoil");
  add_json(cert);

  std::string model;
  std::int64_t size = 0;
  auto* quotient = app.add_subcommand("quotient", "quotient knot-graph models");
  quotient->add_option("--model", model, "g4, u, gamma4, tau, shalf, g4xu or noncompat")->required();
  quotient->add_option("--size", size)->required();
  add_json(quotient);

  std::string file, file2, map_file, vertex;
  unsigned workers = 0;
  auto* hyp = app.add_subcommand("hyperbolicity", "four-point delta of a graph file");
  hyp->add_option("graph", file)->required();
  hyp->add_option("--workers", workers, "worker threads (0 = all cores)");
  add_json(hyp);

  auto* link = app.add_subcommand("link", "link of a vertex");
  link->add_option("graph", file)->required();
  link->add_option("vertex", vertex)->required();
  add_json(link);

  std::string qa = "1", qb = "0", qc = "0";
  auto* qi = app.add_subcommand("qi-check", "check a vertex map for quasi-isometry constants");
  qi->add_option("x", file)->required();
  qi->add_option("y", file2)->required();
  qi->add_option("map", map_file)->required();
  qi->add_option("--a", qa);
  qi->add_option("--b", qb);
  qi->add_option("--C", qc);
  add_json(qi);

  std::vector<std::string> argv_store{"knotgraph"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  try {
    KnotAtlas atlas = KnotAtlas::builtin();
    if (!atlas_file.empty()) {
      std::ifstream in(atlas_file);
      if (!in) throw std::invalid_argument("cannot open atlas file '" + atlas_file + "'");
      atlas = KnotAtlas::load_extension(in);
    }
    Report r;
    if (*brieskorn)
      r = brieskorn_report(weights);
    else if (*invariants)
      r = invariants_report(expr, atlas);
    else if (*cover)
      r = cover_report(expr, degree, atlas);
    else if (*dist)
      r = dist_report(graph, expr, expr2, covers, atlas);
    else if (*cert)
      r = certify_report(family, k, n, k11, atlas);
    else if (*quotient)
      r = quotient_report(model, size, atlas);
    else if (*hyp)
      r = hyperbolicity_report(file, workers);
    else if (*link)
      r = link_report(file, vertex);
    else
      r = qi_report(file, file2, map_file, qa, qb, qc);
    Json j = r.to_json();
    if (json) {
      out << j.dump(2) << '\n';
    } else {
      out << r.command << '\n';
      render_text(out, j["results"], 2);
      out << "verdict: " << j["verdict"].get<std::string>() << '\n';
    }
    return r.passed ? ok : verification_failed;
  } catch (const KnotParseError& e) {
    err << "error: cannot parse knot: " << e.what() << '\n';
    return usage_error;
  } catch (const WitnessVerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return verification_failed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::logic_error& e) {
    err << "verification failed: " << e.what() << '\n';
    return verification_failed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
}

}  // namespace knotgraph::cli
