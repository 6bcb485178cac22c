#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "crysref/affine.hpp"
#include "crysref/catalog.hpp"
#include "crysref/modular.hpp"
#include "crysref/scalar_parse.hpp"

namespace crysref::cli {

using Json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string source;
  std::string json_path;
  std::optional<long long> cap;
  std::optional<long long> quotient_bound;
  std::optional<int> cycle_bound;
  std::optional<long long> budget;
  std::optional<int> D;
  std::string tau, lambda, radius, kind, v;
  bool all = false;
  unsigned jobs = 0;
};

struct Context {
  SpecFile spec;
  const GroupSpec* entry = nullptr;
  long long cap = kDefaultClosureCap;
  long long quotient_bound = kDefaultQuotientBound;
  int cycle_bound = kDefaultCycleBound;
  long long budget = kDefaultSearchBudget;
  int D = 2;
  std::optional<std::string> tau, lambda;
};

// ---- serialization helpers ----

std::string str(const CycloNum& z) { return z.to_string(); }

Json vec_json(const CVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(str(x));
  return a;
}

Json mat_json(const CMat& m) {
  Json a = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
  return a;
}

Json lattice_json(const ZLattice& l) {
  Json j;
  j["rank"] = l.rank();
  Json b = Json::array();
  for (const auto& v : l.complex_basis()) b.push_back(vec_json(v));
  j["basis"] = b;
  return j;
}

Json scalars_json(const std::vector<CycloNum>& zs) {
  Json a = Json::array();
  for (const auto& z : zs) a.push_back(str(z));
  return a;
}

Json integers_json(const std::vector<Integer>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool flat_array(const Json& j) {
  for (const auto& x : j)
    if (!is_scalar(x)) return false;
  return true;
}

bool flat_object(const Json& j) {
  if (!j.is_object()) return false;
  for (const auto& [k, v] : j.items())
    if (!is_scalar(v) && !(v.is_array() && flat_array(v))) return false;
  return true;
}

std::string inline_array(const Json& j);

std::string inline_object(const Json& j) {
  std::string s;
  for (const auto& [k, v] : j.items()) {
    if (!s.empty()) s += ", ";
    s += k + ": " + (is_scalar(v) ? scalar_text(v) : inline_array(v));
  }
  return s;
}

std::string inline_array(const Json& j) {
  std::string s = "[";
  bool first = true;
  for (const auto& x : j) {
    if (!first) s += ", ";
    first = false;
    s += scalar_text(x);
  }
  return s + "]";
}

void render(const Json& j, std::ostream& out, int indent);

void render_value(const std::string& key, const Json& v, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  if (is_scalar(v)) {
    out << pad << key << ": " << scalar_text(v) << "\n";
  } else if (v.is_array() && flat_array(v)) {
    out << pad << key << ": " << inline_array(v) << "\n";
  } else if (v.is_array()) {
    out << pad << key << ":";
    if (v.empty()) out << " []";
    out << "\n";
    for (const auto& x : v) {
      if (is_scalar(x)) out << pad << "  - " << scalar_text(x) << "\n";
      else if (x.is_array() && flat_array(x)) out << pad << "  - " << inline_array(x) << "\n";
      else if (flat_object(x)) out << pad << "  - " << inline_object(x) << "\n";
      else {
        out << pad << "  -\n";
        render(x, out, indent + 4);
      }
    }
  } else {
    out << pad << key << ":\n";
    render(v, out, indent + 2);
  }
}

void render(const Json& j, std::ostream& out, int indent) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_value(k, v, out, indent);
  } else if (j.is_array()) {
    for (const auto& x : j) render_value("-", x, out, indent);
  } else {
    out << std::string(indent, ' ') << scalar_text(j) << "\n";
  }
}

// ---- inputs ----

Context make_context(const Options& o) {
  Context c;
  if (o.source.empty()) fail(ErrorCode::ParseError, "missing spec file or catalog name");
  if (std::filesystem::exists(o.source)) {
    c.spec = load_spec(o.source);
  } else {
    c.entry = &get_group(o.source);
    if (!c.entry->has_data) fail(ErrorCode::PreconditionViolated, "catalog entry '" + o.source + "' has no generator data");
    c.spec = c.entry->spec;
  }
  const auto& p = c.spec.parameters;
  if (p.closure_cap) c.cap = *p.closure_cap;
  if (const char* env = std::getenv("CRYSREF_CAP")) {
    try {
      c.cap = std::stoll(env);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "CRYSREF_CAP is not an integer");
    }
  }
  if (o.cap) c.cap = *o.cap;
  if (p.quotient_bound) c.quotient_bound = *p.quotient_bound;
  if (o.quotient_bound) c.quotient_bound = *o.quotient_bound;
  if (p.cycle_bound) c.cycle_bound = *p.cycle_bound;
  if (o.cycle_bound) c.cycle_bound = *o.cycle_bound;
  if (p.search_budget) c.budget = *p.search_budget;
  if (o.budget) c.budget = *o.budget;
  if (p.class_denominator) c.D = *p.class_denominator;
  if (o.D) c.D = *o.D;
  c.tau = p.tau;
  if (!o.tau.empty()) c.tau = o.tau;
  c.lambda = p.lambda;
  if (!o.lambda.empty()) c.lambda = o.lambda;
  return c;
}

// Parses a scalar in the smallest of the usual fields that accepts it.
CycloNum parse_any(const std::string& text, int N) {
  for (int M : {N, std::lcm(N, 4), std::lcm(N, 3), std::lcm(N, 12), std::lcm(N, 8), std::lcm(N, 24)}) {
    try {
      return parse_scalar(text, M);
    } catch (const Error& e) {
      if (e.detail().find("does not lie in") == std::string::npos) throw;
    }
  }
  fail(ErrorCode::ParseError, "cannot place '" + text + "' in a supported cyclotomic field");
}

struct Lattices {
  ReflectionSystem sys;  // possibly over a larger field when tau needs it
  std::string method;
  Json delta;
  std::vector<ZLattice> items;
};

// Delta for a ring; tau defaults to i when the ring is Z.
std::pair<ReflectionSystem, std::optional<ZLattice>> delta_for(const ReflectionSystem& sys, const Context& c, Json& info) {
  const TraceRing ring = cyclic_product_ring(sys.lines(), sys.N());
  if (!ring.is_Z()) {
    info["kind"] = "ring";
    info["ring"] = ring_name(ring);
    if (sys.s() == sys.n() + 1) {
      Json orders = Json::array();
      for (const auto& d : over_orders(ring)) orders.push_back(lattice_json(d)["basis"]);
      info["over_orders"] = orders;
    }
    return {sys, std::nullopt};
  }
  const std::string t = c.tau.value_or("i");
  CycloNum tau = parse_any(t, sys.N());
  if (sign_im(tau) == 0) fail(ErrorCode::PreconditionViolated, "tau must not be real");
  tau = modular_reduce(CycloNum(1), tau);
  const int M = std::lcm(sys.N(), tau.order());
  if (M > kMaxFieldOrder) fail(ErrorCode::IncompatibleFieldOrders, "tau needs too large a field");
  info["kind"] = "tau";
  info["tau"] = str(tau);
  info["tau_defaulted"] = !c.tau.has_value();
  ReflectionSystem big = sys.over(M);
  return {big, complex_lattice({CycloNum(1), tau}, M)};
}

Lattices build_lattices(const ReflectionSystem& sys, const Context& c) {
  Lattices out;
  out.delta = Json::object();
  if (sys.s() == sys.n()) {
    auto [big, delta] = delta_for(sys, c, out.delta);
    out.sys = big;
    bool case1 = true;
    try {
      unit_paths(big);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PathConditionViolated) throw;
      case1 = false;
    }
    out.method = case1 ? "case1" : "case2";
    out.items = build_root_lattices(big, delta);
  } else if (sys.s() == sys.n() + 1) {
    auto [big, delta] = delta_for(sys, c, out.delta);
    out.sys = big;
    out.method = "s=n+1";
    SnPlus1Options opt;
    opt.delta = delta;
    opt.quotient_bound = c.quotient_bound;
    out.items = build_lattices_s_n_plus_1(big, opt);
  } else {
    fail(ErrorCode::WrongGeneratorCount, "lattice builders need s = n or s = n + 1");
  }
  return out;
}

// The spec's lattice if given, else the builder output.
std::pair<ReflectionSystem, std::vector<ZLattice>> input_lattices(const ReflectionSystem& sys, const Context& c) {
  if (auto l = spec_lattice(c.spec)) return {sys, {*l}};
  auto b = build_lattices(sys, c);
  return {b.sys, b.items};
}

Json graph_json(const GroupGraph& g) {
  Json j;
  Json nodes = Json::array();
  for (const auto& n : g.nodes) nodes.push_back({{"id", n.id + 1}, {"m", n.m}, {"theta", str(n.theta)}});
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({{"j", e.j + 1}, {"k", e.k + 1}, {"weight", str(e.weight)}});
  j["edges"] = edges;
  Json cycles = Json::array();
  for (const auto& cy : g.cycles) {
    Json ids = Json::array();
    for (int x : cy.nodes) ids.push_back(x + 1);
    cycles.push_back({{"nodes", ids}, {"weight", str(cy.weight)}, {"reversed", str(cy.reversed)}});
  }
  j["cycles"] = cycles;
  j["cycle_bound"] = g.cycle_bound;
  j["truncated"] = g.truncated;
  j["chain"] = g.is_chain();
  return j;
}

Json dets_json(const ReflectionSystem& sys, const Context& c) {
  Json j;
  const OperatorS S = operator_S(sys);
  j["det_matrix"] = str(S.det);
  const GroupGraph g = build_graph(sys.lines(), c.cycle_bound);
  const CycloNum dg = det_S_from_graph(g);
  j["det_graph"] = str(dg);
  j["agree"] = dg == S.det;
  j["det_abs_squared"] = str(S.det.norm_sq());
  j["root_basis_matrix"] = mat_json(S.root_basis);
  return j;
}

Json admissibility_json(const ReflectionSystem& sys) {
  const AdmissibilityReport r = admissible(sys);
  Json j;
  j["admissible"] = r.admissible;
  j["ring"] = r.ring_name;
  j["ring_basis"] = scalars_json(r.ring.zbasis());
  j["failing_products"] = scalars_json(r.failing);
  return j;
}

Json h1_json(const ReflectionSystem& sys, const ZLattice& l) {
  Json j;
  const H1Result h = h1_root_lattice(sys, l);
  j["invariant_factors"] = integers_json(h.invariant_factors);
  j["order"] = h.order.to_string();
  return j;
}

std::optional<std::string> index_text(const ZLattice& big, const ZLattice& small) {
  auto i = index(big, small);
  if (!i) return std::nullopt;
  return i->to_string();
}

Json opt_text(const std::optional<std::string>& s) { return s ? Json(*s) : Json("infinite"); }

Json lambda_scan_json(const ReflectionSystem& sys, const ZLattice& l, int D) {
  const ClassScan sc = valid_classes(sys, l, D);
  Json j;
  j["D"] = D;
  j["candidates"] = scalars_json(sc.candidates);
  j["valid"] = scalars_json(sc.valid);
  j["classes"] = scalars_json(sc.classes);
  j["class_count"] = sc.classes.size();
  return j;
}

CycloNum lambda_of(const Context& c, int N) {
  if (!c.lambda) fail(ErrorCode::PreconditionViolated, "lambda required (--lambda or parameters.lambda)");
  return parse_scalar(*c.lambda, N);
}

// ---- subcommands ----

Json cmd_graph(const Context& c) {
  const ReflectionSystem sys = to_system(c.spec);
  Json j;
  j["group"] = c.spec.name;
  j["graph"] = graph_json(build_graph(sys.lines(), c.cycle_bound));
  return j;
}

Json cmd_dets(const Context& c) {
  const ReflectionSystem sys = to_system(c.spec);
  Json j;
  j["group"] = c.spec.name;
  j["dets"] = dets_json(sys, c);
  return j;
}

Json cmd_root_lattices(const Context& c) {
  const ReflectionSystem sys = to_system(c.spec);
  const Lattices b = build_lattices(sys, c);
  Json j;
  j["group"] = c.spec.name;
  j["method"] = b.method;
  j["delta"] = b.delta;
  j["count"] = b.items.size();
  j["similarity_classes"] = similarity_classes(b.items, c.budget).size();
  Json items = Json::array();
  for (const auto& l : b.items) {
    Json x = lattice_json(l);
    x["invariant"] = is_invariant(l, b.sys.matrices());
    x["root_lattice"] = root_sublattice(l, b.sys) == l;
    items.push_back(x);
  }
  j["lattices"] = items;
  return j;
}

Json cmd_dual(const Context& c) {
  const ReflectionSystem sys0 = to_system(c.spec);
  auto [sys, ls] = input_lattices(sys0, c);
  Json items = Json::array();
  for (const auto& l : ls) {
    if (!is_invariant(l, sys.matrices())) fail(ErrorCode::NotInvariant);
    const ZLattice d = dual_star(l, sys);
    Json x;
    x["lattice"] = lattice_json(l);
    x["dual"] = lattice_json(d);
    x["index"] = opt_text(index_text(d, l));
    if (sys.s() == sys.n() && root_sublattice(l, sys) == l) x["fast_path_agrees"] = dual_star_via_S(l, sys) == d;
    items.push_back(x);
  }
  Json j;
  j["group"] = c.spec.name;
  j["items"] = items;
  return j;
}

Json cmd_intermediate(const Context& c) {
  const ReflectionSystem sys0 = to_system(c.spec);
  auto [sys, ls] = input_lattices(sys0, c);
  Json items = Json::array();
  for (const auto& l : ls) {
    const ZLattice d = dual_star(l, sys);
    const auto found = enumerate_between(
        l, d, [&](const ZLattice& g) { return is_invariant(g, sys.matrices()); }, c.quotient_bound);
    Json x;
    x["lattice"] = lattice_json(l);
    x["dual_index"] = opt_text(index_text(d, l));
    x["count"] = found.size();
    Json ys = Json::array();
    for (const auto& g : found) {
      Json y = lattice_json(g);
      y["index_over_lattice"] = opt_text(index_text(g, l));
      y["root_lattice"] = root_sublattice(g, sys) == g;
      ys.push_back(y);
    }
    x["invariant_lattices"] = ys;
    items.push_back(x);
  }
  Json j;
  j["group"] = c.spec.name;
  j["items"] = items;
  return j;
}

Json cmd_h1(const Context& c) {
  ReflectionSystem sys0 = to_system(c.spec);
  // With s = n + 1 the cohomology is that of the subgroup K' = <R_1..R_n>.
  const bool sub = sys0.s() == sys0.n() + 1;
  if (sub) sys0 = sys0.prefix(sys0.n());
  auto [sys, ls] = input_lattices(sys0, c);
  Json items = Json::array();
  for (const auto& l : ls) {
    Json x;
    x["lattice"] = lattice_json(l);
    x["h1"] = h1_json(sys, l);
    x["dual_index"] = opt_text(index_text(dual_star(l, sys), l));
    items.push_back(x);
  }
  Json j;
  j["group"] = c.spec.name;
  j["system"] = sub ? "subgroup generated by the first n reflections" : "all generators";
  j["items"] = items;
  return j;
}

Json cmd_cocycle_check(const Context& c) {
  const ReflectionSystem sys0 = to_system(c.spec);
  sys0.group(c.cap);
  auto [sys, ls] = input_lattices(sys0, c);
  sys.group(c.cap);
  const ZLattice& l = ls.at(0);
  const CycloNum lam = lambda_of(c, sys.N());
  const Cocycle co = shaped_cocycle(sys, lam);
  Json j;
  j["group"] = c.spec.name;
  j["lattice"] = lattice_json(l);
  j["lambda"] = str(lam);
  const LambConstraints lc = lamb_constraints(sys, l);
  j["lambda_constraint"] = {{"constraint_vectors", lc.vectors.size()},
               {"allowed", lc.allowed ? lattice_json(*lc.allowed) : Json("unconstrained")},
               {"satisfied", lc.allows(lam)}};
  const bool wd = cocycle_well_defined(sys, co, l);
  j["well_defined_collision"] = wd;
  if (!c.spec.presentation.empty()) j["well_defined_relators"] = cocycle_well_defined(sys, co, l, spec_presentation(c.spec));
  const bool cob = is_coboundary(sys, co, l);
  j["coboundary"] = cob;
  if (wd) j["r_group"] = verdict_name(is_r_group(AffineGroupSpec{sys, l, co}).verdict);
  return j;
}

Json cmd_classes(const Context& c) {
  const ReflectionSystem sys0 = to_system(c.spec);
  sys0.group(c.cap);
  auto [sys, ls] = input_lattices(sys0, c);
  sys.group(c.cap);
  Json items = Json::array();
  for (const auto& l : ls) {
    Json x;
    x["lattice"] = lattice_json(l);
    x["scan"] = lambda_scan_json(sys, l, c.D);
    items.push_back(x);
  }
  Json j;
  j["group"] = c.spec.name;
  j["items"] = items;
  j["note"] = "classes are counted up to coboundaries only; no normalizer orbit fusion";
  return j;
}

Json cmd_classify(const Context& c) {
  const ReflectionSystem sys0 = to_system(c.spec);
  const MatrixGroup& g = sys0.group(c.cap);
  Json j;
  j["group"] = c.spec.name;
  j["dim"] = sys0.n();
  j["field_order"] = sys0.N();
  j["generators"] = sys0.s();
  j["closure"] = {{"order", g.order()},
                  {"essential", is_essential(g)},
                  {"irreducible", is_irreducible(g)},
                  {"conjugacy_diagnostic", reflection_conjugacy_diagnostic(g, sys0.gens())}};
  j["graph"] = graph_json(build_graph(sys0.lines(), c.cycle_bound));
  if (sys0.s() == sys0.n()) j["dets"] = dets_json(sys0, c);
  const Json adm = admissibility_json(sys0);
  j["admissibility"] = adm;
  Json notes = Json::array();
  notes.push_back("extension classes are counted up to coboundaries only; no normalizer orbit fusion");
  if (!adm["admissible"].get<bool>()) {
    notes.push_back("not admissible: no invariant lattice of full rank");
    j["notes"] = notes;
    return j;
  }
  const Lattices b = build_lattices(sys0, c);
  const ReflectionSystem& sys = b.sys;
  sys.group(c.cap);
  if (sys.s() == sys.n() + 1) {
    const ReflectionSystem sub = sys.prefix(sys.n());
    Json items = Json::array();
    std::vector<ZLattice> deltas;
    if (b.delta["kind"] == "tau")
      deltas = {complex_lattice({CycloNum(1), parse_scalar(b.delta["tau"].get<std::string>(), sys.N())}, sys.N())};
    else
      deltas = over_orders(cyclic_product_ring(sys.lines(), sys.N()));
    for (const auto& d : deltas)
      for (const auto& l : build_root_lattices(sub, d)) items.push_back({{"lattice", lattice_json(l)}, {"h1", h1_json(sub, l)}});
    j["subgroup_root_lattices"] = items;
  }
  Json lat;
  lat["method"] = b.method;
  lat["delta"] = b.delta;
  lat["count"] = b.items.size();
  const auto reps = similarity_classes(b.items, c.budget);
  Json rep_ids = Json::array();
  for (size_t r : reps) rep_ids.push_back(r + 1);
  lat["similarity_representatives"] = rep_ids;
  Json items = Json::array();
  bool non_split = false;
  for (size_t i = 0; i < b.items.size(); ++i) {
    const ZLattice& l = b.items[i];
    Json x;
    x["id"] = i + 1;
    x["lattice"] = lattice_json(l);
    const ZLattice root = root_sublattice(l, sys);
    x["root_lattice"] = root == l;
    x["index_over_root"] = opt_text(index_text(l, root));
    x["dual_index"] = opt_text(index_text(dual_star(l, sys), l));
    if (sys.s() == sys.n() && root == l) x["h1"] = h1_json(sys, l);
    const AffineGroupSpec sd = semidirect(sys, l);
    x["semidirect_r_group"] = verdict_name(is_r_group(sd).verdict);
    x["crystallographic"] = is_crystallographic(sd);
    if (sys.s() == sys.n() + 1) {
      const ClassScan sc = valid_classes(sys, l, c.D);
      Json ext = Json::array();
      for (const auto& lam : sc.classes) {
        if (lam.is_zero()) continue;
        const AffineGroupSpec e{sys, l, shaped_cocycle(sys, lam)};
        const RGroupReport r = is_r_group(e);
        ext.push_back({{"lambda", str(lam)}, {"split", r.split}, {"r_group", verdict_name(r.verdict)}});
        if (!r.split && r.verdict == Verdict::Yes) non_split = true;
      }
      x["lambda_scan"] = {{"D", c.D}, {"valid", scalars_json(sc.valid)}, {"classes", scalars_json(sc.classes)}};
      x["non_split_extensions"] = ext;
    }
    items.push_back(x);
  }
  lat["items"] = items;
  j["lattices"] = lat;
  j["non_semidirect"] = non_split;
  j["notes"] = notes;
  return j;
}

Json cmd_one_dim(const Options& o) {
  const auto kind = parse_one_dim_kind(o.kind);
  if (!kind) fail(ErrorCode::ParseError, "--kind must be one of W3, W4, W6, W2l, W2");
  const CycloNum v = parse_any(o.v.empty() ? "1" : o.v, 1);
  std::optional<CycloNum> lam;
  if (!o.lambda.empty()) lam = parse_any(o.lambda, 1);
  const Rational radius(o.radius.empty() ? std::string("2") : o.radius);
  const OneDimGroup g = one_dim(*kind, v, lam);
  const AffineGroupSpec sp = g.spec();
  Json j;
  j["kind"] = one_dim_name(g.kind);
  j["v"] = str(g.v);
  if (g.lambda) {
    j["lambda_input"] = str(*lam);
    j["lambda"] = str(*g.lambda);
    j["lambda_in_strip"] = in_modular_strip(*g.lambda);
  }
  j["field_order"] = g.N;
  j["rotation_order"] = g.rotation_order();
  j["lattice"] = lattice_json(sp.lattice);
  j["translation_rank"] = rank_of_translations(sp);
  j["crystallographic"] = is_crystallographic(sp);
  j["radius"] = radius.to_string();
  Json ms = Json::array();
  for (const auto& m : one_dim_mirrors(g, radius)) ms.push_back({{"point", str(m.point)}, {"orders", m.orders}});
  j["mirrors"] = ms;
  return j;
}

Json expected_json(const ExpectedValues& e) {
  Json j = Json::object();
  auto put = [&](const char* k, const auto& x) {
    if (x) j[k] = {{"value", x->value}, {"source", source_name(x->source)}, {"note", x->note}};
  };
  put("det_S", e.det_S);
  put("trace_ring", e.trace_ring);
  put("order", e.order);
  put("lattices_raw", e.lattices_raw);
  put("lattice_classes", e.lattice_classes);
  put("h1_factors", e.h1_factors);
  put("admissible", e.admissible);
  put("non_semidirect", e.non_semidirect);
  put("cocycle_classes", e.cocycle_classes);
  return j;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Real: return "real";
    case Family::Imprimitive: return "imprimitive";
    case Family::Exceptional: return "exceptional";
    default: return "one-dim";
  }
}

Json cmd_catalog(const Options& o) {
  Json j;
  if (o.source.empty()) {
    Json items = Json::array();
    for (const auto& g : catalog())
      items.push_back({{"name", g.name},
                       {"shephard_todd", g.shephard_todd},
                       {"family", family_name(g.family)},
                       {"dim", g.dim},
                       {"field_order", g.field_order},
                       {"has_data", g.has_data},
                       {"closure_feasible", g.closure_feasible}});
    j["groups"] = items;
    return j;
  }
  const GroupSpec& g = get_group(o.source);
  j["name"] = g.name;
  j["shephard_todd"] = g.shephard_todd;
  j["family"] = family_name(g.family);
  j["has_data"] = g.has_data;
  j["closure_feasible"] = g.closure_feasible;
  if (g.has_data) j["spec"] = Json::parse(dump_spec(g.spec));
  j["expected"] = expected_json(g.expected);
  return j;
}

// classify over every catalog entry with generator data and a feasible
// closure; entries run concurrently, results keep catalog order.
Json cmd_classify_all(const Options& o) {
  std::vector<const GroupSpec*> todo;
  for (const auto& g : catalog())
    if (g.has_data && g.closure_feasible && g.family != Family::OneDim) todo.push_back(&g);
  std::vector<Json> results(todo.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < todo.size();) {
      Options one = o;
      one.source = todo[i]->name;
      try {
        results[i] = cmd_classify(make_context(one));
      } catch (const Error& e) {
        Json r;
        r["group"] = todo[i]->name;
        r["error"] = e.what();
        results[i] = r;
      }
    }
  };
  unsigned n = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(todo.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  Json j;
  j["count"] = todo.size();
  size_t failed = 0;
  for (const auto& r : results) failed += r.contains("error");
  j["errors"] = failed;
  j["groups"] = Json::array();
  for (auto& r : results) j["groups"].push_back(std::move(r));
  return j;
}

int exit_code(const Error& e) {
  switch (error_class(e.code())) {
    case ErrorClass::Parse: return 1;
    case ErrorClass::Precondition: return 2;
    default: return 3;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"crysref: complex crystallographic reflection groups"};
  app.require_subcommand(1);
  Options o;
  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"graph", "group graph: node orders, edge and cycle weights"},
      {"dets", "det S by matrix and by the graph formula"},
      {"root-lattices", "root lattices from the construction algorithms"},
      {"dual", "dual lattice by the constraint solver and by S^-1"},
      {"intermediate", "invariant lattices between a lattice and its dual"},
      {"h1", "H^1 of root lattices from the Smith form of S"},
      {"cocycle-check", "checks the cocycle c(r_(n+1)) = lambda e_(n+1)"},
      {"classes", "scan of lambda in (1/D) Delta modulo Delta"},
      {"classify", "full pipeline report"},
  };
  std::vector<CLI::App*> cmds;
  for (const auto& s : subs) {
    CLI::App* c = app.add_subcommand(s.name, s.help);
    auto* src = c->add_option("source", o.source, "spec file or catalog name");
    if (std::string(s.name) == "classify") {
      c->add_flag("--all", o.all, "classify every catalog entry with a feasible closure");
      c->add_option("--jobs", o.jobs, "worker threads for --all (default: hardware threads)");
    } else {
      src->required();
    }
    c->add_option("--json", o.json_path, "write the machine report to this path");
    c->add_option("--cap", o.cap, "closure cap");
    c->add_option("--quotient-bound", o.quotient_bound, "largest quotient to enumerate");
    c->add_option("--cycle-bound", o.cycle_bound, "longest cycle in the graph");
    c->add_option("--budget", o.budget, "similarity search budget");
    c->add_option("--D", o.D, "lambda denominator bound");
    c->add_option("--tau", o.tau, "tau for Delta = [1, tau] when the ring is Z");
    c->add_option("--lambda", o.lambda, "cocycle parameter");
    cmds.push_back(c);
  }
  CLI::App* od = app.add_subcommand("one-dim", "one-dimensional r-groups and their mirrors");
  od->add_option("--kind", o.kind, "W3, W4, W6, W2l or W2")->required();
  od->add_option("--v", o.v, "lattice generator v");
  od->add_option("--lambda", o.lambda, "second lattice parameter (W2l)");
  od->add_option("--radius", o.radius, "mirror search radius (rational)");
  od->add_option("--json", o.json_path, "write the machine report to this path");
  CLI::App* cat = app.add_subcommand("catalog", "list built-in groups or show one");
  cat->add_option("source", o.source, "catalog name");
  cat->add_option("--json", o.json_path, "write the machine report to this path");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    Json report;
    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    if (name == "one-dim") report = cmd_one_dim(o);
    else if (name == "catalog") report = cmd_catalog(o);
    else if (name == "classify" && o.all) {
      if (!o.source.empty()) fail(ErrorCode::ParseError, "--all takes no source");
      report = cmd_classify_all(o);
    } else {
      const Context c = make_context(o);
      if (name == "graph") report = cmd_graph(c);
      else if (name == "dets") report = cmd_dets(c);
      else if (name == "root-lattices") report = cmd_root_lattices(c);
      else if (name == "dual") report = cmd_dual(c);
      else if (name == "intermediate") report = cmd_intermediate(c);
      else if (name == "h1") report = cmd_h1(c);
      else if (name == "cocycle-check") report = cmd_cocycle_check(c);
      else if (name == "classes") report = cmd_classes(c);
      else report = cmd_classify(c);
    }
    render(report, out, 0);
    if (!o.json_path.empty()) {
      std::ofstream f(o.json_path);
      if (!f) fail(ErrorCode::PreconditionViolated, "cannot write '" + o.json_path + "'");
      f << report.dump(2) << "\n";
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace crysref::cli
