#include "crysref/specfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "crysref/scalar_parse.hpp"

namespace crysref {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::ParseError, what); }

// A scalar is a string expression, an integer, or a term list [[e, "p/q"], ...]
// meaning sum (p/q) zeta_N^e.
std::string scalar_text(const json& j, const std::string& where, int N) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_array()) {
    std::string out;
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !(t[1].is_string() || t[1].is_number_integer()))
        bad(where + ": term must be [exponent, \"p/q\"]");
      const std::string c = t[1].is_string() ? t[1].get<std::string>() : std::to_string(t[1].get<long long>());
      if (!out.empty()) out += " + ";
      out += "(" + c + ")*z" + std::to_string(N) + "^" + std::to_string(t[0].get<long long>());
    }
    return out.empty() ? "0" : out;
  }
  bad(where + ": expected a scalar string, integer or term list");
}

std::vector<std::vector<std::string>> matrix_text(const json& j, const std::string& where, int N) {
  if (!j.is_array()) bad(where + ": expected an array of rows");
  std::vector<std::vector<std::string>> out;
  for (const auto& row : j) {
    if (!row.is_array()) bad(where + ": expected an array of rows");
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(scalar_text(x, where, N));
    out.push_back(std::move(r));
  }
  return out;
}

template <class T>
std::optional<T> opt_field(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  try {
    return j[key].get<T>();
  } catch (const json::exception&) {
    bad(std::string("parameter '") + key + "' has the wrong type");
  }
}

std::optional<std::string> opt_scalar(const json& j, const char* key, int N) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return scalar_text(j[key], key, N);
}

}  // namespace

SpecFile parse_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("spec must be a JSON object");
  static const char* known[] = {"name", "field_order", "dim", "generators", "gram", "lattice", "presentation", "parameters"};
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* q : known) ok = ok || k == q;
    if (!ok) bad("unknown field '" + k + "'");
  }
  SpecFile s;
  s.name = j.value("name", std::string("unnamed"));
  if (!j.contains("field_order") || !j["field_order"].is_number_integer()) bad("field_order: required integer");
  s.field_order = j["field_order"].get<int>();
  if (s.field_order < 1 || s.field_order > kMaxFieldOrder) bad("field_order out of range");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) bad("dim: required integer");
  s.dim = j["dim"].get<int>();
  if (s.dim < 1) bad("dim must be positive");
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty()) bad("generators: required non-empty array");
  for (const auto& g : j["generators"]) {
    if (!g.is_object() || !g.contains("root")) bad("generator: object with 'root' required");
    GeneratorSpec gs;
    if (!g["root"].is_array()) bad("generator root: expected an array of scalars");
    for (const auto& x : g["root"]) gs.root.push_back(scalar_text(x, "root", s.field_order));
    if (static_cast<int>(gs.root.size()) != s.dim) bad("generator root length differs from dim");
    if (g.contains("order")) {
      if (!g["order"].is_number_integer() || g["order"].get<int>() < 2) bad("generator order must be an integer >= 2");
      gs.order = g["order"].get<int>();
    }
    gs.theta = opt_scalar(g, "theta", s.field_order);
    s.generators.push_back(std::move(gs));
  }
  if (j.contains("gram")) s.gram = matrix_text(j["gram"], "gram", s.field_order);
  if (j.contains("lattice")) s.lattice = matrix_text(j["lattice"], "lattice", s.field_order);
  if (j.contains("presentation")) {
    if (!j["presentation"].is_array()) bad("presentation: expected array of words");
    for (const auto& w : j["presentation"]) {
      if (!w.is_string()) bad("presentation: expected array of words");
      s.presentation.push_back(w.get<std::string>());
    }
  }
  if (j.contains("parameters")) {
    const json& p = j["parameters"];
    if (!p.is_object()) bad("parameters: expected object");
    s.parameters.tau = opt_scalar(p, "tau", s.field_order);
    s.parameters.lambda = opt_scalar(p, "lambda", s.field_order);
    s.parameters.class_denominator = opt_field<int>(p, "D");
    s.parameters.closure_cap = opt_field<long long>(p, "closure_cap");
    s.parameters.quotient_bound = opt_field<long long>(p, "quotient_bound");
    s.parameters.cycle_bound = opt_field<int>(p, "cycle_bound");
    s.parameters.search_budget = opt_field<long long>(p, "search_budget");
    s.parameters.radius = opt_scalar(p, "radius", s.field_order);
  }
  return s;
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string dump_spec(const SpecFile& s) {
  json j;
  j["name"] = s.name;
  j["field_order"] = s.field_order;
  j["dim"] = s.dim;
  j["generators"] = json::array();
  for (const auto& g : s.generators) {
    json x{{"root", g.root}, {"order", g.order}};
    if (g.theta) x["theta"] = *g.theta;
    j["generators"].push_back(x);
  }
  if (s.gram) j["gram"] = *s.gram;
  if (s.lattice) j["lattice"] = *s.lattice;
  if (!s.presentation.empty()) j["presentation"] = s.presentation;
  json p = json::object();
  const auto& q = s.parameters;
  if (q.tau) p["tau"] = *q.tau;
  if (q.lambda) p["lambda"] = *q.lambda;
  if (q.class_denominator) p["D"] = *q.class_denominator;
  if (q.closure_cap) p["closure_cap"] = *q.closure_cap;
  if (q.quotient_bound) p["quotient_bound"] = *q.quotient_bound;
  if (q.cycle_bound) p["cycle_bound"] = *q.cycle_bound;
  if (q.search_budget) p["search_budget"] = *q.search_budget;
  if (q.radius) p["radius"] = *q.radius;
  if (!p.empty()) j["parameters"] = p;
  return j.dump(2);
}

ReflectionSystem to_system(const SpecFile& s) {
  const int N = s.field_order;
  std::vector<Reflection> gens;
  for (const auto& g : s.generators) {
    CVec root;
    for (const auto& x : g.root) root.push_back(parse_scalar(x, N));
    if (g.theta) {
      Reflection r{root, parse_scalar(*g.theta, N), g.order};
      auto ord = root_of_unity_order(r.theta);
      if (!ord || *ord != g.order) fail(ErrorCode::PreconditionViolated, "theta is not a primitive root of unity of the stated order");
      gens.push_back(r);
    } else {
      gens.push_back(Reflection::standard(root, g.order, N));
    }
  }
  HermitianForm form;
  if (s.gram) {
    CMat g(s.dim, s.dim);
    if (static_cast<int>(s.gram->size()) != s.dim) fail(ErrorCode::ParseError, "gram must be dim x dim");
    for (int a = 0; a < s.dim; ++a) {
      if (static_cast<int>((*s.gram)[a].size()) != s.dim) fail(ErrorCode::ParseError, "gram must be dim x dim");
      for (int b = 0; b < s.dim; ++b) g(a, b) = parse_scalar((*s.gram)[a][b], N);
    }
    if (!(conj_transpose(g) == g)) fail(ErrorCode::PreconditionViolated, "gram is not Hermitian");
    form.gram = g;
  }
  return ReflectionSystem(s.dim, N, gens, form);
}

std::optional<ZLattice> spec_lattice(const SpecFile& s) {
  if (!s.lattice) return std::nullopt;
  std::vector<CVec> vs;
  for (const auto& row : *s.lattice) {
    if (static_cast<int>(row.size()) != s.dim) fail(ErrorCode::ParseError, "lattice vector length differs from dim");
    CVec v;
    for (const auto& x : row) v.push_back(parse_scalar(x, s.field_order));
    vs.push_back(v);
  }
  return ZLattice::from_generators(RealStructure(s.dim, s.field_order), vs);
}

Presentation spec_presentation(const SpecFile& s) {
  Presentation p;
  for (const auto& w : s.presentation) p.relators.push_back(parse_word(w));
  return p;
}

}  // namespace crysref
