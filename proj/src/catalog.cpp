#include "crysref/catalog.hpp"

#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace crysref {

const char* source_name(Source s) { return s == Source::Reference ? "reference" : "computed"; }

namespace {

using Strs = std::vector<std::string>;

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

template <class T>
Expected<T> ref(T v, std::string note) {
  return Expected<T>{std::move(v), Source::Reference, std::move(note)};
}
template <class T>
Expected<T> comp(T v, std::string note = {}) {
  return Expected<T>{std::move(v), Source::Computed, std::move(note)};
}

GroupSpec make(std::string name, int st, Family fam, int n, int N, std::vector<GeneratorSpec> gens,
               std::optional<std::vector<Strs>> gram = std::nullopt) {
  GroupSpec g;
  g.name = name;
  g.shephard_todd = st;
  g.family = fam;
  g.dim = n;
  g.field_order = N;
  g.spec.name = std::move(name);
  g.spec.field_order = N;
  g.spec.dim = n;
  g.spec.generators = std::move(gens);
  g.spec.gram = std::move(gram);
  return g;
}

GroupSpec metadata(std::string name, int st, int n, int N, long long order) {
  GroupSpec g;
  g.name = g.spec.name = std::move(name);
  g.shephard_todd = st;
  g.family = Family::Exceptional;
  g.dim = g.spec.dim = n;
  g.field_order = g.spec.field_order = N;
  g.has_data = false;
  g.closure_feasible = false;
  g.expected.order = ref(order, "group order");
  return g;
}

Strs unit(int n, int i, const std::string& x = "1") {
  Strs v(n, "0");
  v[i] = x;
  return v;
}

Strs diff(int n, int i, int j) {
  Strs v(n, "0");
  v[i] = "1";
  v[j] = "-1";
  return v;
}

// Gram-form model: roots are the unit vectors, Gram = symmetrized Cartan data.
std::vector<GeneratorSpec> unit_roots(int n) {
  std::vector<GeneratorSpec> g;
  for (int i = 0; i < n; ++i) g.push_back({unit(n, i), 2, std::nullopt});
  return g;
}

std::vector<Strs> cartan_gram_simply_laced(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Strs> m(n, Strs(n, "0"));
  for (int i = 0; i < n; ++i) m[i][i] = "2";
  for (auto [a, b] : edges) m[a][b] = m[b][a] = "-1";
  return m;
}

GroupSpec type_A(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  GroupSpec g = make("A" + std::to_string(n), 1, Family::Real, n, 1, unit_roots(n), cartan_gram_simply_laced(n, e));
  g.expected.det_S = ref(std::to_string(n + 1), "det S(A_n) = n + 1");
  g.expected.trace_ring = ref(std::string("Z"), "trace ring of A_n");
  g.expected.order = comp(factorial(n + 1));
  g.expected.admissible = ref(true, "A_n is crystallographic");
  g.closure_feasible = n <= 7;
  return g;
}

GroupSpec type_E(int n) {
  // Chain 0-1-2-3-...-(n-2) with node n-1 attached to node 2.
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
  e.push_back({2, n - 1});
  GroupSpec g = make("E" + std::to_string(n), 29 + n, Family::Real, n, 1, unit_roots(n), cartan_gram_simply_laced(n, e));
  g.closure_feasible = false;
  g.expected.det_S = comp(std::to_string(9 - n), "Cartan determinant");
  const long long orders[] = {51840, 2903040, 696729600};
  g.expected.order = ref(orders[n - 6], "Weyl group order");
  return g;
}

GroupSpec type_B(int n, bool c) {
  std::vector<GeneratorSpec> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back({diff(n, i, i + 1), 2, std::nullopt});
  gens.push_back({unit(n, n - 1, c ? "2" : "1"), 2, std::nullopt});
  GroupSpec g = make((c ? "C" : "B") + std::to_string(n), 2, Family::Real, n, 1, gens);
  g.expected.order = comp((1LL << n) * factorial(n));
  g.expected.det_S = comp(std::string("2"), "Cartan determinant");
  return g;
}

GroupSpec type_D(int n) {
  std::vector<GeneratorSpec> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back({diff(n, i, i + 1), 2, std::nullopt});
  Strs last(n, "0");
  last[n - 2] = last[n - 1] = "1";
  gens.push_back({last, 2, std::nullopt});
  GroupSpec g = make("D" + std::to_string(n), 2, Family::Real, n, 1, gens);
  g.expected.order = comp((1LL << (n - 1)) * factorial(n));
  g.expected.det_S = ref(std::string("4"), "4 sin^2(pi/2) for G(2,2,n)");
  return g;
}

// Monomial model of G(m,p,n).
GroupSpec imprimitive(int m, int p, int n) {
  const std::string z = "z" + std::to_string(m);
  std::vector<GeneratorSpec> gens;
  if (p == 1) {
    gens.push_back({unit(n, 0), m, std::nullopt});
    for (int i = 0; i + 1 < n; ++i) gens.push_back({diff(n, i, i + 1), 2, std::nullopt});
  } else {
    gens.push_back({diff(n, 0, 1), 2, std::nullopt});
    Strs e2 = diff(n, 0, 1);
    e2[0] = z + "^-1";
    gens.push_back({e2, 2, std::nullopt});
    for (int i = 1; i + 1 < n; ++i) gens.push_back({diff(n, i, i + 1), 2, std::nullopt});
    if (p < m) gens.push_back({unit(n, n - 1), m / p, std::nullopt});
  }
  const std::string name = "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
  GroupSpec g = make(name, 2, Family::Imprimitive, n, m, gens);
  long long ord = factorial(n);
  for (int k = 0; k < n; ++k) ord *= m;
  ord /= p;
  g.expected.order = ref(ord, "m^n n! / p");
  if (p == m) g.expected.det_S = ref("2 - " + z + " - " + z + "^-1", "det S(G(m,m,n)) = 4 sin^2(pi/m)");
  const bool adm = m == 2 || m == 3 || m == 4 || m == 6;
  g.expected.admissible = ref(adm, "G(m,p,n) crystallographic exactly for m = 2, 3, 4, 6");
  if (m == 4 && p == 4 && n >= 3) g.expected.trace_ring = ref(std::string("Z[i]"), "trace ring of G(4,4,n)");
  if (m == 3 && p == 1 && n == 3) {
    g.expected.trace_ring = ref(std::string("Z[w]"), "trace ring of G(3,1,n)");
    g.expected.lattices_raw = ref(2, "two possibilities for the tower");
    g.expected.lattice_classes = ref(2, "the two lattices are distinct");
  }
  if (m == 4 && p == 2 && n >= 3) {
    g.expected.lattices_raw = ref(5, "five lattices between Lambda and Lambda*");
    g.expected.h1_factors = ref(std::vector<long long>{2, 2}, "Lambda*/Lambda = Z/2 + Z/2");
    g.expected.cocycle_classes = comp(2, "at most 2 by theory");
  }
  if (m == 6 && (p == 2 || p == 3) && n >= 3) {
    g.expected.lattice_classes = ref(1, "unique lattice up to similarity");
    g.expected.cocycle_classes = comp(1);
  }
  if (m == 4 && p == 2) g.expected.non_semidirect = ref(true, "[G(4,2,s)]_1* is listed among the non-split cases");
  if (m == 4 && p == 2 && n == 2) g.expected.trace_ring = ref(std::string("Z[sqrt(-4)]"), "Z[2i]");
  if (m == 6 && p == 3 && n == 2) g.expected.trace_ring = ref(std::string("Z[sqrt(-3)]"), "Z[2w] = Z[sqrt(-3)]");
  if (m == 6 && (p == 2 || p == 3)) g.expected.non_semidirect = ref(false, "not among the non-split cases");
  if (m == 6 && p == 6) g.expected.h1_factors = ref(std::vector<long long>{}, "det S = 1");
  g.closure_feasible = ord <= 200000;
  return g;
}

std::vector<GroupSpec> build() {
  std::vector<GroupSpec> c;
  for (int n = 1; n <= 8; ++n) c.push_back(type_A(n));
  for (int n = 2; n <= 4; ++n) c.push_back(type_B(n, false));
  for (int n = 2; n <= 3; ++n) c.push_back(type_B(n, true));
  for (int n = 3; n <= 4; ++n) c.push_back(type_D(n));
  {
    GroupSpec g = make("G2", 2, Family::Real, 2, 1, unit_roots(2), std::vector<Strs>{{"2", "-3"}, {"-3", "6"}});
    g.expected.det_S = ref(std::string("1"), "4 sin^2(pi/6) = 1");
    g.expected.order = comp(12LL);
    c.push_back(g);
  }
  {
    GroupSpec g = make("F4", 28, Family::Real, 4, 1,
                       {{{"0", "1", "-1", "0"}, 2, std::nullopt},
                        {{"0", "0", "1", "-1"}, 2, std::nullopt},
                        {{"0", "0", "0", "1"}, 2, std::nullopt},
                        {{"1/2", "-1/2", "-1/2", "-1/2"}, 2, std::nullopt}});
    g.expected.order = comp(1152LL);
    g.expected.admissible = ref(true, "Weyl group");
    c.push_back(g);
  }
  {
    // tau = (1 + sqrt 5)/2 = 1 + z5 + z5^4.
    GroupSpec g = make("H3", 23, Family::Real, 3, 5, unit_roots(3),
                       std::vector<Strs>{{"2", "-1", "0"}, {"-1", "2", "-1 - z5 - z5^4"}, {"0", "-1 - z5 - z5^4", "2"}});
    g.expected.order = comp(120LL);
    g.expected.admissible = ref(false, "not crystallographic");
    c.push_back(g);
  }
  for (int n = 6; n <= 8; ++n) c.push_back(type_E(n));
  const int ms[] = {2, 3, 4, 6};
  for (int m : ms)
    for (int p = 1; p <= m; ++p) {
      if (m % p) continue;
      for (int n = 2; n <= 4; ++n) {
        if (m == 2 && p == 2 && n == 2) continue;  // reducible
        c.push_back(imprimitive(m, p, n));
      }
    }
  c.push_back(imprimitive(5, 5, 3));
  {
    GroupSpec g = make("K4", 4, Family::Exceptional, 2, 3, {{{"1", "0"}, 3, std::nullopt}, {{"0", "1"}, 3, std::nullopt}},
                       std::vector<Strs>{{"1", "-1/(1-w)"}, {"-1/(1-w^2)", "1"}});
    g.expected.order = comp(24LL);
    c.push_back(g);
  }
  {
    GroupSpec g = make("K5", 5, Family::Exceptional, 2, 3, {{{"1", "0"}, 3, std::nullopt}, {{"0", "1"}, 3, std::nullopt}},
                       std::vector<Strs>{{"1", "2/(1-w)"}, {"2/(1-w^2)", "2"}});
    g.expected.order = comp(72LL);
    c.push_back(g);
  }
  {
    GroupSpec g = make("K8", 8, Family::Exceptional, 2, 4, {{{"1", "0"}, 4, std::nullopt}, {{"1", "1"}, 4, std::nullopt}});
    g.expected.order = comp(96LL);
    c.push_back(g);
  }
  {
    // i sqrt 2 = z8 + z8^3.
    GroupSpec g = make("K12", 12, Family::Exceptional, 2, 8,
                       {{{"1", "0"}, 2, std::nullopt}, {{"1", "-1"}, 2, std::nullopt}, {{"1", "1 + z8 + z8^3"}, 2, std::nullopt}});
    g.expected.order = comp(48LL);
    g.expected.trace_ring = comp(std::string("Z[sqrt(-2)]"));
    g.expected.non_semidirect = ref(true, "[K12]* is listed among the non-split cases");
    c.push_back(g);
  }
  const std::vector<GeneratorSpec> k31 = {
      {{"-1-i", "1+i", "0", "0"}, 2, std::nullopt},
      {{"0", "1-i", "-1+i", "0"}, 2, std::nullopt},
      {{"1+i", "0", "1-i", "0"}, 2, std::nullopt},
      {{"1", "1", "i", "i"}, 2, std::nullopt},
      {{"2", "0", "0", "0"}, 2, std::nullopt},
  };
  {
    GroupSpec g = make("K29", 29, Family::Exceptional, 4, 4, std::vector<GeneratorSpec>(k31.begin(), k31.begin() + 4));
    g.expected.order = comp(7680LL);
    g.expected.trace_ring = comp(std::string("Z[i]"));
    c.push_back(g);
  }
  {
    GroupSpec g = make("K31", 31, Family::Exceptional, 4, 4, k31);
    g.spec.presentation = {"r1^2", "r2^2", "r3^2", "(r2 r3)^3", "(r3 r1)^3", "(r1 r2)^3",
                           "(r2 r1 r3 r1)^4", "(r4 r5)^3", "r5^2", "(r5 r2)^2", "(r5 r1 r3 r1)^2", "(r5 r3)^4",
                           "r1 (r5 r3 r2 r3) r1 (r5 r3 r2 r3)^-1", "r4^2", "(r4 r1)^2", "(r4 r3)^2", "(r4 r2)^3"};
    g.spec.lattice = std::vector<Strs>{{"-1-i", "1+i", "0", "0"}, {"0", "1-i", "-1+i", "0"}, {"1+i", "0", "1-i", "0"},
                                       {"1", "1", "i", "i"}, {"1-i", "-1+i", "0", "0"}, {"0", "1+i", "-1-i", "0"},
                                       {"-1+i", "0", "1+i", "0"}, {"i", "i", "-1", "-1"}};
    g.spec.parameters.lambda = "(1+i)/2";
    g.expected.order = comp(46080LL, "closure");
    g.expected.lattice_classes = ref(1, "unique invariant lattice up to similarity");
    g.expected.non_semidirect = ref(true, "lambda = (1+i)/2 is not a coboundary");
    g.expected.cocycle_classes = ref(2, "classes 0 and (1+i)/2");
    c.push_back(g);
  }
  c.push_back(metadata("K32", 32, 4, 3, 155520));
  c.push_back(metadata("K33", 33, 5, 3, 51840));
  c.push_back(metadata("K34", 34, 6, 3, 39191040));
  for (const char* k : {"W3", "W4", "W6", "W2l", "W2"}) {
    GroupSpec g;
    g.name = g.spec.name = k;
    g.family = Family::OneDim;
    g.dim = g.spec.dim = 1;
    g.has_data = false;
    c.push_back(g);
  }
  return c;
}

}  // namespace

const std::vector<GroupSpec>& catalog() {
  static const std::vector<GroupSpec> c = build();
  return c;
}

const GroupSpec& get_group(std::string_view name) {
  for (const auto& g : catalog())
    if (g.name == name) return g;
  // Other G(m,p,n) are built on first use and kept for the process lifetime.
  int m = 0, p = 0, n = 0;
  char tail = 0;
  const std::string text(name);
  if (std::sscanf(text.c_str(), "G(%d,%d,%d)%c", &m, &p, &n, &tail) == 3 && m >= 2 && m <= 24 && p >= 1 && m % p == 0 &&
      n >= 2 && n <= 8 && !(m == 2 && p == 2 && n == 2)) {
    GroupSpec g = imprimitive(m, p, n);
    if (g.name == text) {
      static std::mutex mu;
      static std::map<std::string, std::unique_ptr<GroupSpec>> extra;
      std::lock_guard<std::mutex> lock(mu);
      auto& slot = extra[text];
      if (!slot) slot = std::make_unique<GroupSpec>(std::move(g));
      return *slot;
    }
  }
  fail(ErrorCode::UnknownGroup, text);
}

std::vector<std::string> list_groups() {
  std::vector<std::string> out;
  for (const auto& g : catalog()) out.push_back(g.name);
  return out;
}

}  // namespace crysref
