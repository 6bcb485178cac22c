#include <doctest.h>

#include <algorithm>

#include "crysref/catalog.hpp"
#include "crysref/errors.hpp"
#include "crysref/group.hpp"
#include "crysref/lattice.hpp"
#include "crysref/specfile.hpp"

using namespace crysref;

namespace {

// Naive closure by repeated products; quadratic but independent of the BFS engine.
std::vector<CMat> naive_closure(const std::vector<CMat>& gens) {
  std::vector<CMat> all{CMat::identity(gens[0].rows())};
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t n = all.size();
    for (size_t a = 0; a < n; ++a)
      for (const auto& g : gens) {
        CMat p = all[a] * g;
        if (std::find(all.begin(), all.end(), p) == all.end()) {
          all.push_back(p);
          grew = true;
        }
      }
  }
  return all;
}

CMat diag(std::vector<CycloNum> d) {
  CMat m(d.size(), d.size(), CycloNum(0));
  for (size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

std::vector<CMat> mats(const char* name) { return to_system(get_group(name).spec).matrices(); }

}  // namespace

TEST_CASE("closure orders") {
  const CMat swap = CMat::from_rows({{CycloNum(0), CycloNum(1)}, {CycloNum(1), CycloNum(0)}});
  std::vector<CMat> b2{diag({CycloNum(-1), CycloNum(1)}), swap};
  CHECK(closure(b2).order() == naive_closure(b2).size());
  CHECK(closure(b2).order() == 8);
  CHECK(closure({diag({CycloNum::zeta(4)})}).order() == 4);
  auto a2 = mats("A2");
  CHECK(closure(a2).order() == naive_closure(a2).size());
  CHECK(closure(a2).order() == 6);
}

TEST_CASE("closure is deterministic and records words") {
  auto g1 = closure(mats("G(4,4,3)"));
  auto g2 = closure(mats("G(4,4,3)"));
  REQUIRE(g1.order() == g2.order());
  for (size_t k = 0; k < g1.order(); ++k) CHECK(g1.element(k) == g2.element(k));
  for (size_t k = 0; k < g1.order(); k += 7) {
    CMat p = CMat::identity(3);
    for (int x : g1.word(k)) p = p * g1.generators()[x];
    CHECK(p == g1.element(k));
  }
  const size_t e = g1.identity_index();
  CHECK(g1.element(e) == CMat::identity(3));
  for (size_t k = 0; k < g1.order(); k += 5) CHECK(g1.multiply(k, g1.inverse(k)) == e);
}

TEST_CASE("closure cap") {
  const CycloNum two(2);
  try {
    closure({diag({two, CycloNum(1)})}, 50);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("reflections and mirrors") {
  auto a2 = closure(mats("A2"));
  CHECK(reflections_of(a2).size() == 3);
  auto m = mirrors_of(a2);
  CHECK(m.size() == 3);
  for (const auto& x : m) CHECK(x.m == 2);
  // brute force: elements of A2 with a 1-dimensional image of I - P
  size_t count = 0;
  for (size_t k = 0; k < a2.order(); ++k) count += fixed_codim(a2.element(k)) == 1;
  CHECK(count == 3);

  auto c3 = closure({diag({CycloNum::zeta(3), CycloNum(1)})});
  CHECK(reflections_of(c3).size() == 2);
  auto mc = mirrors_of(c3);
  REQUIRE(mc.size() == 1);
  CHECK(mc[0].m == 3);

  auto triv = closure({CMat::identity(2)});
  CHECK(reflections_of(triv).empty());
}

TEST_CASE("reflection count equals the sum of m(H) - 1") {
  for (const char* name : {"B3", "G(4,2,3)", "G(3,1,3)", "K4", "G(6,3,2)"}) {
    auto g = closure(mats(name), kDefaultClosureCap, get_group(name).field_order);
    size_t expect = 0;
    for (const auto& x : mirrors_of(g)) expect += static_cast<size_t>(x.m - 1);
    CHECK(reflections_of(g).size() == expect);
  }
}

TEST_CASE("essential and irreducible") {
  auto a2 = closure(mats("A2"));
  CHECK(is_essential(a2));
  CHECK(is_irreducible(a2));
  std::vector<CMat> a1a1{diag({CycloNum(-1), CycloNum(1)}), diag({CycloNum(1), CycloNum(-1)})};
  CHECK(is_essential(a1a1));
  CHECK_FALSE(is_irreducible(a1a1));
  CHECK(commutant_dimension(a1a1) == 2);
  CHECK_FALSE(is_essential(std::vector<CMat>{CMat::identity(2)}));
}

TEST_CASE("trace rings") {
  CHECK(trace_ring(closure(mats("A2"))).is_Z());
  auto r = trace_ring(closure(mats("G(4,4,3)"), kDefaultClosureCap, 4));
  CHECK(r.module.rank() == 2);
  CHECK(r.module.contains(realify(CycloNum::zeta(4), 4)));
  auto c3 = trace_ring(closure({diag({CycloNum::zeta(3), CycloNum(1)})}));
  CHECK(c3.module.rank() == 2);
  CHECK(c3.module.contains(realify(CycloNum::zeta(3), 3)));
  CHECK_FALSE(c3.module.contains(realify(CycloNum::zeta(3) / CycloNum(2), 3)));
}

TEST_CASE("conjugacy diagnostic") {
  for (const char* name : {"A2", "B2", "G(4,4,3)", "K4"}) {
    auto sys = to_system(get_group(name).spec);
    CHECK(reflection_conjugacy_diagnostic(sys.group(), sys.gens()));
  }
}

TEST_CASE("canonical lines") {
  const CycloNum i = CycloNum::zeta(4);
  CVec v{i * 2, CycloNum(2)};
  CVec c = canonical_line(v);
  CHECK(c[0] == CycloNum(1));
  CHECK(c[1] == -i);
  CHECK(canonical_line(scale(CycloNum(3) + i, v)) == c);
}
