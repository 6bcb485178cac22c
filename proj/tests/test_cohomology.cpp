#include <doctest.h>

#include <string>

#include "crysref/catalog.hpp"
#include "crysref/cohomology.hpp"
#include "crysref/errors.hpp"
#include "crysref/intmat.hpp"
#include "crysref/specfile.hpp"

using namespace crysref;

namespace {

ReflectionSystem sys_of(const std::string& name) { return to_system(get_group(name).spec); }

std::vector<CVec> roots(const ReflectionSystem& sys) {
  std::vector<CVec> r;
  for (const auto& g : sys.gens()) r.push_back(g.root);
  return r;
}

const CycloNum I = CycloNum::zeta(4);

CycloNum q(long long p, long long d) { return CycloNum(Rational(Integer(p), Integer(d))); }

struct K31 {
  ReflectionSystem sys = sys_of("K31");
  ZLattice gamma = *spec_lattice(get_group("K31").spec);
  Presentation pres = spec_presentation(get_group("K31").spec);
};

const K31& k31() {
  static const K31 k;
  return k;
}

}  // namespace

TEST_CASE("words") {
  Word w = parse_word("r1 r2^-1 (r3 r1)^2");
  CHECK(w.letters.size() == 6);
  CHECK(w.letters[0] == std::make_pair(0, 1));
  CHECK(w.letters[1] == std::make_pair(1, -1));
  CHECK(parse_word(to_string(w)) == w);
  CHECK((w * w.inverse()).letters.size() == 12);
  CHECK(word_matrix(sys_of("A3"), w * w.inverse()) == CMat::identity(3));
  CHECK(power(parse_word("r2"), 3) == parse_word("r2 r2 r2"));
  CHECK(power(parse_word("r1 r2"), -1) == parse_word("r2^-1 r1^-1"));
  CHECK(parse_word("") == Word{});
  CHECK_THROWS_AS(parse_word("r0"), Error);
  CHECK_THROWS_AS(parse_word("(r1"), Error);
  CHECK_THROWS_AS(parse_word("x1"), Error);
}

TEST_CASE("H1 of root lattices") {
  for (int n = 1; n <= 6; ++n) {
    auto sys = sys_of("A" + std::to_string(n));
    auto L = ZLattice::from_generators(sys.structure(), roots(sys));
    auto h = h1_root_lattice(sys, L);
    // oracle: Smith form of the Cartan matrix
    ZMat cartan(n, n, Integer(0));
    for (int a = 0; a < n; ++a) {
      cartan(a, a) = Integer(2);
      if (a + 1 < n) cartan(a, a + 1) = cartan(a + 1, a) = Integer(-1);
    }
    std::vector<Integer> expect;
    for (const auto& d : snf(cartan).diagonal)
      if (abs(d) != Integer(1)) expect.push_back(abs(d));
    CHECK(h.invariant_factors == expect);
    CHECK(h.order == Integer(n + 1));
  }
  for (const char* name : {"G(4,2,3)", "G(4,2,4)"}) {
    auto sub = sys_of(name).prefix(sys_of(name).n());
    auto L = ZLattice::ring_span(sub.structure(), {CycloNum(1), I}, roots(sub));
    auto h = h1_root_lattice(sub, L);
    CHECK(h.invariant_factors == std::vector<Integer>{Integer(2), Integer(2)});
    CHECK(h.order == *index(dual_star(L, sub), L));
  }
  auto g663 = sys_of("G(6,6,3)");
  auto G = ZLattice::ring_span(g663.structure(), {CycloNum(1), coerce_order(CycloNum::zeta(3), g663.N())}, roots(g663));
  CHECK(h1_root_lattice(g663, G).invariant_factors.empty());

  auto sub = sys_of("G(4,2,3)").prefix(3);
  auto L = ZLattice::ring_span(sub.structure(), {CycloNum(1), I}, roots(sub));
  const CVec f1 = *solve(operator_S(sub).matrix, roots(sub)[0]);
  auto G1 = sum(L, ZLattice::from_generators(sub.structure(), std::vector<CVec>{f1}));
  CHECK_THROWS_AS(h1_root_lattice(sub, G1), Error);
  CHECK_THROWS_AS(h1_root_lattice(sys_of("G(4,2,3)"), L), Error);
}

TEST_CASE("word evaluation") {
  const auto& k = k31();
  Cocycle c = shaped_cocycle(k.sys, (CycloNum(1) + I) / CycloNum(2));
  CHECK(is_zero(evaluate_word(c, k.sys, Word{})));
  CHECK(is_zero(evaluate_word(c, k.sys, parse_word("r5^2"))));
  CHECK(is_zero(evaluate_word(c, k.sys, parse_word("(r4 r5)^3"))));
  CHECK(evaluate_word(c, k.sys, parse_word("r5")) == scale((CycloNum(1) + I) / CycloNum(2), k.sys.gens()[4].root));
  // c(r^-1) = -R^-1 c(r)
  const CMat Rinv = inverse(k.sys.matrices()[4]);
  CHECK(evaluate_word(c, k.sys, parse_word("r5^-1")) == scale(CycloNum(-1), Rinv.apply(c.values[4])));
  CHECK(word_matrix(k.sys, parse_word("r1 r1")) == CMat::identity(4));
}

TEST_CASE("lambda constraints for K31") {
  const auto& k = k31();
  auto lc = lamb_constraints(k.sys, k.gamma);
  REQUIRE(lc.allowed.has_value());
  // lambda = (a + b i)/2 with a = b mod 2
  CHECK(*lc.allowed == complex_lattice({(CycloNum(1) + I) / CycloNum(2), CycloNum(1)}, 4));
  CHECK(lc.allows((CycloNum(1) + I) / CycloNum(2)));
  CHECK(lc.allows(CycloNum(0)));
  CHECK(lc.allows(CycloNum(1)));
  CHECK(lc.allows(I));
  CHECK_FALSE(lc.allows(q(1, 2)));
  CHECK_FALSE(lc.allows(I / CycloNum(2)));
  CHECK(lc.elements_used > 0);
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      CHECK(lc.allows((CycloNum(a) + I * b) / CycloNum(2)) == ((a - b) % 2 == 0));
}

TEST_CASE("cocycle well-definedness") {
  const auto& k = k31();
  Cocycle good = shaped_cocycle(k.sys, (CycloNum(1) + I) / CycloNum(2));
  CHECK(cocycle_well_defined(k.sys, good, k.gamma, k.pres));
  CHECK(cocycle_well_defined(k.sys, good, k.gamma));
  Cocycle zero = shaped_cocycle(k.sys, CycloNum(0));
  CHECK(cocycle_well_defined(k.sys, zero, k.gamma));
  CHECK(cocycle_well_defined(k.sys, zero, k.gamma, k.pres));
  Cocycle half = shaped_cocycle(k.sys, q(1, 2));
  CHECK_FALSE(cocycle_well_defined(k.sys, half, k.gamma));
  CHECK_FALSE(cocycle_well_defined(k.sys, half, k.gamma, k.pres));
  Presentation wrong{{parse_word("r1 r2")}};
  CHECK_THROWS_AS(cocycle_well_defined(k.sys, good, k.gamma, wrong), Error);
}

TEST_CASE("coboundaries") {
  const auto& k = k31();
  CHECK(is_coboundary(k.sys, shaped_cocycle(k.sys, CycloNum(0)), k.gamma));
  CHECK_FALSE(is_coboundary(k.sys, shaped_cocycle(k.sys, (CycloNum(1) + I) / CycloNum(2)), k.gamma));
  // c(r_j) = (I - R_j) v for a fixed v
  const CVec v{q(1, 3), I, CycloNum(2) - I, q(-5, 7)};
  Cocycle c;
  for (const auto& R : k.sys.matrices()) c.values.push_back(sub(v, R.apply(v)));
  CHECK(is_coboundary(k.sys, c, k.gamma));
  CHECK(cocycle_well_defined(k.sys, c, k.gamma));
  // a lattice shift of a coboundary is still one
  c.values[2] = add(c.values[2], k.gamma.complex_basis()[0]);
  CHECK(is_coboundary(k.sys, c, k.gamma));
}

TEST_CASE("class scans") {
  const auto& k = k31();
  auto sc = valid_classes(k.sys, k.gamma, 2);
  CHECK(sc.classes == std::vector<CycloNum>{CycloNum(0), (CycloNum(1) + I) / CycloNum(2)});

  auto g623 = sys_of("G(6,2,3)");
  for (const auto& l : build_lattices_s_n_plus_1(g623)) CHECK(valid_classes(g623, l, 2).classes.size() == 1);
  auto g423 = sys_of("G(4,2,3)");
  for (const auto& l : build_lattices_s_n_plus_1(g423)) {
    auto s = valid_classes(g423, l, 2);
    CHECK(s.classes.size() <= 2);
    CHECK(s.classes.size() >= 1);
    CHECK(s.classes[0].is_zero());
  }
}
