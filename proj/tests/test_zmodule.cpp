#include <doctest.h>

#include <set>

#include "crysref/errors.hpp"
#include "crysref/intmat.hpp"
#include "crysref/modular.hpp"
#include "crysref/zmodule.hpp"

using namespace crysref;

namespace {

ZMat zm(std::vector<std::vector<long long>> rows) {
  ZMat m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[0].size(); ++j) m(i, j) = Integer(rows[i][j]);
  return m;
}

const CycloNum I = CycloNum::zeta(4);

// Number of points of the big lattice modulo the small one, by walking a box
// of integer combinations of the big basis and reducing modulo the small one.
size_t coset_count(const ZLattice& big, const ZLattice& small, int box) {
  auto b = big.basis();
  std::set<std::vector<Rational>> seen;
  std::vector<int> c(b.size(), -box);
  auto sb = small.basis();
  while (true) {
    QVec v(b[0].size(), Rational(0));
    for (size_t k = 0; k < b.size(); ++k)
      for (size_t t = 0; t < v.size(); ++t) v[t] += Rational(c[k]) * b[k][t];
    // reduce: coordinates in the small basis taken modulo 1
    QMat m(sb.size(), v.size());
    for (size_t r = 0; r < sb.size(); ++r)
      for (size_t t = 0; t < v.size(); ++t) m(r, t) = sb[r][t];
    auto x = solve(m.transpose(), v);
    REQUIRE(x.has_value());
    for (auto& q : *x) q = q.frac();
    seen.insert(*x);
    size_t k = 0;
    while (k < c.size() && c[k] == box) c[k++] = -box;
    if (k == c.size()) break;
    ++c[k];
  }
  return seen.size();
}

}  // namespace

TEST_CASE("Hermite and Smith forms") {
  auto s = snf(zm({{2, -1}, {-1, 2}}));
  CHECK(s.diagonal == std::vector<Integer>{Integer(1), Integer(3)});
  CHECK(s.u * zm({{2, -1}, {-1, 2}}) * s.v == s.d);
  CHECK(abs(det(s.u)) == Integer(1));
  CHECK(abs(det(s.v)) == Integer(1));
  auto h = hnf(ZMat::identity(3));
  CHECK(h.h == ZMat::identity(3));
  CHECK(snf(zm({{2, 0}, {0, 2}})).diagonal == std::vector<Integer>{Integer(2), Integer(2)});
  CHECK(snf(zm({{2, 0}, {0, 3}})).diagonal == std::vector<Integer>{Integer(1), Integer(6)});
  auto r = row_hnf(zm({{4, 6}, {2, 4}}), true);
  CHECK(r.u * zm({{4, 6}, {2, 4}}) == r.h);
  CHECK(r.rank() == 2);
}

TEST_CASE("membership, sums, equality, index") {
  RealStructure s(1, 4);
  CVec v{CycloNum(1) + I};
  auto L = ZLattice::from_generators(s, std::vector<CVec>{v});
  CHECK(member(v, L));
  CHECK_FALSE(member(CVec{CycloNum(1)}, L));

  auto big = ZLattice::from_generators(s, std::vector<CVec>{{CycloNum(1)}, {I}});
  auto small = ZLattice::from_generators(s, std::vector<CVec>{{CycloNum(2)}, {I * 2}});
  REQUIRE(index(big, small).has_value());
  CHECK(*index(big, small) == Integer(4));
  CHECK(coset_count(big, small, 2) == 4);

  auto perm = ZLattice::from_generators(s, std::vector<CVec>{{I + CycloNum(1)}, {I}, {I * 5}});
  CHECK(equal(perm, big));
  CHECK(sum(L, small) == ZLattice::from_generators(s, std::vector<CVec>{{CycloNum(1) + I}, {CycloNum(2)}}));
  CHECK(intersect(L, small) == ZLattice::from_generators(s, std::vector<CVec>{{CycloNum(2) + I * 2}}));
  CHECK_FALSE(index(big, L).has_value());
  CHECK_THROWS_AS(index(small, big), Error);
}

TEST_CASE("lattice intersections with complex lines") {
  RealStructure s(2, 4);
  auto L = ZLattice::ring_span(s, {CycloNum(1), I}, {{CycloNum(1), CycloNum(0)}, {CycloNum(0), CycloNum(1)}});
  CHECK(L.rank() == 4);
  auto l1 = intersect_with_complex_line(L, {CycloNum(1), CycloNum(0)});
  CHECK(l1 == ZLattice::ring_span(s, {CycloNum(1), I}, {{CycloNum(1), CycloNum(0)}}));
  auto z = ZLattice::from_generators(s, std::vector<CVec>{{CycloNum(1), CycloNum(1)}});
  CHECK(intersect_with_complex_line(z, {CycloNum(1), CycloNum(0)}).is_zero());
}

TEST_CASE("preimages") {
  RealStructure s(1, 4);
  auto L = ZLattice::from_generators(s, std::vector<CVec>{{CycloNum(1)}, {I}});
  CHECK(preimage(s, {LinearConstraint{QMat::identity(2), L}}) == L);
  QMat two = Rational(2) * QMat::identity(2);
  CHECK(preimage(s, {LinearConstraint{two, L}}) == L.scaled(CycloNum(Rational(Integer(1), Integer(2)))));
  CHECK_THROWS_AS(preimage(s, std::vector<LinearConstraint>{}), Error);
}

TEST_CASE("quotients and intermediate lattices") {
  RealStructure s(1, 4);
  auto big = ZLattice::from_generators(s, std::vector<CVec>{{CycloNum(1)}, {I}});
  auto small = big.scaled(CycloNum(2));
  auto q = quotient(big, small);
  CHECK(q.invariant_factors == std::vector<Integer>{Integer(2), Integer(2)});
  CHECK(q.order() == Integer(4));
  CHECK(q.coset_reps.size() == 4);
  // subgroups of the Klein four-group: 1 + 3 + 1
  CHECK(enumerate_between(small, big).size() == 5);
  CHECK(enumerate_between(big, big).size() == 1);
  auto huge = big.scaled(CycloNum(1000));
  CHECK_THROWS_AS(enumerate_between(huge, big, {}, 100), Error);
}

TEST_CASE("modular reduction") {
  CHECK(modular_reduce(CycloNum(1), I) == I);
  CHECK(modular_reduce(CycloNum(2), I * 2) == I);
  // [1, e^(i pi/3)] = [1, omega]
  CHECK(modular_reduce(CycloNum(1), CycloNum::zeta(6)) == coerce_order(CycloNum::zeta(3), 6));
  CHECK(in_modular_strip(CycloNum::zeta(3)));
  CHECK_FALSE(in_modular_strip(CycloNum::zeta(6)));
  CHECK_THROWS_AS(modular_reduce(CycloNum(1), CycloNum(3)), Error);
  // brute force: the reduced value is the unique strip point among small unimodular images
  const CycloNum t = CycloNum(3) + I * 2;
  const CycloNum r = modular_reduce(CycloNum(1), t);
  CHECK(in_modular_strip(r));
  int found = 0;
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (int c = -4; c <= 4; ++c)
        for (int d = -4; d <= 4; ++d) {
          if (a * d - b * c != 1) continue;
          CycloNum num = CycloNum(a) * t + CycloNum(b), den = CycloNum(c) * t + CycloNum(d);
          if (den.is_zero()) continue;
          CycloNum u = num / den;
          if (in_modular_strip(u)) {
            CHECK(u == r);
            ++found;
          }
        }
  CHECK(found > 0);
}
