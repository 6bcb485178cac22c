#ifndef CRYSREF_INTMAT_HPP
#define CRYSREF_INTMAT_HPP

#include <optional>
#include <vector>

#include "crysref/linalg.hpp"

namespace crysref {

// Row-style Hermite normal form: U * A = H with U unimodular. Nonzero rows of
// H come first; each has a positive pivot strictly right of the previous one,
// and entries above a pivot lie in [0, pivot).
struct RowHnf {
  ZMat h;
  ZMat u;                     // empty unless requested
  std::vector<size_t> pivots; // pivot column of each nonzero row
  size_t rank() const noexcept { return pivots.size(); }
};
RowHnf row_hnf(const ZMat& a, bool want_transform = false);

// Column-style Hermite normal form H = M * U, U unimodular.
struct Hnf {
  ZMat h;
  ZMat u;
};
Hnf hnf(const ZMat& m);

// Smith normal form D = U * M * V with d_1 | d_2 | ..., U and V unimodular.
struct Snf {
  ZMat d;
  ZMat u;
  ZMat v;
  std::vector<Integer> diagonal;  // the min(rows, cols) diagonal entries
};
Snf snf(const ZMat& m);

// Z-basis of {x in Z^cols : A x = 0}, as vectors.
std::vector<ZVec> integer_kernel(const ZMat& a);

// Some x in Z^cols with A x = b, or nullopt.
std::optional<ZVec> solve_integer(const ZMat& a, const ZVec& b);

Integer det(const ZMat& a);

// g = s a + t b with g = gcd(a, b) >= 0.
void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t);

// Scales a rational matrix to integers: returns (den, integer matrix) with den > 0 minimal.
std::pair<Integer, ZMat> clear_denominators(const QMat& m);
QMat to_rational(const ZMat& m);

}  // namespace crysref

#endif
