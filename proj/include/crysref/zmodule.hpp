#ifndef CRYSREF_ZMODULE_HPP
#define CRYSREF_ZMODULE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crysref/intmat.hpp"
#include "crysref/linalg.hpp"

namespace crysref {

// Q(zeta_N)^n viewed as Q^(n phi(N)); complex coordinate i occupies the
// rational coordinates [i phi, (i+1) phi) in the power basis.
struct RealStructure {
  int n = 1;
  int N = 1;

  RealStructure() = default;
  RealStructure(int n_, int N_) : n(n_), N(N_) {}
  int phi() const { return euler_phi(N); }
  int dim() const { return n * phi(); }

  QVec to_real(const CVec& v) const;
  CVec to_complex(const QVec& x) const;
  QMat matrix(const CMat& m) const;
  // Multiplication by a scalar on every complex coordinate.
  QMat scalar(const CycloNum& z) const;

  friend bool operator==(const RealStructure& a, const RealStructure& b) { return a.n == b.n && a.N == b.N; }
};

// Finitely generated Z-submodule of Q^d, stored as (1/den) * rows of an
// integer row-HNF matrix. Canonical: equal lattices have equal storage.
class ZLattice {
 public:
  ZLattice() = default;
  explicit ZLattice(RealStructure s);  // zero lattice

  static ZLattice from_generators(RealStructure s, const std::vector<QVec>& gens);
  static ZLattice from_generators(RealStructure s, const std::vector<CVec>& gens);
  // Sum over v and ring generators d of Z * d * v, e.g. [1, i] e_1 + [1, i] e_2.
  static ZLattice ring_span(RealStructure s, const std::vector<CycloNum>& ring, const std::vector<CVec>& vecs);

  const RealStructure& structure() const noexcept { return s_; }
  int rank() const noexcept { return static_cast<int>(h_.rows()); }
  bool is_zero() const noexcept { return h_.rows() == 0; }
  const Integer& denominator() const noexcept { return den_; }
  const ZMat& numerators() const noexcept { return h_; }
  const std::vector<size_t>& pivots() const noexcept { return piv_; }
  std::vector<QVec> basis() const;
  std::vector<CVec> complex_basis() const;
  QMat basis_matrix() const;  // rank x dim, rows are basis vectors

  bool contains(const QVec& v) const;
  bool contains(const CVec& v) const { return contains(s_.to_real(v)); }
  bool contains(const ZLattice& sub) const;
  // Integer coordinates of v in basis(), if v lies in the lattice.
  std::optional<ZVec> coordinates(const QVec& v) const;

  ZLattice image(const QMat& a) const;
  ZLattice image(const CMat& a) const { return image(s_.matrix(a)); }
  ZLattice scaled(const CycloNum& z) const { return image(s_.scalar(z)); }

  friend bool operator==(const ZLattice& a, const ZLattice& b) {
    return a.s_ == b.s_ && a.den_ == b.den_ && a.h_ == b.h_;
  }
  size_t hash() const noexcept;
  std::string to_string() const;

 private:
  void canonicalize(const ZMat& rows, Integer den);
  RealStructure s_;
  Integer den_{1};
  ZMat h_;
  std::vector<size_t> piv_;
};

struct ZLatticeHash {
  size_t operator()(const ZLattice& l) const noexcept { return l.hash(); }
};

ZLattice sum(const ZLattice& a, const ZLattice& b);
ZLattice intersect(const ZLattice& a, const ZLattice& b);
bool equal(const ZLattice& a, const ZLattice& b);
bool member(const CVec& v, const ZLattice& l);
// [big : small]; nullopt means infinite (smaller rank). Throws NotASublattice.
std::optional<Integer> index(const ZLattice& big, const ZLattice& small);

// Rational basis (rows) of the Q-span of the lattice.
std::vector<QVec> rational_span(const ZLattice& l);

// L intersected with the Q-span of the given vectors.
ZLattice intersect_with_subspace(const ZLattice& l, const std::vector<QVec>& span);
// L intersected with the line C e (its realification has dimension phi(N)).
ZLattice intersect_with_complex_line(const ZLattice& l, const CVec& e);

struct LinearConstraint {
  QMat a;          // maps the domain space into the target's space
  ZLattice target; // require a v in target
};
// {v in span(domain) : a_j v in target_j for all j}. The domain is a list of
// rational vectors; an empty list means the whole space of structure s.
ZLattice preimage(RealStructure s, const std::vector<QVec>& domain, const std::vector<LinearConstraint>& cs);
ZLattice preimage(RealStructure s, const std::vector<LinearConstraint>& cs);

struct AbelianQuotient {
  std::vector<Integer> invariant_factors;  // entries > 1, each dividing the next
  std::vector<QVec> generators;            // generator i has order invariant_factors[i]
  std::vector<CVec> coset_reps;            // filled when the order is at most the bound
  Integer order() const;
};
inline constexpr long long kDefaultQuotientBound = 10000;
AbelianQuotient quotient(const ZLattice& big, const ZLattice& small, long long rep_bound = kDefaultQuotientBound);

// All lattices small <= L <= big (optionally filtered), ordered by index over
// small then canonical form.
std::vector<ZLattice> enumerate_between(const ZLattice& small, const ZLattice& big,
                                        const std::function<bool(const ZLattice&)>& keep = {},
                                        long long bound = kDefaultQuotientBound);

}  // namespace crysref

#endif
