#ifndef CRYSREF_GROUP_HPP
#define CRYSREF_GROUP_HPP

#include <optional>
#include <unordered_map>
#include <vector>

#include "crysref/linalg.hpp"
#include "crysref/zmodule.hpp"

namespace crysref {

inline constexpr long long kDefaultClosureCap = 1000000;

// A matrix over Q(zeta_N) stored through its realification: den^-1 * entries,
// with gcd(den, entries) = 1 so storage is canonical.
struct RealMat {
  Integer den{1};
  std::vector<Integer> a;  // D x D row-major, D = n phi(N)

  friend bool operator==(const RealMat& x, const RealMat& y) { return x.den == y.den && x.a == y.a; }
  size_t hash() const noexcept;
};

struct RealMatHash {
  size_t operator()(const RealMat& m) const noexcept { return m.hash(); }
};

// Finite matrix group generated by the given matrices.
class MatrixGroup {
 public:
  MatrixGroup() = default;

  int dim() const noexcept { return n_; }
  int field_order() const noexcept { return N_; }
  const std::vector<CMat>& generators() const noexcept { return gens_; }
  size_t order() const noexcept { return elems_.size(); }
  size_t identity_index() const noexcept { return id_; }

  CMat element(size_t i) const;
  const RealMat& real_element(size_t i) const { return elems_[i]; }
  CycloNum trace(size_t i) const;
  // Generator indices whose product (left to right) is element i.
  std::vector<int> word(size_t i) const;
  std::optional<size_t> find(const CMat& m) const;
  std::optional<size_t> find(const RealMat& m) const;
  size_t multiply(size_t i, size_t j) const;
  size_t inverse(size_t i) const;
  // Index of element(i) * generators()[k].
  size_t times_generator(size_t i, size_t k) const;
  // element(i) applied to a realified vector.
  QVec apply(size_t i, const QVec& x) const;

  RealMat realify(const CMat& m) const;
  RealMat product(const RealMat& x, const RealMat& y) const;

  friend MatrixGroup closure(const std::vector<CMat>& gens, long long cap, int field_order);

 private:
  int n_ = 0, N_ = 1, phi_ = 1;
  std::vector<CMat> gens_;
  std::vector<RealMat> real_gens_;
  std::vector<RealMat> elems_;
  std::vector<long long> parent_;
  std::vector<int> via_;
  std::unordered_map<RealMat, size_t, RealMatHash> index_;
  size_t id_ = 0;
};

// BFS closure; elements sorted canonically. Throws CapExceeded past cap.
// The working field is Q(zeta_M), M = lcm(field_order, entry orders).
MatrixGroup closure(const std::vector<CMat>& gens, long long cap = kDefaultClosureCap, int field_order = 1);

struct ReflectionDatum {
  size_t element;  // index into the group
  CVec root;       // canonical root: first nonzero coordinate is 1
  CycloNum theta;  // eigenvalue on the root line
};

struct MirrorDatum {
  CVec root;  // canonical normal of the mirror
  int m = 0;  // order of the cyclic group of reflections fixing it
  size_t representative = 0;
};

// Canonical representative of the line C v, coordinates in Q(zeta_N)
// (N = 0 means the smallest common order of v).
CVec canonical_line(const CVec& v, int N = 0);

struct CVecHash {
  size_t operator()(const CVec& v) const noexcept;
};

std::vector<ReflectionDatum> reflections_of(const MatrixGroup& g);
std::vector<MirrorDatum> mirrors_of(const MatrixGroup& g);
std::vector<MirrorDatum> mirrors_of(const std::vector<ReflectionDatum>& refl, size_t n);

bool is_essential(const std::vector<CMat>& gens);
bool is_essential(const MatrixGroup& g);
// Commutant of the generators has dimension 1.
bool is_irreducible(const std::vector<CMat>& gens);
bool is_irreducible(const MatrixGroup& g);
size_t commutant_dimension(const std::vector<CMat>& gens);

// Unital ring generated by the given scalars, as a Z-module in Q(zeta_N).
struct TraceRing {
  std::vector<CycloNum> generators;
  ZLattice module;  // over RealStructure(1, N)
  std::vector<CycloNum> zbasis() const;
  bool is_Z() const { return module.rank() == 1; }
};
TraceRing ring_closure(const std::vector<CycloNum>& gens, int N);
TraceRing trace_ring(const MatrixGroup& g);

// Every reflection is conjugate to a power of one of the given generating
// reflections (roots and orders).
bool reflection_conjugacy_diagnostic(const MatrixGroup& g, const std::vector<Reflection>& gens);

}  // namespace crysref

#endif
