#ifndef CRYSREF_LATTICE_HPP
#define CRYSREF_LATTICE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "crysref/graph.hpp"
#include "crysref/group.hpp"
#include "crysref/zmodule.hpp"

namespace crysref {

// Generating reflections R_1..R_s of a finite group K acting on Q(zeta_N)^n.
class ReflectionSystem {
 public:
  ReflectionSystem() = default;
  ReflectionSystem(int n, int N, std::vector<Reflection> gens, HermitianForm form = {});

  int n() const noexcept { return n_; }
  int N() const noexcept { return N_; }
  int s() const noexcept { return static_cast<int>(gens_.size()); }
  const std::vector<Reflection>& gens() const noexcept { return gens_; }
  const HermitianForm& form() const noexcept { return form_; }
  const std::vector<CMat>& matrices() const noexcept { return mats_; }
  RealStructure structure() const { return RealStructure(n_, N_); }
  LineSystem lines() const { return LineSystem{gens_, form_}; }
  // The system of the first k reflections.
  ReflectionSystem prefix(int k) const;
  // The same reflections over Q(zeta_M), M a multiple of N.
  ReflectionSystem over(int M) const;

  // Closure of the generators, computed once.
  const MatrixGroup& group(long long cap = kDefaultClosureCap) const;
  bool has_group() const;

 private:
  int n_ = 0, N_ = 1;
  std::vector<Reflection> gens_;
  HermitianForm form_;
  std::vector<CMat> mats_;
  struct Cache {
    std::mutex mu;
    std::unique_ptr<MatrixGroup> group;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// S = (I - R_1) + ... + (I - R_n).
struct OperatorS {
  CMat matrix;      // in standard coordinates
  CMat root_basis;  // entry (j, k) = (1 - mu_j) <e_k|e_j> / <e_j|e_j>
  CycloNum det;
};
OperatorS operator_S(const ReflectionSystem& sys);

bool is_invariant(const ZLattice& l, const std::vector<CMat>& gens);
bool is_invariant(const ZLattice& l, const MatrixGroup& g);

// Gamma_j = Gamma intersected with the root line of R_j.
std::vector<ZLattice> line_components(const ZLattice& l, const ReflectionSystem& sys);

// Gamma_1 + ... + Gamma_s. Throws NotInvariant.
ZLattice root_sublattice(const ZLattice& l, const ReflectionSystem& sys);
// Sum over the root lines of every reflection of the group.
ZLattice root_sublattice_all_lines(const ZLattice& l, const ReflectionSystem& sys);

// {v : (I - R_j) v in Gamma_j for all j}, by the constraint solver.
ZLattice dual_star(const ZLattice& l, const ReflectionSystem& sys);
// S^-1 Gamma; requires s = n.
ZLattice dual_star_via_S(const ZLattice& l, const ReflectionSystem& sys);

// (Gamma*)_j for each j, by the intersection formula:
// (1 - theta_j)^-1 Gamma_j  meet  c_jk^-1 (I - R_j) Gamma_k over k != j with c_jk != 0.
std::vector<ZLattice> star_components(const ZLattice& l, const ReflectionSystem& sys);

// A rank-2 lattice in C, e.g. [1, tau]; stored over RealStructure(1, N).
ZLattice complex_lattice(const std::vector<CycloNum>& gens, int N);
// Z-module generated by the ring, as a lattice in C.
ZLattice ring_lattice(const TraceRing& r);
// Orders of the quotient field containing the ring (the ring itself first).
// Only orders in imaginary quadratic fields and Z are supported.
std::vector<ZLattice> over_orders(const TraceRing& r);
bool ring_stable(const ZLattice& delta, const TraceRing& r);

// Path of unit-weight edges from node 0 to each node (BFS); throws PathConditionViolated.
std::vector<std::vector<int>> unit_paths(const ReflectionSystem& sys);
// (I - R_jr) ... (I - R_j2) e_j1 along the given path.
CVec path_vector(const ReflectionSystem& sys, const std::vector<int>& path);
// Delta * v, as a lattice in V.
ZLattice line_lattice(const ZLattice& delta, const CVec& v, RealStructure s);

ZLattice build_root_lattices_case1(const ReflectionSystem& sys, const ZLattice& delta);
// Explicit paths (paths[l] runs from node 0 to node l).
ZLattice build_root_lattices_case1(const ReflectionSystem& sys, const ZLattice& delta,
                                   const std::vector<std::vector<int>>& paths);

// delta1 must be set when the cyclic-product ring is Z.
std::vector<ZLattice> build_root_lattices_case2(const ReflectionSystem& sys,
                                                const std::optional<ZLattice>& delta1 = std::nullopt);

struct SnPlus1Options {
  // Required when the ring is Z; otherwise every over-order of the ring is used.
  std::optional<ZLattice> delta;
  long long quotient_bound = kDefaultQuotientBound;
};
std::vector<ZLattice> build_lattices_s_n_plus_1(const ReflectionSystem& sys, const SnPlus1Options& opt = {});

// Root lattices of K by whichever algorithm applies (s = n).
std::vector<ZLattice> build_root_lattices(const ReflectionSystem& sys, const std::optional<ZLattice>& delta = std::nullopt);

inline constexpr long long kDefaultSearchBudget = 100000;
// mu with mu Gamma = Gamma', if any.
std::optional<CycloNum> lattices_similar(const ZLattice& a, const ZLattice& b, long long budget = kDefaultSearchBudget);
// Groups lattices into similarity classes; returns one representative index per class.
std::vector<size_t> similarity_classes(const std::vector<ZLattice>& ls, long long budget = kDefaultSearchBudget);

struct AdmissibilityReport {
  bool admissible = false;
  TraceRing ring;                      // ring generated by cyclic products
  std::vector<CycloNum> failing;       // cyclic products failing the integrality test
  std::string ring_name;               // "Z", "Z[i]", "Z[w]", "Z[sqrt(-2)]", ...
};
AdmissibilityReport admissible(const ReflectionSystem& sys);

// Name of a rank <= 2 order in an imaginary quadratic field.
std::string ring_name(const TraceRing& r);

}  // namespace crysref

#endif
