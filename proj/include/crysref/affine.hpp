#ifndef CRYSREF_AFFINE_HPP
#define CRYSREF_AFFINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "crysref/cohomology.hpp"
#include "crysref/lattice.hpp"

namespace crysref {

// (P, v): x -> P x + v, origin fixed at 0.
struct AffineElement {
  CMat linear;
  CVec translation;

  static AffineElement identity(int n);
  static AffineElement translation_by(const CVec& t);
  CVec apply(const CVec& x) const;
  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.linear == b.linear && a.translation == b.translation;
  }
};

// (P, v)(Q, w) = (PQ, P w + v).
AffineElement compose(const AffineElement& a, const AffineElement& b);
AffineElement invert(const AffineElement& a);

struct AffineReflection {
  bool is_reflection = false;
  CVec mirror_point;  // a point of the mirror: (1 - theta)^-1 v
  CVec root;          // spans the root line of the linear part
  CycloNum theta;
  int order = 0;
};
// Linear part a reflection and v on its root line.
AffineReflection is_affine_reflection(const AffineElement& a, const HermitianForm& form = {});

// W with Lin W generated by sys, Tran W = lattice, and (R_j, c(r_j)) in W.
struct AffineGroupSpec {
  ReflectionSystem linear;
  ZLattice lattice;
  Cocycle cocycle;

  std::vector<AffineElement> reflection_generators() const;
};

AffineGroupSpec semidirect(const ReflectionSystem& sys, const ZLattice& lattice);
// Throws NotInvariant; PreconditionViolated when the cocycle is not well defined.
AffineGroupSpec extension(const ReflectionSystem& sys, const ZLattice& lattice, const Cocycle& c);

enum class Verdict { Yes, No, Undecided };
const char* verdict_name(Verdict v);

struct RGroupReport {
  Verdict verdict = Verdict::Undecided;
  bool split = true;           // cocycle is a coboundary
  bool root_lattice = false;   // lattice equals its root sublattice
  std::optional<Integer> root_index;  // [lattice : root sublattice]
};
RGroupReport is_r_group(const AffineGroupSpec& spec);

int rank_of_translations(const AffineGroupSpec& spec);
bool is_crystallographic(const AffineGroupSpec& spec);

// Real irreducible affine Weyl group from a Cartan matrix a_ij = <alpha_i, alpha_j^vee>,
// viewed over C with translations the coroot lattice. Throws InvalidCartanData.
AffineGroupSpec complexify_weyl(const std::vector<std::vector<int>>& cartan);

// The five kinds of infinite irreducible 1-dimensional r-groups.
enum class OneDimKind { W3, W4, W6, W2Lambda, W2 };
const char* one_dim_name(OneDimKind k);
std::optional<OneDimKind> parse_one_dim_kind(const std::string& s);

struct OneDimGroup {
  OneDimKind kind = OneDimKind::W2;
  CycloNum v{1};
  std::optional<CycloNum> lambda;  // W2Lambda only, reduced into the modular strip
  int N = 1;

  int rotation_order() const;
  AffineGroupSpec spec() const;
};
// Throws PreconditionViolated for v = 0 or real lambda.
OneDimGroup one_dim(OneDimKind kind, const CycloNum& v, const std::optional<CycloNum>& lambda = std::nullopt);

struct MirrorEntry {
  CycloNum point;
  std::vector<int> orders;  // orders of reflections fixing the point, ascending
};
// Mirrors with |p| <= radius, ordered by |p| then (Re, Im).
std::vector<MirrorEntry> one_dim_mirrors(const OneDimGroup& g, const Rational& radius);

}  // namespace crysref

#endif
