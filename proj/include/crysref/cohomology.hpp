#ifndef CRYSREF_COHOMOLOGY_HPP
#define CRYSREF_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crysref/lattice.hpp"

namespace crysref {

// Element of the free group on r_1..r_s: letters (0-based index, exponent +-1).
struct Word {
  std::vector<std::pair<int, int>> letters;

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
};

// Grammar: word := factor*, factor := atom ('^' integer)?, atom := 'r' k | '(' word ')'.
// Generators are 1-based in text. Whitespace is ignored.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);
Word power(const Word& w, long long e);

// Values c(r_1), ..., c(r_s).
struct Cocycle {
  std::vector<CVec> values;
};

struct Presentation {
  std::vector<Word> relators;
};

struct H1Result {
  std::vector<Integer> invariant_factors;  // > 1, each dividing the next
  Integer order{1};
};

// Invariant factors of the integer matrix of S on a Z-basis of a root lattice.
H1Result h1_root_lattice(const ReflectionSystem& sys, const ZLattice& lambda);

// Linear part of the word.
CMat word_matrix(const ReflectionSystem& sys, const Word& w);
// c(w) by c(uv) = c(u) + Lin(u) c(v) and c(r^-1) = -R^-1 c(r).
CVec evaluate_word(const Cocycle& c, const ReflectionSystem& sys, const Word& w);

// Shape c(r_1) = ... = c(r_n) = 0, c(r_(n+1)) = lambda e_(n+1).
Cocycle shaped_cocycle(const ReflectionSystem& sys, const CycloNum& lambda);

struct LambConstraints {
  std::vector<CVec> vectors;       // distinct nonzero u = (I - R P R^-1) e_(n+1)
  std::optional<ZLattice> allowed; // {lambda : lambda u in Gamma for all u}; none means unconstrained
  size_t elements_used = 0;        // number of P in K' with R P R^-1 in K'
  bool allows(const CycloNum& lambda) const;
};
LambConstraints lamb_constraints(const ReflectionSystem& sys, const ZLattice& gamma);

// Relators must map to the identity (checked; PreconditionViolated otherwise).
bool cocycle_well_defined(const ReflectionSystem& sys, const Cocycle& c, const ZLattice& gamma,
                          const Presentation& pres);
// Closure of the group carrying values modulo gamma; false on a disagreeing collision.
bool cocycle_well_defined(const ReflectionSystem& sys, const Cocycle& c, const ZLattice& gamma);

// Exists v with c(r_j) - (I - R_j) v in gamma for all j.
bool is_coboundary(const ReflectionSystem& sys, const Cocycle& c, const ZLattice& gamma);

struct ClassScan {
  std::vector<CycloNum> candidates;  // lambda scanned: coset reps of (1/D) Delta / Delta
  std::vector<CycloNum> valid;       // those giving well-defined cocycles
  std::vector<CycloNum> classes;     // one lambda per cohomology class among the valid ones
};
// Delta = {z : z e_(n+1) in gamma}.
ClassScan valid_classes(const ReflectionSystem& sys, const ZLattice& gamma, int D = 2);

}  // namespace crysref

#endif
