#ifndef CRYSREF_SPECFILE_HPP
#define CRYSREF_SPECFILE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crysref/cohomology.hpp"
#include "crysref/lattice.hpp"

namespace crysref {

struct GeneratorSpec {
  std::vector<std::string> root;     // scalar expressions, one per coordinate
  int order = 2;                     // m; theta defaults to exp(2 pi i / m)
  std::optional<std::string> theta;  // explicit eigenvalue on the root
};

struct SpecParameters {
  std::optional<std::string> tau;     // Delta = [1, tau] when the ring is Z
  std::optional<std::string> lambda;  // cocycle value c(r_(n+1)) = lambda e_(n+1)
  std::optional<int> class_denominator;
  std::optional<long long> closure_cap;
  std::optional<long long> quotient_bound;
  std::optional<int> cycle_bound;
  std::optional<long long> search_budget;
  std::optional<std::string> radius;
};

// A group given by generating reflections, with optional lattice and presentation.
struct SpecFile {
  std::string name;
  int field_order = 1;
  int dim = 0;
  std::vector<GeneratorSpec> generators;
  std::optional<std::vector<std::vector<std::string>>> gram;
  std::optional<std::vector<std::vector<std::string>>> lattice;  // Z-generators of a lattice
  std::vector<std::string> presentation;                        // relator words
  SpecParameters parameters;
};

SpecFile parse_spec(std::string_view json_text);
SpecFile load_spec(const std::string& path);
std::string dump_spec(const SpecFile& spec);

ReflectionSystem to_system(const SpecFile& spec);
std::optional<ZLattice> spec_lattice(const SpecFile& spec);
Presentation spec_presentation(const SpecFile& spec);

}  // namespace crysref

#endif
