#ifndef CRYSREF_CATALOG_HPP
#define CRYSREF_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crysref/specfile.hpp"

namespace crysref {

// Where an expected value comes from: a published statement, or a computation
// checked in the test suite against an independent route.
enum class Source { Reference, Computed };
const char* source_name(Source s);

template <class T>
struct Expected {
  T value;
  Source source = Source::Computed;
  std::string note;
};

struct ExpectedValues {
  std::optional<Expected<std::string>> det_S;       // scalar expression
  std::optional<Expected<std::string>> trace_ring;  // ring_name() form
  std::optional<Expected<long long>> order;
  std::optional<Expected<int>> lattices_raw;        // builder output count
  std::optional<Expected<int>> lattice_classes;     // up to similarity
  std::optional<Expected<std::vector<long long>>> h1_factors;
  std::optional<Expected<bool>> admissible;
  std::optional<Expected<bool>> non_semidirect;
  std::optional<Expected<int>> cocycle_classes;     // valid_classes with D = 2
};

enum class Family { Real, Imprimitive, Exceptional, OneDim };

struct GroupSpec {
  std::string name;
  int shephard_todd = 0;  // 0 when not applicable
  Family family = Family::Real;
  int dim = 0;
  int field_order = 1;
  SpecFile spec;               // empty generators for metadata-only entries
  bool has_data = true;
  bool closure_feasible = true;
  ExpectedValues expected;
};

const GroupSpec& get_group(std::string_view name);
std::vector<std::string> list_groups();
const std::vector<GroupSpec>& catalog();

}  // namespace crysref

#endif
