#ifndef CRYSREF_GRAPH_HPP
#define CRYSREF_GRAPH_HPP

#include <vector>

#include "crysref/group.hpp"
#include "crysref/linalg.hpp"

namespace crysref {

// Lines with multiplicities, each carried by a reflection (root, eigenvalue, order).
struct LineSystem {
  std::vector<Reflection> lines;
  HermitianForm form;

  size_t size() const noexcept { return lines.size(); }
};

// c_{j1..jd} = h_{j1..jd} * prod (1 - theta_{jl}) with
// h = prod <e_jl | e_j(l+1)> / prod <e_jl | e_jl>, indices taken cyclically.
CycloNum cyclic_product(const LineSystem& sys, const std::vector<int>& indices);

inline constexpr int kDefaultCycleBound = 6;

struct GraphNode {
  int id;
  int m;
  CycloNum theta;
};
struct GraphEdge {
  int j, k;
  CycloNum weight;  // c_jk
};
struct GraphCycle {
  std::vector<int> nodes;  // orientation: starts at the smallest node, second < last
  CycloNum weight;         // c_sigma in this orientation
  CycloNum reversed;       // c_sigma^-1
};

struct GroupGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::vector<GraphCycle> cycles;  // simple cycles of length >= 3, up to the bound
  int cycle_bound = kDefaultCycleBound;
  bool truncated = false;          // longer simple cycles exist

  const GraphEdge* edge(int j, int k) const;
  bool is_chain() const;  // edges exactly (j, j+1)
};

GroupGraph build_graph(const LineSystem& sys, int cycle_bound = kDefaultCycleBound);

// Sum over cycle covers: a fixed point j contributes c_j, an edge -c_jk, and a
// longer cycle (-1)^(d-1) c_sigma in each orientation.
CycloNum det_S_from_graph(const GroupGraph& g);

// All simple cyclic products agree (pairs and every simple cycle, both orientations).
bool line_systems_isometric(const LineSystem& a, const LineSystem& b);

// lambda_j with Gram({lambda_j e_j}) = Gram({e'_j}); lambda_t = 1.
std::vector<CycloNum> rescale_factors(const LineSystem& a, const LineSystem& b, int t = 0);

// Gram matrix <e_j | e_k>.
CMat gram_matrix(const LineSystem& sys);

// Unital ring generated by all simple cyclic products.
TraceRing cyclic_product_ring(const LineSystem& sys, int N);

// All simple cycles (length >= 3) of the overlap graph, each once.
std::vector<std::vector<int>> simple_cycles(const LineSystem& sys, int max_len);

}  // namespace crysref

#endif
