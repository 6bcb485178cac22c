#include "crysref/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace crysref {

CycloNum cyclic_product(const LineSystem& sys, const std::vector<int>& idx) {
  if (idx.empty()) fail(ErrorCode::IndexOutOfRange, "empty index sequence");
  for (int j : idx)
    if (j < 0 || j >= static_cast<int>(sys.size())) fail(ErrorCode::IndexOutOfRange, "line index " + std::to_string(j));
  CycloNum num(1), den(1);
  const size_t d = idx.size();
  for (size_t l = 0; l < d; ++l) {
    const auto& a = sys.lines[idx[l]];
    const auto& b = sys.lines[idx[(l + 1) % d]];
    num *= inner(a.root, b.root, sys.form);
    if (num.is_zero()) return CycloNum(0);
    den *= inner(a.root, a.root, sys.form);
    num *= CycloNum(1) - a.theta;
  }
  if (den.is_zero()) fail(ErrorCode::ZeroRoot);
  return num / den;
}

CMat gram_matrix(const LineSystem& sys) {
  const size_t s = sys.size();
  CMat g(s, s);
  for (size_t j = 0; j < s; ++j)
    for (size_t k = 0; k < s; ++k) g(j, k) = inner(sys.lines[j].root, sys.lines[k].root, sys.form);
  return g;
}

namespace {

std::vector<std::vector<bool>> adjacency(const CMat& gram) {
  const size_t s = gram.rows();
  std::vector<std::vector<bool>> adj(s, std::vector<bool>(s, false));
  for (size_t j = 0; j < s; ++j)
    for (size_t k = 0; k < s; ++k) adj[j][k] = j != k && !gram(j, k).is_zero();
  return adj;
}

// Simple cycles of length 3..max_len, each once; sets *longer when a cycle
// beyond max_len exists.
std::vector<std::vector<int>> cycles_of(const std::vector<std::vector<bool>>& adj, int max_len, bool* longer) {
  const int s = static_cast<int>(adj.size());
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<bool> used(s, false);
  std::function<void(int, int)> dfs = [&](int start, int u) {
    for (int v = start; v < s; ++v) {
      if (!adj[u][v]) continue;
      if (v == start) {
        if (path.size() >= 3 && path[1] < path.back()) {
          if (static_cast<int>(path.size()) <= max_len) out.push_back(path);
          else if (longer) *longer = true;
        }
        continue;
      }
      if (used[v]) continue;
      used[v] = true;
      path.push_back(v);
      dfs(start, v);
      path.pop_back();
      used[v] = false;
    }
  };
  for (int start = 0; start < s; ++start) {
    path = {start};
    used.assign(s, false);
    used[start] = true;
    dfs(start, start);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

std::vector<std::vector<int>> simple_cycles(const LineSystem& sys, int max_len) {
  return cycles_of(adjacency(gram_matrix(sys)), max_len, nullptr);
}

const GraphEdge* GroupGraph::edge(int j, int k) const {
  if (j > k) std::swap(j, k);
  for (const auto& e : edges)
    if (e.j == j && e.k == k) return &e;
  return nullptr;
}

bool GroupGraph::is_chain() const {
  for (const auto& e : edges)
    if (e.k != e.j + 1) return false;
  return true;
}

GroupGraph build_graph(const LineSystem& sys, int cycle_bound) {
  GroupGraph g;
  g.cycle_bound = cycle_bound;
  const int s = static_cast<int>(sys.size());
  for (int j = 0; j < s; ++j) g.nodes.push_back(GraphNode{j, sys.lines[j].order, sys.lines[j].theta});
  CMat gram = gram_matrix(sys);
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k)
      if (!gram(j, k).is_zero()) g.edges.push_back(GraphEdge{j, k, cyclic_product(sys, {j, k})});
  bool longer = false;
  for (auto& c : cycles_of(adjacency(gram), cycle_bound, &longer)) {
    std::vector<int> rev(c.rbegin(), c.rend());
    CycloNum w = cyclic_product(sys, c), r = cyclic_product(sys, rev);
    g.cycles.push_back(GraphCycle{std::move(c), w, r});
  }
  g.truncated = longer;
  return g;
}

CycloNum det_S_from_graph(const GroupGraph& g) {
  if (g.truncated) fail(ErrorCode::CycleBoundExceeded, "graph has simple cycles longer than " + std::to_string(g.cycle_bound));
  const int s = static_cast<int>(g.nodes.size());
  std::vector<bool> used(s, false);
  std::function<CycloNum(int)> rec = [&](int u) -> CycloNum {
    while (u < s && used[u]) ++u;
    if (u == s) return CycloNum(1);
    CycloNum total;
    used[u] = true;
    total += (CycloNum(1) - g.nodes[u].theta) * rec(u + 1);
    for (const auto& e : g.edges) {
      int v = e.j == u ? e.k : (e.k == u ? e.j : -1);
      if (v < 0 || used[v]) continue;
      used[v] = true;
      total -= e.weight * rec(u + 1);
      used[v] = false;
    }
    for (const auto& c : g.cycles) {
      if (c.nodes[0] != u) continue;  // u is the smallest free node, cycles start at their minimum
      bool free = true;
      for (size_t i = 1; i < c.nodes.size(); ++i) free = free && !used[c.nodes[i]];
      if (!free) continue;
      for (size_t i = 1; i < c.nodes.size(); ++i) used[c.nodes[i]] = true;
      CycloNum w = c.weight + c.reversed;
      if (c.nodes.size() % 2 == 0) w = -w;
      total += w * rec(u + 1);
      for (size_t i = 1; i < c.nodes.size(); ++i) used[c.nodes[i]] = false;
    }
    used[u] = false;
    return total;
  };
  return rec(0);
}

bool line_systems_isometric(const LineSystem& a, const LineSystem& b) {
  if (a.size() != b.size()) return false;
  const int s = static_cast<int>(a.size());
  for (int j = 0; j < s; ++j)
    if (!(cyclic_product(a, {j}) == cyclic_product(b, {j}))) return false;
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k)
      if (!(cyclic_product(a, {j, k}) == cyclic_product(b, {j, k}))) return false;
  auto ca = simple_cycles(a, s), cb = simple_cycles(b, s);
  if (ca != cb) return false;
  for (const auto& c : ca) {
    if (!(cyclic_product(a, c) == cyclic_product(b, c))) return false;
    std::vector<int> rev(c.rbegin(), c.rend());
    if (!(cyclic_product(a, rev) == cyclic_product(b, rev))) return false;
  }
  return true;
}

std::vector<CycloNum> rescale_factors(const LineSystem& a, const LineSystem& b, int t) {
  const int s = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != s) fail(ErrorCode::DimensionMismatch, "line systems differ in size");
  if (t < 0 || t >= s) fail(ErrorCode::IndexOutOfRange, "base index");
  CMat ga = gram_matrix(a), gb = gram_matrix(b);
  std::vector<CycloNum> lam(s);
  std::vector<bool> done(s, false);
  lam[t] = CycloNum(1);
  done[t] = true;
  std::deque<int> q{t};
  while (!q.empty()) {
    int j = q.front();
    q.pop_front();
    for (int k = 0; k < s; ++k) {
      if (done[k] || ga(j, k).is_zero()) continue;
      // lambda_j conj(lambda_k) <e_j|e_k> = <e'_j|e'_k>.
      lam[k] = gb(k, j) / (lam[j].conj() * ga(k, j));
      done[k] = true;
      q.push_back(k);
    }
  }
  for (int j = 0; j < s; ++j)
    if (!done[j]) fail(ErrorCode::DisconnectedOverlapGraph, "line " + std::to_string(j) + " unreachable from base");
  for (int j = 0; j < s; ++j)
    for (int k = 0; k < s; ++k)
      if (!(lam[j] * lam[k].conj() * ga(j, k) == gb(j, k)))
        fail(ErrorCode::PreconditionViolated, "rescaled Gram matrices differ");
  return lam;
}

TraceRing cyclic_product_ring(const LineSystem& sys, int N) {
  const int s = static_cast<int>(sys.size());
  std::vector<CycloNum> gens;
  for (int j = 0; j < s; ++j) gens.push_back(cyclic_product(sys, {j}));
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) {
      CycloNum c = cyclic_product(sys, {j, k});
      if (!c.is_zero()) gens.push_back(c);
    }
  for (const auto& c : simple_cycles(sys, s)) {
    gens.push_back(cyclic_product(sys, c));
    std::vector<int> rev(c.rbegin(), c.rend());
    gens.push_back(cyclic_product(sys, rev));
  }
  return ring_closure(gens, N);
}

}  // namespace crysref
