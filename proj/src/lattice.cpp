#include "crysref/lattice.hpp"

#include <deque>
#include <unordered_set>

namespace crysref {

namespace {

CMat identity_minus(const CMat& r) { return CMat::identity(r.rows()) - r; }

bool unit_modulus(const CycloNum& c) { return c.norm_sq().is_one(); }

bool real_less(const CycloNum& a, const CycloNum& b) { return sign_re(b - a) > 0; }

// z with z v = w, for w on the line C v.
CycloNum line_coefficient(const CVec& w, const CVec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return w[i] / v[i];
  fail(ErrorCode::ZeroRoot);
}

// {z : z v in L} as a lattice in C.
ZLattice coefficient_lattice(const ZLattice& l, const CVec& v) {
  std::vector<CycloNum> zs;
  for (const auto& w : intersect_with_complex_line(l, v).complex_basis()) zs.push_back(line_coefficient(w, v));
  return complex_lattice(zs, l.structure().N);
}

}  // namespace

ReflectionSystem::ReflectionSystem(int n, int N, std::vector<Reflection> gens, HermitianForm form)
    : n_(n), N_(N), gens_(std::move(gens)), form_(std::move(form)) {
  for (const auto& r : gens_) {
    if (static_cast<int>(r.root.size()) != n_) fail(ErrorCode::DimensionMismatch, "root length differs from n");
    if (is_zero(r.root)) fail(ErrorCode::ZeroRoot);
    mats_.push_back(reflection_matrix(r, form_));
  }
}

ReflectionSystem ReflectionSystem::prefix(int k) const {
  if (k < 0 || k > s()) fail(ErrorCode::IndexOutOfRange, "prefix length");
  return ReflectionSystem(n_, N_, std::vector<Reflection>(gens_.begin(), gens_.begin() + k), form_);
}

ReflectionSystem ReflectionSystem::over(int M) const {
  if (M < 1 || M % N_ != 0) fail(ErrorCode::IncompatibleFieldOrders, "new field order must be a multiple of N");
  return ReflectionSystem(n_, M, gens_, form_);
}

const MatrixGroup& ReflectionSystem::group(long long cap) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->group) cache_->group = std::make_unique<MatrixGroup>(closure(mats_, cap, N_));
  return *cache_->group;
}

bool ReflectionSystem::has_group() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->group != nullptr;
}

OperatorS operator_S(const ReflectionSystem& sys) {
  const int n = sys.n();
  if (sys.s() != n) fail(ErrorCode::WrongGeneratorCount, "S needs exactly n generators");
  OperatorS out;
  out.matrix = CMat(n, n, CycloNum(0));
  for (const auto& r : sys.matrices()) out.matrix = out.matrix + identity_minus(r);
  out.root_basis = CMat(n, n, CycloNum(0));
  const auto& g = sys.gens();
  for (int j = 0; j < n; ++j) {
    const CycloNum ejj = inner(g[j].root, g[j].root, sys.form());
    for (int k = 0; k < n; ++k)
      out.root_basis(j, k) = (CycloNum(1) - g[j].theta) * inner(g[k].root, g[j].root, sys.form()) / ejj;
  }
  out.det = determinant(out.matrix);
  return out;
}

bool is_invariant(const ZLattice& l, const std::vector<CMat>& gens) {
  for (const auto& g : gens)
    if (!(l.image(g) == l)) return false;
  return true;
}

bool is_invariant(const ZLattice& l, const MatrixGroup& g) { return is_invariant(l, g.generators()); }

std::vector<ZLattice> line_components(const ZLattice& l, const ReflectionSystem& sys) {
  std::vector<ZLattice> out;
  for (const auto& r : sys.gens()) out.push_back(intersect_with_complex_line(l, r.root));
  return out;
}

ZLattice root_sublattice(const ZLattice& l, const ReflectionSystem& sys) {
  if (!is_invariant(l, sys.matrices())) fail(ErrorCode::NotInvariant, "lattice is not invariant under the generators");
  ZLattice acc(l.structure());
  for (const auto& c : line_components(l, sys)) acc = sum(acc, c);
  return acc;
}

ZLattice root_sublattice_all_lines(const ZLattice& l, const ReflectionSystem& sys) {
  if (!is_invariant(l, sys.matrices())) fail(ErrorCode::NotInvariant, "lattice is not invariant under the generators");
  ZLattice acc(l.structure());
  for (const auto& m : mirrors_of(sys.group())) acc = sum(acc, intersect_with_complex_line(l, m.root));
  return acc;
}

ZLattice dual_star(const ZLattice& l, const ReflectionSystem& sys) {
  const RealStructure s = l.structure();
  const auto comps = line_components(l, sys);
  std::vector<LinearConstraint> cs;
  for (size_t j = 0; j < comps.size(); ++j) cs.push_back({s.matrix(identity_minus(sys.matrices()[j])), comps[j]});
  return preimage(s, rational_span(l), cs);
}

ZLattice dual_star_via_S(const ZLattice& l, const ReflectionSystem& sys) {
  const OperatorS S = operator_S(sys);
  if (S.det.is_zero()) fail(ErrorCode::SingularS);
  return l.image(inverse(S.matrix));
}

std::vector<ZLattice> star_components(const ZLattice& l, const ReflectionSystem& sys) {
  const auto comps = line_components(l, sys);
  const LineSystem ls = sys.lines();
  std::vector<ZLattice> out;
  for (int j = 0; j < sys.s(); ++j) {
    ZLattice acc = comps[j].scaled((CycloNum(1) - sys.gens()[j].theta).inverse());
    for (int k = 0; k < sys.s(); ++k) {
      if (k == j) continue;
      const CycloNum c = cyclic_product(ls, {j, k});
      if (c.is_zero()) continue;
      acc = intersect(acc, comps[k].image(identity_minus(sys.matrices()[j])).scaled(c.inverse()));
    }
    out.push_back(acc);
  }
  return out;
}

ZLattice complex_lattice(const std::vector<CycloNum>& gens, int N) {
  std::vector<CVec> vs;
  for (const auto& z : gens) vs.push_back(CVec{coerce_order(z, N)});
  return ZLattice::from_generators(RealStructure(1, N), vs);
}

ZLattice ring_lattice(const TraceRing& r) { return r.module; }

std::vector<ZLattice> over_orders(const TraceRing& r) {
  const ZLattice base = ring_lattice(r);
  if (r.is_Z()) return {base};
  const auto b = r.zbasis();
  if (b.size() != 2) fail(ErrorCode::PreconditionViolated, "ring is not an order in a quadratic field");
  // disc = (b1 conj(b2) - conj(b1) b2)^2; the maximal order lies in base / |disc|
  const CycloNum x = b[0] * b[1].conj() - b[0].conj() * b[1];
  const auto disc = (x * x).to_rational();
  if (!disc || disc->den() != Integer(1) || disc->num().is_zero())
    fail(ErrorCode::PreconditionViolated, "ring is not an order in an imaginary quadratic field");
  const CycloNum k(Rational(abs(disc->num())));
  auto is_order = [](const ZLattice& d) {
    const auto e = d.complex_basis();
    for (const auto& u : e)
      for (const auto& v : e)
        if (!d.contains(CVec{u[0] * v[0]})) return false;
    return true;
  };
  return enumerate_between(base, base.scaled(k.inverse()), is_order);
}

bool ring_stable(const ZLattice& delta, const TraceRing& r) {
  for (const auto& z : r.zbasis())
    if (!delta.contains(delta.scaled(z))) return false;
  return true;
}

std::vector<std::vector<int>> unit_paths(const ReflectionSystem& sys) {
  const int s = sys.s();
  const LineSystem ls = sys.lines();
  std::vector<std::vector<int>> path(s);
  std::vector<bool> seen(s, false);
  std::deque<int> q{0};
  seen[0] = true;
  path[0] = {0};
  while (!q.empty()) {
    const int j = q.front();
    q.pop_front();
    for (int k = 0; k < s; ++k) {
      if (seen[k] || !unit_modulus(cyclic_product(ls, {j, k}))) continue;
      seen[k] = true;
      path[k] = path[j];
      path[k].push_back(k);
      q.push_back(k);
    }
  }
  for (int k = 0; k < s; ++k)
    if (!seen[k]) fail(ErrorCode::PathConditionViolated, "node " + std::to_string(k + 1) + " not reachable by |c| = 1 edges");
  return path;
}

CVec path_vector(const ReflectionSystem& sys, const std::vector<int>& path) {
  if (path.empty()) fail(ErrorCode::PreconditionViolated, "empty path");
  CVec v = sys.gens().at(path[0]).root;
  for (size_t i = 1; i < path.size(); ++i) v = identity_minus(sys.matrices().at(path[i])).apply(v);
  return v;
}

ZLattice line_lattice(const ZLattice& delta, const CVec& v, RealStructure s) {
  std::vector<CVec> gens;
  for (const auto& b : delta.complex_basis()) gens.push_back(scale(b[0], v));
  return ZLattice::from_generators(s, gens);
}

ZLattice build_root_lattices_case1(const ReflectionSystem& sys, const ZLattice& delta) {
  return build_root_lattices_case1(sys, delta, unit_paths(sys));
}

ZLattice build_root_lattices_case1(const ReflectionSystem& sys, const ZLattice& delta,
                                   const std::vector<std::vector<int>>& paths) {
  const LineSystem ls = sys.lines();
  const TraceRing ring = cyclic_product_ring(ls, sys.N());
  if (!ring_stable(delta, ring)) fail(ErrorCode::DeltaNotStable);
  if (static_cast<int>(paths.size()) != sys.s()) fail(ErrorCode::PreconditionViolated, "one path per node");
  ZLattice acc(sys.structure());
  for (int l = 0; l < sys.s(); ++l) {
    const auto& p = paths[l];
    if (p.empty() || p.front() != 0 || p.back() != l) fail(ErrorCode::PreconditionViolated, "path must run from node 1");
    for (size_t i = 1; i < p.size(); ++i)
      if (!unit_modulus(cyclic_product(ls, {p[i - 1], p[i]}))) fail(ErrorCode::PathConditionViolated, "edge with |c| != 1");
    acc = sum(acc, line_lattice(delta, path_vector(sys, p), sys.structure()));
  }
  return acc;
}

std::vector<ZLattice> build_root_lattices_case2(const ReflectionSystem& sys, const std::optional<ZLattice>& delta1) {
  const LineSystem ls = sys.lines();
  const int s = sys.s();
  if (s > 1 && !build_graph(ls, 2).is_chain()) fail(ErrorCode::ChainConditionViolated);
  const TraceRing ring = cyclic_product_ring(ls, sys.N());
  ZLattice d1;
  if (delta1) {
    d1 = *delta1;
    if (!ring_stable(d1, ring)) fail(ErrorCode::DeltaNotStable);
  } else {
    if (ring.is_Z()) fail(ErrorCode::PreconditionViolated, "ring is Z: tau required");
    d1 = ring_lattice(ring);
  }
  std::vector<CVec> vecs;
  for (int l = 0; l < s; ++l) {
    std::vector<int> p(l + 1);
    for (int i = 0; i <= l; ++i) p[i] = i;
    vecs.push_back(path_vector(sys, p));
  }
  std::vector<CycloNum> cs;
  for (int l = 1; l < s; ++l) cs.push_back(cyclic_product(ls, {l - 1, l}));

  std::vector<ZLattice> out;
  std::unordered_set<ZLattice, ZLatticeHash> seen;
  std::vector<ZLattice> tower{d1};
  auto stable = [&](const ZLattice& d) { return ring_stable(d, ring); };
  std::function<void()> rec = [&]() {
    const size_t l = tower.size();
    if (static_cast<int>(l) == s) {
      ZLattice acc(sys.structure());
      for (int i = 0; i < s; ++i) acc = sum(acc, line_lattice(tower[i], vecs[i], sys.structure()));
      if (seen.insert(acc).second) out.push_back(acc);
      return;
    }
    const ZLattice prev = tower.back();
    for (const auto& d : enumerate_between(prev, prev.scaled(cs[l - 1].inverse()), stable)) {
      tower.push_back(d);
      rec();
      tower.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<ZLattice> build_root_lattices(const ReflectionSystem& sys, const std::optional<ZLattice>& delta) {
  const LineSystem ls = sys.lines();
  const TraceRing ring = cyclic_product_ring(ls, sys.N());
  bool case1 = true;
  try {
    unit_paths(sys);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PathConditionViolated) throw;
    case1 = false;
  }
  if (case1) {
    ZLattice d;
    if (delta) d = *delta;
    else if (ring.is_Z()) fail(ErrorCode::PreconditionViolated, "ring is Z: tau required");
    else d = ring_lattice(ring);
    return {build_root_lattices_case1(sys, d)};
  }
  return build_root_lattices_case2(sys, delta);
}

std::vector<ZLattice> build_lattices_s_n_plus_1(const ReflectionSystem& sys, const SnPlus1Options& opt) {
  const int n = sys.n();
  if (sys.s() != n + 1) fail(ErrorCode::WrongGeneratorCount, "need n + 1 generators");
  const ReflectionSystem sub = sys.prefix(n);
  if (!is_irreducible(sub.matrices())) fail(ErrorCode::SubsystemReducible);
  const TraceRing ring = cyclic_product_ring(sys.lines(), sys.N());
  std::vector<ZLattice> deltas;
  if (opt.delta) deltas = {*opt.delta};
  else if (ring.is_Z()) fail(ErrorCode::PreconditionViolated, "ring is Z: tau required");
  else deltas = over_orders(ring);

  const CMat last = sys.matrices()[n];
  std::vector<ZLattice> out;
  std::unordered_set<ZLattice, ZLatticeHash> seen;
  std::vector<ZLattice> roots;
  for (const auto& delta : deltas)
    for (auto& lam : build_root_lattices(sub, delta)) roots.push_back(std::move(lam));
  for (const auto& lam : roots) {
    const auto comps = line_components(lam, sub);
    const ZLattice star = dual_star_via_S(lam, sub);
    auto keep = [&](const ZLattice& g) {
      if (!(g.image(last) == g)) return false;
      for (int j = 0; j < n; ++j)
        if (!(intersect_with_complex_line(g, sub.gens()[j].root) == comps[j])) return false;
      return true;
    };
    for (const auto& g : enumerate_between(lam, star, keep, opt.quotient_bound))
      if (seen.insert(g).second) out.push_back(g);
  }
  return out;
}

std::optional<CycloNum> lattices_similar(const ZLattice& a, const ZLattice& b, long long budget) {
  if (!(a.structure() == b.structure())) fail(ErrorCode::StructureMismatch);
  if (a.rank() != b.rank()) return std::nullopt;
  if (a.is_zero()) return CycloNum(1);
  const CVec v = a.complex_basis()[0];
  const ZLattice da = coefficient_lattice(a, v), db = coefficient_lattice(b, v);
  if (da.rank() != db.rank()) return std::nullopt;
  auto norm = [](const CycloNum& z) { return z.norm_sq(); };
  auto reduce = [&](std::vector<CycloNum> bs) {
    if (bs.size() == 2) {
      if (real_less(norm(bs[1]), norm(bs[0]))) std::swap(bs[0], bs[1]);
      for (;;) {
        const CycloNum x = (bs[1] * bs[0].conj()).twice_real() / (CycloNum(2) * norm(bs[0]));
        const Integer q = floor_re(x + CycloNum(Rational(1, 2)));
        bs[1] = bs[1] - CycloNum(q) * bs[0];
        if (real_less(norm(bs[1]), norm(bs[0]))) std::swap(bs[0], bs[1]);
        else break;
      }
    }
    return bs;
  };
  if (da.rank() > 2) fail(ErrorCode::SearchBudgetExceeded, "coefficient lattice of rank > 2");
  const auto ra = reduce(da.complex_basis().size() == 2 ? std::vector<CycloNum>{da.complex_basis()[0][0], da.complex_basis()[1][0]}
                                                        : std::vector<CycloNum>{da.complex_basis()[0][0]});
  std::vector<CycloNum> rb;
  for (const auto& x : db.complex_basis()) rb.push_back(x[0]);
  rb = reduce(rb);
  std::vector<CycloNum> cands = {rb[0]};
  if (rb.size() == 2) cands = {rb[0], rb[1], rb[0] + rb[1], rb[0] - rb[1]};
  const CycloNum alpha = ra[0], target = norm(rb[0]);
  long long spent = 0;
  for (const auto& w : cands) {
    if (!(norm(w) == target)) continue;
    for (const CycloNum& sgn : {CycloNum(1), CycloNum(-1)}) {
      if (++spent > budget) fail(ErrorCode::SearchBudgetExceeded);
      const CycloNum mu = sgn * w / alpha;
      if (a.scaled(mu) == b) return mu;
    }
  }
  return std::nullopt;
}

std::vector<size_t> similarity_classes(const std::vector<ZLattice>& ls, long long budget) {
  std::vector<size_t> reps;
  for (size_t i = 0; i < ls.size(); ++i) {
    bool fresh = true;
    for (size_t r : reps)
      if (lattices_similar(ls[r], ls[i], budget)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(i);
  }
  return reps;
}

std::string ring_name(const TraceRing& r) {
  const int rk = r.module.rank();
  if (rk == 1) return "Z";
  if (rk != 2) return "order of rank " + std::to_string(rk);
  const auto b = r.zbasis();
  const auto c = r.module.coordinates(realify(CycloNum(1), r.module.structure().N));
  if (!c) return "order of rank 2";
  Integer g, s, t;
  ext_gcd((*c)[0], (*c)[1], g, s, t);
  const CycloNum z = CycloNum(-t) * b[0] + CycloNum(s) * b[1];
  const auto d = (z - z.conj()).pow(2).to_rational();
  if (!d || !d->is_integer() || d->sign() >= 0) return "real order of rank 2";
  const Integer D = d->num();
  if (D == Integer(-4)) return "Z[i]";
  if (D == Integer(-3)) return "Z[w]";
  if (divides(Integer(4), D)) return "Z[sqrt(" + divexact(D, Integer(4)).to_string() + ")]";
  return "Z[(1+sqrt(" + D.to_string() + "))/2]";
}

AdmissibilityReport admissible(const ReflectionSystem& sys) {
  AdmissibilityReport rep;
  const LineSystem ls = sys.lines();
  std::vector<CycloNum> prods;
  for (int j = 0; j < sys.s(); ++j) prods.push_back(cyclic_product(ls, {j}));
  for (int j = 0; j < sys.s(); ++j)
    for (int k = j + 1; k < sys.s(); ++k) prods.push_back(cyclic_product(ls, {j, k}));
  for (const auto& cyc : simple_cycles(ls, sys.s())) {
    prods.push_back(cyclic_product(ls, cyc));
    std::vector<int> rev(cyc.rbegin(), cyc.rend());
    prods.push_back(cyclic_product(ls, rev));
  }
  for (const auto& p : prods)
    if (!is_imag_quadratic_integer(p)) rep.failing.push_back(p);
  try {
    rep.ring = ring_closure(prods, sys.N());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoStabilization) throw;
    return rep;
  }
  rep.ring_name = ring_name(rep.ring);
  bool imaginary = rep.ring.module.rank() == 1;
  if (rep.ring.module.rank() == 2)
    for (const auto& z : rep.ring.zbasis())
      if (sign_im(z) != 0) imaginary = true;
  rep.admissible = rep.failing.empty() && rep.ring.module.rank() <= 2 && imaginary;
  return rep;
}

}  // namespace crysref
