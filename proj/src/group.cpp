#include "crysref/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace crysref {

size_t RealMat::hash() const noexcept {
  size_t h = den.hash();
  for (const auto& x : a) hash_combine(h, x.hash());
  return h;
}

namespace {

void normalize(RealMat& m) {
  Integer g = m.den;
  for (const auto& x : m.a) {
    if (g.is_one()) return;
    g = gcd(g, x);
  }
  if (g.is_one()) return;
  m.den = divexact(m.den, g);
  for (auto& x : m.a) x = divexact(x, g);
}

}  // namespace

RealMat MatrixGroup::realify(const CMat& m) const {
  QMat q = crysref::realify(m, N_);
  auto [den, z] = clear_denominators(q);
  RealMat r{den, z.data()};
  normalize(r);
  return r;
}

RealMat MatrixGroup::product(const RealMat& x, const RealMat& y) const {
  const size_t D = static_cast<size_t>(n_ * phi_);
  RealMat p;
  p.den = x.den * y.den;
  p.a.assign(D * D, Integer(0));
  for (size_t i = 0; i < D; ++i)
    for (size_t k = 0; k < D; ++k) {
      const Integer& xv = x.a[i * D + k];
      if (xv.is_zero()) continue;
      for (size_t j = 0; j < D; ++j) {
        const Integer& yv = y.a[k * D + j];
        if (!yv.is_zero()) p.a[i * D + j].add_mul(xv, yv);
      }
    }
  normalize(p);
  return p;
}

CMat MatrixGroup::element(size_t i) const {
  const RealMat& r = elems_[i];
  const size_t D = static_cast<size_t>(n_ * phi_);
  CMat m(n_, n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      // Column 0 of a multiplication block holds the coordinates of the scalar.
      std::vector<Rational> c(phi_);
      for (int k = 0; k < phi_; ++k) c[k] = Rational(r.a[(a * phi_ + k) * D + b * phi_], r.den);
      m(a, b) = CycloNum(N_, c);
    }
  return m;
}

CycloNum MatrixGroup::trace(size_t i) const {
  const RealMat& r = elems_[i];
  const size_t D = static_cast<size_t>(n_ * phi_);
  std::vector<Rational> c(phi_, Rational(0));
  for (int a = 0; a < n_; ++a)
    for (int k = 0; k < phi_; ++k) c[k] += Rational(r.a[(a * phi_ + k) * D + a * phi_], r.den);
  return CycloNum(N_, c);
}

std::vector<int> MatrixGroup::word(size_t i) const {
  std::vector<int> w;
  for (long long cur = static_cast<long long>(i); parent_[cur] >= 0; cur = parent_[cur]) w.push_back(via_[cur]);
  std::reverse(w.begin(), w.end());
  return w;
}

std::optional<size_t> MatrixGroup::find(const RealMat& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<size_t> MatrixGroup::find(const CMat& m) const {
  if (static_cast<int>(m.rows()) != n_ || !m.square()) return std::nullopt;
  return find(realify(m));
}

size_t MatrixGroup::multiply(size_t i, size_t j) const {
  auto k = find(product(elems_[i], elems_[j]));
  if (!k) fail(ErrorCode::PreconditionViolated, "product left the group");
  return *k;
}

size_t MatrixGroup::times_generator(size_t i, size_t k) const {
  auto r = find(product(elems_[i], real_gens_.at(k)));
  if (!r) fail(ErrorCode::PreconditionViolated, "product left the group");
  return *r;
}

QVec MatrixGroup::apply(size_t i, const QVec& x) const {
  const RealMat& r = elems_[i];
  const size_t D = static_cast<size_t>(n_ * phi_);
  if (x.size() != D) fail(ErrorCode::DimensionMismatch, "vector length");
  QVec y(D, Rational(0));
  for (size_t a = 0; a < D; ++a)
    for (size_t b = 0; b < D; ++b)
      if (!r.a[a * D + b].is_zero() && !x[b].is_zero()) y[a] += Rational(r.a[a * D + b]) * x[b];
  for (auto& v : y) v = v / Rational(r.den);
  return y;
}

size_t MatrixGroup::inverse(size_t i) const {
  // In a finite group x^-1 = x^(k-1) where k is the order of x.
  size_t prev = id_, cur = i;
  while (cur != id_) {
    prev = cur;
    cur = multiply(cur, i);
  }
  return prev;
}

MatrixGroup closure(const std::vector<CMat>& gens, long long cap, int field_order) {
  if (gens.empty()) fail(ErrorCode::PreconditionViolated, "closure needs at least one generator");
  MatrixGroup g;
  g.n_ = static_cast<int>(gens[0].rows());
  int N = std::max(1, field_order);
  for (const auto& m : gens) {
    if (!m.square() || static_cast<int>(m.rows()) != g.n_) fail(ErrorCode::DimensionMismatch, "generators must be square of equal size");
    N = std::lcm(N, common_order(m));
  }
  g.N_ = N;
  g.phi_ = euler_phi(N);
  g.gens_ = gens;
  for (const auto& m : gens) g.real_gens_.push_back(g.realify(m));

  std::vector<RealMat> elems;
  std::vector<long long> parent;
  std::vector<int> via;
  std::unordered_map<RealMat, size_t, RealMatHash> index;
  RealMat id = g.realify(CMat::identity(g.n_));
  elems.push_back(id);
  parent.push_back(-1);
  via.push_back(-1);
  index.emplace(id, 0);
  for (size_t head = 0; head < elems.size(); ++head) {
    for (size_t k = 0; k < g.real_gens_.size(); ++k) {
      RealMat y = g.product(elems[head], g.real_gens_[k]);
      if (index.count(y)) continue;
      if (static_cast<long long>(elems.size()) >= cap)
        fail(ErrorCode::CapExceeded, "closure exceeded " + std::to_string(cap) + " elements");
      index.emplace(y, elems.size());
      elems.push_back(std::move(y));
      parent.push_back(static_cast<long long>(head));
      via.push_back(static_cast<int>(k));
    }
  }
  // Canonical order: by denominator, then entries.
  std::vector<size_t> perm(elems.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    if (elems[a].den != elems[b].den) return elems[a].den < elems[b].den;
    return elems[a].a < elems[b].a;
  });
  std::vector<size_t> where(elems.size());
  for (size_t i = 0; i < perm.size(); ++i) where[perm[i]] = i;
  g.elems_.resize(elems.size());
  g.parent_.resize(elems.size());
  g.via_.resize(elems.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    const size_t old = perm[i];
    g.elems_[i] = std::move(elems[old]);
    g.parent_[i] = parent[old] < 0 ? -1 : static_cast<long long>(where[parent[old]]);
    g.via_[i] = via[old];
  }
  for (size_t i = 0; i < g.elems_.size(); ++i) g.index_.emplace(g.elems_[i], i);
  g.id_ = where[0];
  return g;
}

size_t CVecHash::operator()(const CVec& v) const noexcept {
  size_t h = v.size();
  for (const auto& x : v) hash_combine(h, x.hash());
  return h;
}

CVec canonical_line(const CVec& v, int N) {
  if (N == 0) N = common_order(v);
  for (const auto& x : v)
    if (!x.is_zero()) {
      CVec w = scale(x.inverse(), v);
      for (auto& y : w) y = coerce_order(y, N);
      return w;
    }
  fail(ErrorCode::ZeroRoot);
}

std::vector<ReflectionDatum> reflections_of(const MatrixGroup& g) {
  std::vector<ReflectionDatum> out;
  const int n = g.dim();
  const size_t D = static_cast<size_t>(n * euler_phi(g.field_order()));
  for (size_t i = 0; i < g.order(); ++i) {
    if (i == g.identity_index()) continue;
    CycloNum theta = g.trace(i) - CycloNum(n - 1);
    if (theta.is_one() || !theta.norm_sq().is_one() || !root_of_unity_order(theta)) continue;
    const RealMat& r = g.real_element(i);
    ZMat d(D, D);
    for (size_t a = 0; a < D; ++a)
      for (size_t b = 0; b < D; ++b) d(a, b) = (a == b ? r.den : Integer(0)) - r.a[a * D + b];
    if (row_hnf(d).rank() != static_cast<size_t>(euler_phi(g.field_order()))) continue;
    CMat p = g.element(i);
    CMat im = CMat::identity(n) - p;
    CVec root;
    for (int c = 0; c < n && root.empty(); ++c) {
      CVec col = im.column(c);
      if (!is_zero(col)) root = canonical_line(col, g.field_order());
    }
    out.push_back(ReflectionDatum{i, std::move(root), theta});
  }
  return out;
}

std::vector<MirrorDatum> mirrors_of(const std::vector<ReflectionDatum>& refl, size_t n) {
  (void)n;
  std::vector<MirrorDatum> out;
  std::unordered_map<CVec, size_t, CVecHash> at;
  for (const auto& r : refl) {
    auto it = at.find(r.root);
    if (it == at.end()) {
      at.emplace(r.root, out.size());
      out.push_back(MirrorDatum{r.root, 2, r.element});
    } else {
      ++out[it->second].m;
    }
  }
  // Representative: the reflection with eigenvalue exp(2 pi i / m).
  for (auto& md : out) {
    CycloNum want = CycloNum::zeta(md.m);
    for (const auto& r : refl)
      if (r.root == md.root && r.theta == want) md.representative = r.element;
  }
  return out;
}

std::vector<MirrorDatum> mirrors_of(const MatrixGroup& g) {
  return mirrors_of(reflections_of(g), static_cast<size_t>(g.dim()));
}

bool is_essential(const std::vector<CMat>& gens) {
  if (gens.empty()) return false;
  const size_t n = gens[0].rows();
  CMat stacked(gens.size() * n, n);
  for (size_t g = 0; g < gens.size(); ++g) {
    CMat d = CMat::identity(n) - gens[g];
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) stacked(g * n + i, j) = d(i, j);
  }
  return rank(stacked) == n;
}

bool is_essential(const MatrixGroup& g) { return is_essential(g.generators()); }

size_t commutant_dimension(const std::vector<CMat>& gens) {
  if (gens.empty()) return 0;
  const size_t n = gens[0].rows();
  // Unknown X (n x n, index a*n+b); equations (P X - X P)_{ij} = 0.
  CMat eq(gens.size() * n * n, n * n);
  for (size_t g = 0; g < gens.size(); ++g) {
    const CMat& p = gens[g];
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const size_t row = g * n * n + i * n + j;
        for (size_t k = 0; k < n; ++k) {
          if (!p(i, k).is_zero()) eq(row, k * n + j) += p(i, k);
          if (!p(k, j).is_zero()) eq(row, i * n + k) -= p(k, j);
        }
      }
  }
  return n * n - rank(eq);
}

bool is_irreducible(const std::vector<CMat>& gens) { return commutant_dimension(gens) == 1; }
bool is_irreducible(const MatrixGroup& g) { return is_irreducible(g.generators()); }

std::vector<CycloNum> TraceRing::zbasis() const {
  std::vector<CycloNum> out;
  for (const auto& b : module.complex_basis()) out.push_back(b[0]);
  return out;
}

TraceRing ring_closure(const std::vector<CycloNum>& gens, int N) {
  RealStructure s(1, N);
  TraceRing tr;
  for (const auto& x : gens) {
    CycloNum y = coerce_order(x, N);
    if (std::find(tr.generators.begin(), tr.generators.end(), y) == tr.generators.end()) tr.generators.push_back(y);
  }
  std::vector<QMat> mult;
  for (const auto& x : tr.generators) mult.push_back(s.scalar(x));
  ZLattice m = ZLattice::from_generators(s, std::vector<CVec>{CVec{CycloNum(1)}});
  for (int iter = 0; iter < 64; ++iter) {
    ZLattice next = m;
    for (const auto& a : mult) next = sum(next, m.image(a));
    if (next == m) {
      tr.module = m;
      return tr;
    }
    m = next;
  }
  fail(ErrorCode::NoStabilization, "ring generated by the traces is not finitely generated");
}

TraceRing trace_ring(const MatrixGroup& g) {
  std::vector<CycloNum> traces;
  std::unordered_map<CycloNum, bool, CycloHash> seen;
  for (size_t i = 0; i < g.order(); ++i) {
    CycloNum t = g.trace(i);
    if (seen.emplace(t, true).second) traces.push_back(t);
  }
  return ring_closure(traces, g.field_order());
}

bool reflection_conjugacy_diagnostic(const MatrixGroup& g, const std::vector<Reflection>& gens) {
  auto mirrors = mirrors_of(g);
  std::unordered_map<CVec, int, CVecHash> m_of;
  for (const auto& md : mirrors) m_of.emplace(md.root, md.m);
  std::unordered_map<CVec, bool, CVecHash> reached;
  std::deque<CVec> queue;
  for (const auto& r : gens) {
    CVec line = canonical_line(r.root, g.field_order());
    auto it = m_of.find(line);
    if (it == m_of.end() || it->second != r.order) return false;
    if (reached.emplace(line, true).second) queue.push_back(line);
  }
  while (!queue.empty()) {
    CVec cur = queue.front();
    queue.pop_front();
    for (const auto& p : g.generators()) {
      CVec next = canonical_line(p.apply(cur), g.field_order());
      if (reached.emplace(next, true).second) queue.push_back(next);
    }
  }
  for (const auto& md : mirrors)
    if (!reached.count(md.root)) return false;
  return true;
}

}  // namespace crysref
