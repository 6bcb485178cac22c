#include "crysref/affine.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "crysref/modular.hpp"

namespace crysref {

AffineElement AffineElement::identity(int n) { return {CMat::identity(n), CVec(n, CycloNum(0))}; }

AffineElement AffineElement::translation_by(const CVec& t) { return {CMat::identity(t.size()), t}; }

CVec AffineElement::apply(const CVec& x) const { return add(linear.apply(x), translation); }

AffineElement compose(const AffineElement& a, const AffineElement& b) {
  if (a.linear.cols() != b.linear.rows() || a.translation.size() != b.translation.size())
    fail(ErrorCode::DimensionMismatch, "affine elements of different dimension");
  return {a.linear * b.linear, add(a.linear.apply(b.translation), a.translation)};
}

AffineElement invert(const AffineElement& a) {
  const CMat li = inverse(a.linear);
  return {li, scale(CycloNum(-1), li.apply(a.translation))};
}

AffineReflection is_affine_reflection(const AffineElement& a, const HermitianForm& form) {
  AffineReflection out;
  if (!is_reflection_matrix(a.linear, form)) return out;
  const size_t n = a.linear.rows();
  const CMat d = CMat::identity(n) - a.linear;
  for (size_t j = 0; j < n && out.root.empty(); ++j) {
    CVec c = d.column(j);
    if (!is_zero(c)) out.root = c;
  }
  if (rank(CMat::from_columns({out.root, a.translation}, n)) > 1) return out;
  const CVec pe = a.linear.apply(out.root);
  for (size_t k = 0; k < n; ++k)
    if (!out.root[k].is_zero()) {
      out.theta = pe[k] / out.root[k];
      break;
    }
  out.mirror_point = scale((CycloNum(1) - out.theta).inverse(), a.translation);
  out.order = root_of_unity_order(out.theta).value_or(0);
  out.is_reflection = true;
  return out;
}

std::vector<AffineElement> AffineGroupSpec::reflection_generators() const {
  std::vector<AffineElement> out;
  for (int j = 0; j < linear.s(); ++j)
    out.push_back({linear.matrices()[j], cocycle.values.empty() ? CVec(linear.n(), CycloNum(0)) : cocycle.values[j]});
  return out;
}

AffineGroupSpec semidirect(const ReflectionSystem& sys, const ZLattice& lattice) {
  if (!is_invariant(lattice, sys.matrices())) fail(ErrorCode::NotInvariant);
  Cocycle c;
  c.values.assign(sys.s(), CVec(sys.n(), CycloNum(0)));
  return {sys, lattice, c};
}

AffineGroupSpec extension(const ReflectionSystem& sys, const ZLattice& lattice, const Cocycle& c) {
  if (!is_invariant(lattice, sys.matrices())) fail(ErrorCode::NotInvariant);
  if (!cocycle_well_defined(sys, c, lattice)) fail(ErrorCode::PreconditionViolated, "cocycle is not well defined modulo the lattice");
  return {sys, lattice, c};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "undecided";
  }
}

RGroupReport is_r_group(const AffineGroupSpec& spec) {
  RGroupReport r;
  const ZLattice root = root_sublattice(spec.lattice, spec.linear);
  r.root_lattice = root == spec.lattice;
  r.root_index = index(spec.lattice, root);
  bool zero = true;
  for (const auto& v : spec.cocycle.values) zero = zero && is_zero(v);
  r.split = zero || is_coboundary(spec.linear, spec.cocycle, spec.lattice);
  if (r.split) r.verdict = r.root_lattice ? Verdict::Yes : Verdict::No;
  else r.verdict = r.root_lattice ? Verdict::Yes : Verdict::Undecided;
  return r;
}

int rank_of_translations(const AffineGroupSpec& spec) { return spec.lattice.rank(); }

bool is_crystallographic(const AffineGroupSpec& spec) { return rank_of_translations(spec) == 2 * spec.linear.n(); }

AffineGroupSpec complexify_weyl(const std::vector<std::vector<int>>& a) {
  const size_t n = a.size();
  auto bad = [](const std::string& w) { fail(ErrorCode::InvalidCartanData, w); };
  if (n == 0) bad("empty Cartan matrix");
  for (const auto& row : a)
    if (row.size() != n) bad("Cartan matrix must be square");
  for (size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) bad("diagonal entries must be 2");
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) bad("off-diagonal entries must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0)) bad("a_ij = 0 iff a_ji = 0");
      if (a[i][j] * a[j][i] > 3) bad("a_ij a_ji must be at most 3");
    }
  }
  // d_j = (alpha_j, alpha_j) / 2 with a_ij d_j = a_ji d_i.
  std::vector<std::optional<Rational>> d(n);
  d[0] = Rational(1);
  std::deque<size_t> q{0};
  while (!q.empty()) {
    const size_t i = q.front();
    q.pop_front();
    for (size_t j = 0; j < n; ++j) {
      if (j == i || a[i][j] == 0) continue;
      const Rational dj = Rational(a[j][i]) * *d[i] / Rational(a[i][j]);
      if (!d[j]) {
        d[j] = dj;
        q.push_back(j);
      } else if (!(*d[j] == dj)) {
        bad("Cartan matrix is not symmetrizable");
      }
    }
  }
  for (const auto& x : d)
    if (!x) bad("Dynkin diagram is not connected");
  QMat B(n, n, Rational(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) B(i, j) = Rational(a[i][j]) * *d[j];
  for (size_t k = 1; k <= n; ++k) {
    QMat m(k, k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) m(i, j) = B(i, j);
    if (determinant(m).sign() <= 0) bad("Cartan matrix is not of finite type");
  }
  CMat G(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) G(i, j) = CycloNum(B(i, j));
  std::vector<Reflection> gens;
  std::vector<CVec> coroots;
  for (size_t i = 0; i < n; ++i) {
    CVec e(n, CycloNum(0));
    e[i] = CycloNum(1);
    gens.push_back(Reflection::standard(e, 2, 1));
    e[i] = CycloNum(Rational(1) / *d[i]);
    coroots.push_back(e);
  }
  ReflectionSystem sys(static_cast<int>(n), 1, gens, HermitianForm{G});
  return semidirect(sys, ZLattice::from_generators(RealStructure(static_cast<int>(n), 1), coroots));
}

const char* one_dim_name(OneDimKind k) {
  switch (k) {
    case OneDimKind::W3: return "W3";
    case OneDimKind::W4: return "W4";
    case OneDimKind::W6: return "W6";
    case OneDimKind::W2Lambda: return "W2l";
    default: return "W2";
  }
}

std::optional<OneDimKind> parse_one_dim_kind(const std::string& s) {
  for (OneDimKind k : {OneDimKind::W3, OneDimKind::W4, OneDimKind::W6, OneDimKind::W2Lambda, OneDimKind::W2})
    if (s == one_dim_name(k)) return k;
  return std::nullopt;
}

int OneDimGroup::rotation_order() const {
  switch (kind) {
    case OneDimKind::W3: return 3;
    case OneDimKind::W4: return 4;
    case OneDimKind::W6: return 6;
    default: return 2;
  }
}

AffineGroupSpec OneDimGroup::spec() const {
  const RealStructure s(1, N);
  std::vector<CycloNum> basis{v};
  switch (kind) {
    case OneDimKind::W3:
    case OneDimKind::W6: basis.push_back(CycloNum::zeta(3) * v); break;
    case OneDimKind::W4: basis.push_back(CycloNum::zeta(4) * v); break;
    case OneDimKind::W2Lambda: basis.push_back(*lambda * v); break;
    case OneDimKind::W2: break;
  }
  std::vector<CVec> gens;
  for (const auto& b : basis) gens.push_back(CVec{coerce_order(b, N)});
  ReflectionSystem sys(1, N, {Reflection::standard(CVec{CycloNum(1)}, rotation_order(), N)});
  return semidirect(sys, ZLattice::from_generators(s, gens));
}

OneDimGroup one_dim(OneDimKind kind, const CycloNum& v, const std::optional<CycloNum>& lambda) {
  if (v.is_zero()) fail(ErrorCode::PreconditionViolated, "v must be nonzero");
  OneDimGroup g;
  g.kind = kind;
  g.v = v;
  int base = 1;
  if (kind == OneDimKind::W3 || kind == OneDimKind::W6) base = 3;
  if (kind == OneDimKind::W4) base = 4;
  g.N = std::lcm(base, v.order());
  if (kind == OneDimKind::W2Lambda) {
    if (!lambda) fail(ErrorCode::PreconditionViolated, "W2l needs lambda");
    if (sign_im(*lambda) == 0) fail(ErrorCode::PreconditionViolated, "lambda must not be real");
    g.lambda = modular_reduce(CycloNum(1), *lambda);
    g.N = std::lcm(g.N, g.lambda->order());
  }
  if (g.N > kMaxFieldOrder) fail(ErrorCode::IncompatibleFieldOrders, "field order too large");
  g.v = coerce_order(v, g.N);
  if (g.lambda) g.lambda = coerce_order(*g.lambda, g.N);
  return g;
}

std::vector<MirrorEntry> one_dim_mirrors(const OneDimGroup& g, const Rational& radius) {
  if (radius.sign() <= 0) fail(ErrorCode::PreconditionViolated, "radius must be positive");
  const AffineGroupSpec sp = g.spec();
  std::vector<CycloNum> basis;
  for (const auto& b : sp.lattice.complex_basis()) basis.push_back(b[0]);
  const double R = 2.0 * static_cast<double>(radius.num().to_double() / radius.den().to_double());
  std::vector<long long> bound;
  if (basis.size() == 1) {
    bound.push_back(static_cast<long long>(R / std::abs(basis[0].approx())) + 1);
  } else {
    const auto x = basis[0].approx(), y = basis[1].approx();
    const double g11 = std::norm(x), g22 = std::norm(y), g12 = (x * std::conj(y)).real();
    const double det = g11 * g22 - g12 * g12;
    bound.push_back(static_cast<long long>(R * std::sqrt(g22 / det)) + 1);
    bound.push_back(static_cast<long long>(R * std::sqrt(g11 / det)) + 1);
  }
  const int m = g.rotation_order();
  const CycloNum r2 = CycloNum(radius * radius);
  std::unordered_map<CycloNum, std::vector<int>, CycloHash> found;
  std::vector<CycloNum> points;
  auto visit = [&](const CycloNum& t) {
    for (int l = 1; l < m; ++l) {
      const CycloNum rot = coerce_order(CycloNum::zeta(m, l), g.N);
      const CycloNum p = t / (CycloNum(1) - rot);
      if (sign_re(r2 - p.norm_sq()) < 0) continue;
      const int ord = m / std::gcd(l, m);
      auto it = found.find(p);
      if (it == found.end()) {
        found.emplace(p, std::vector<int>{ord});
        points.push_back(p);
      } else if (std::find(it->second.begin(), it->second.end(), ord) == it->second.end()) {
        it->second.push_back(ord);
      }
    }
  };
  if (basis.size() == 1) {
    for (long long a = -bound[0]; a <= bound[0]; ++a) visit(CycloNum(Integer(a)) * basis[0]);
  } else {
    for (long long a = -bound[0]; a <= bound[0]; ++a)
      for (long long b = -bound[1]; b <= bound[1]; ++b)
        visit(CycloNum(Integer(a)) * basis[0] + CycloNum(Integer(b)) * basis[1]);
  }
  std::vector<MirrorEntry> out;
  for (const auto& p : points) {
    auto orders = found[p];
    std::sort(orders.begin(), orders.end());
    out.push_back({p, orders});
  }
  std::sort(out.begin(), out.end(), [](const MirrorEntry& a, const MirrorEntry& b) {
    const auto x = a.point.approx(), y = b.point.approx();
    const double nx = std::norm(x), ny = std::norm(y);
    if (std::abs(nx - ny) > 1e-9) return nx < ny;
    if (std::abs(x.real() - y.real()) > 1e-9) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return out;
}

}  // namespace crysref
