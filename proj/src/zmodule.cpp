#include "crysref/zmodule.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace crysref {

QVec RealStructure::to_real(const CVec& v) const {
  if (static_cast<int>(v.size()) != n) fail(ErrorCode::StructureMismatch, "vector dimension differs from structure");
  return realify(v, N);
}

CVec RealStructure::to_complex(const QVec& x) const { return complexify(x, n, N); }

QMat RealStructure::matrix(const CMat& m) const {
  if (static_cast<int>(m.rows()) != n || !m.square()) fail(ErrorCode::StructureMismatch, "matrix size differs from structure");
  return realify(m, N);
}

QMat RealStructure::scalar(const CycloNum& z) const {
  const int p = phi();
  QMat b = multiplication_matrix(z, N);
  QMat m(dim(), dim(), Rational(0));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) m(k * p + i, k * p + j) = b(i, j);
  return m;
}

namespace {

// Integer rows and a common denominator for rational vectors.
std::pair<Integer, ZMat> integer_rows(const std::vector<QVec>& vs, size_t dim) {
  Integer den(1);
  for (const auto& v : vs) {
    if (v.size() != dim) fail(ErrorCode::StructureMismatch, "vector dimension differs from structure");
    for (const auto& x : v) den = lcm(den, x.den());
  }
  ZMat m(vs.size(), dim, Integer(0));
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = 0; j < dim; ++j) m(i, j) = divexact(vs[i][j].num() * den, vs[i][j].den());
  return {den, m};
}

void check_same(const ZLattice& a, const ZLattice& b) {
  if (!(a.structure() == b.structure())) fail(ErrorCode::StructureMismatch);
}

}  // namespace

ZLattice::ZLattice(RealStructure s) : s_(s), h_(0, static_cast<size_t>(s.dim())) {}

void ZLattice::canonicalize(const ZMat& rows, Integer den) {
  RowHnf r = row_hnf(rows);
  h_ = ZMat(r.rank(), rows.cols());
  for (size_t i = 0; i < r.rank(); ++i)
    for (size_t j = 0; j < rows.cols(); ++j) h_(i, j) = r.h(i, j);
  piv_ = r.pivots;
  // Remove common content between the entries and the denominator.
  Integer g = den;
  for (const auto& x : h_.data()) {
    if (g.is_one()) break;
    g = gcd(g, x);
  }
  if (!g.is_one() && !g.is_zero()) {
    for (size_t i = 0; i < h_.rows(); ++i)
      for (size_t j = 0; j < h_.cols(); ++j) h_(i, j) = divexact(h_(i, j), g);
    den = divexact(den, g);
  }
  den_ = h_.rows() == 0 ? Integer(1) : den;
}

ZLattice ZLattice::from_generators(RealStructure s, const std::vector<QVec>& gens) {
  ZLattice l(s);
  if (gens.empty()) return l;
  auto [den, m] = integer_rows(gens, static_cast<size_t>(s.dim()));
  l.canonicalize(m, den);
  return l;
}

ZLattice ZLattice::from_generators(RealStructure s, const std::vector<CVec>& gens) {
  std::vector<QVec> q;
  q.reserve(gens.size());
  for (const auto& g : gens) q.push_back(s.to_real(g));
  return from_generators(s, q);
}

ZLattice ZLattice::ring_span(RealStructure s, const std::vector<CycloNum>& ring, const std::vector<CVec>& vecs) {
  std::vector<CVec> gens;
  for (const auto& v : vecs)
    for (const auto& d : ring) gens.push_back(scale(d, v));
  return from_generators(s, gens);
}

std::vector<QVec> ZLattice::basis() const {
  std::vector<QVec> b(h_.rows(), QVec(h_.cols()));
  for (size_t i = 0; i < h_.rows(); ++i)
    for (size_t j = 0; j < h_.cols(); ++j) b[i][j] = Rational(h_(i, j), den_);
  return b;
}

std::vector<CVec> ZLattice::complex_basis() const {
  std::vector<CVec> out;
  for (const auto& b : basis()) out.push_back(s_.to_complex(b));
  return out;
}

QMat ZLattice::basis_matrix() const {
  QMat m(h_.rows(), h_.cols());
  for (size_t i = 0; i < h_.rows(); ++i)
    for (size_t j = 0; j < h_.cols(); ++j) m(i, j) = Rational(h_(i, j), den_);
  return m;
}

std::optional<ZVec> ZLattice::coordinates(const QVec& v) const {
  if (v.size() != h_.cols()) fail(ErrorCode::StructureMismatch, "vector dimension differs from structure");
  ZVec w(v.size());
  for (size_t j = 0; j < v.size(); ++j) {
    Integer t = v[j].num() * den_;
    if (!divides(v[j].den(), t)) return std::nullopt;
    w[j] = divexact(t, v[j].den());
  }
  ZVec z(h_.rows());
  for (size_t i = 0; i < h_.rows(); ++i) {
    const size_t p = piv_[i];
    if (!divides(h_(i, p), w[p])) return std::nullopt;
    z[i] = divexact(w[p], h_(i, p));
    if (z[i].is_zero()) continue;
    for (size_t j = p; j < w.size(); ++j)
      if (!h_(i, j).is_zero()) w[j] -= z[i] * h_(i, j);
  }
  for (const auto& x : w)
    if (!x.is_zero()) return std::nullopt;
  return z;
}

bool ZLattice::contains(const QVec& v) const { return coordinates(v).has_value(); }

bool ZLattice::contains(const ZLattice& sub) const {
  check_same(*this, sub);
  for (const auto& b : sub.basis())
    if (!contains(b)) return false;
  return true;
}

ZLattice ZLattice::image(const QMat& a) const {
  if (a.cols() != h_.cols() || a.rows() != h_.cols()) fail(ErrorCode::StructureMismatch, "operator size");
  std::vector<QVec> gens;
  for (const auto& b : basis()) gens.push_back(a.apply(b));
  return from_generators(s_, gens);
}

size_t ZLattice::hash() const noexcept {
  size_t h = den_.hash();
  for (const auto& x : h_.data()) hash_combine(h, x.hash());
  return h;
}

std::string ZLattice::to_string() const {
  std::string s = "(1/" + den_.to_string() + ") [";
  for (size_t i = 0; i < h_.rows(); ++i) {
    s += i ? "; " : "";
    for (size_t j = 0; j < h_.cols(); ++j) s += (j ? " " : "") + h_(i, j).to_string();
  }
  return s + "]";
}

ZLattice sum(const ZLattice& a, const ZLattice& b) {
  check_same(a, b);
  auto ga = a.basis(), gb = b.basis();
  ga.insert(ga.end(), gb.begin(), gb.end());
  return ZLattice::from_generators(a.structure(), ga);
}

ZLattice intersect(const ZLattice& a, const ZLattice& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return ZLattice(a.structure());
  const Integer D = lcm(a.denominator(), b.denominator());
  const Integer fa = divexact(D, a.denominator()), fb = divexact(D, b.denominator());
  const size_t d = static_cast<size_t>(a.structure().dim());
  const size_t ra = a.rank(), rb = b.rank();
  // Columns: a-basis rows and minus b-basis rows, all scaled to denominator D.
  ZMat k(d, ra + rb);
  for (size_t j = 0; j < d; ++j) {
    for (size_t i = 0; i < ra; ++i) k(j, i) = a.numerators()(i, j) * fa;
    for (size_t i = 0; i < rb; ++i) k(j, ra + i) = -(b.numerators()(i, j) * fb);
  }
  std::vector<QVec> gens;
  const auto ba = a.basis();
  for (const auto& x : integer_kernel(k)) {
    QVec v(d, Rational(0));
    for (size_t i = 0; i < ra; ++i)
      if (!x[i].is_zero())
        for (size_t j = 0; j < d; ++j) v[j] += Rational(x[i]) * ba[i][j];
    gens.push_back(std::move(v));
  }
  return ZLattice::from_generators(a.structure(), gens);
}

bool equal(const ZLattice& a, const ZLattice& b) {
  check_same(a, b);
  return a == b;
}

bool member(const CVec& v, const ZLattice& l) { return l.contains(v); }

std::vector<QVec> rational_span(const ZLattice& l) { return l.basis(); }

std::optional<Integer> index(const ZLattice& big, const ZLattice& small) {
  check_same(big, small);
  if (!big.contains(small)) fail(ErrorCode::NotASublattice);
  if (small.rank() < big.rank()) return std::nullopt;
  // Same Q-span, hence the same pivot columns.
  Integer num(1), den(1);
  for (int i = 0; i < small.rank(); ++i) {
    num *= small.numerators()(i, small.pivots()[i]) * big.denominator();
    den *= big.numerators()(i, big.pivots()[i]) * small.denominator();
  }
  return divexact(num, den);
}

ZLattice intersect_with_subspace(const ZLattice& l, const std::vector<QVec>& span) {
  const size_t d = static_cast<size_t>(l.structure().dim());
  if (l.is_zero()) return l;
  if (span.empty()) return ZLattice(l.structure());
  // Functionals vanishing on the span.
  QMat w = QMat::from_rows(span);
  auto fs = kernel(w);
  if (fs.empty()) return l;
  const auto b = l.basis();
  QMat bf(b.size(), fs.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t k = 0; k < fs.size(); ++k) {
      Rational s(0);
      for (size_t j = 0; j < d; ++j)
        if (!b[i][j].is_zero() && !fs[k][j].is_zero()) s += b[i][j] * fs[k][j];
      bf(i, k) = s;
    }
  // z with z^T (B F) = 0.
  auto [den, zbf] = clear_denominators(bf.transpose());
  (void)den;
  std::vector<QVec> gens;
  for (const auto& z : integer_kernel(zbf)) {
    QVec v(d, Rational(0));
    for (size_t i = 0; i < b.size(); ++i)
      if (!z[i].is_zero())
        for (size_t j = 0; j < d; ++j) v[j] += Rational(z[i]) * b[i][j];
    gens.push_back(std::move(v));
  }
  return ZLattice::from_generators(l.structure(), gens);
}

ZLattice intersect_with_complex_line(const ZLattice& l, const CVec& e) {
  if (is_zero(e)) fail(ErrorCode::ZeroRoot);
  const RealStructure& s = l.structure();
  std::vector<QVec> span;
  for (int k = 0; k < s.phi(); ++k) span.push_back(s.to_real(scale(CycloNum::zeta(s.N, k), e)));
  return intersect_with_subspace(l, span);
}

ZLattice preimage(RealStructure s, const std::vector<QVec>& domain_in, const std::vector<LinearConstraint>& cs) {
  if (cs.empty()) fail(ErrorCode::EmptyConstraintSet);
  const size_t d = static_cast<size_t>(s.dim());
  std::vector<QVec> domain = domain_in;
  if (domain.empty())
    for (size_t i = 0; i < d; ++i) {
      QVec u(d, Rational(0));
      u[i] = Rational(1);
      domain.push_back(std::move(u));
    }
  const size_t k = domain.size();
  // M = stacked A_j * B_d (B_d columns = domain vectors); C = block-diagonal target bases.
  size_t rows = 0, zcols = 0;
  for (const auto& c : cs) {
    if (c.a.cols() != d) fail(ErrorCode::StructureMismatch, "constraint operator size");
    if (static_cast<size_t>(c.target.structure().dim()) != c.a.rows()) fail(ErrorCode::StructureMismatch, "constraint target");
    rows += c.a.rows();
    zcols += static_cast<size_t>(c.target.rank());
  }
  QMat bd = QMat::from_columns(domain, d);
  QMat m(rows, k, Rational(0)), cm(rows, zcols, Rational(0));
  size_t r0 = 0, z0 = 0;
  for (const auto& c : cs) {
    QMat ab = c.a * bd;
    for (size_t i = 0; i < ab.rows(); ++i)
      for (size_t j = 0; j < k; ++j) m(r0 + i, j) = ab(i, j);
    auto tb = c.target.basis();
    for (size_t t = 0; t < tb.size(); ++t)
      for (size_t i = 0; i < tb[t].size(); ++i) cm(r0 + i, z0 + t) = tb[t][i];
    r0 += ab.rows();
    z0 += tb.size();
  }
  if (rank(m) < k) fail(ErrorCode::NotALattice, "constraints leave a subspace unconstrained");
  if (zcols == 0) return ZLattice(s);
  // C z must lie in the image of M: Q C z = 0 for Q spanning the left kernel of M.
  auto qrows = kernel(m.transpose());
  std::vector<ZVec> zs;
  if (qrows.empty()) {
    for (size_t i = 0; i < zcols; ++i) {
      ZVec z(zcols, Integer(0));
      z[i] = Integer(1);
      zs.push_back(std::move(z));
    }
  } else {
    QMat qc = QMat::from_rows(qrows) * cm;
    auto [den, zqc] = clear_denominators(qc);
    (void)den;
    zs = integer_kernel(zqc);
  }
  std::vector<QVec> gens;
  for (const auto& z : zs) {
    QVec cz(rows, Rational(0));
    for (size_t j = 0; j < zcols; ++j)
      if (!z[j].is_zero())
        for (size_t i = 0; i < rows; ++i)
          if (!cm(i, j).is_zero()) cz[i] += Rational(z[j]) * cm(i, j);
    auto y = solve(m, cz);
    if (!y) fail(ErrorCode::PreconditionViolated, "inconsistent preimage system");
    gens.push_back(bd.apply(*y));
  }
  return ZLattice::from_generators(s, gens);
}

ZLattice preimage(RealStructure s, const std::vector<LinearConstraint>& cs) { return preimage(s, {}, cs); }

Integer AbelianQuotient::order() const {
  Integer o(1);
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

namespace {

// Coordinates of small's basis in big's basis (rows), and the SNF data.
struct QuotientData {
  std::vector<Integer> diag;  // full diagonal including 1s
  std::vector<QVec> newbasis; // V^{-1} B: basis of big aligned with small
};

QuotientData quotient_data(const ZLattice& big, const ZLattice& small) {
  check_same(big, small);
  if (!big.contains(small)) fail(ErrorCode::NotASublattice);
  if (small.rank() != big.rank()) fail(ErrorCode::PreconditionViolated, "quotient of lattices with different ranks is infinite");
  const size_t r = static_cast<size_t>(big.rank());
  ZMat x(r, r);
  const auto sb = small.basis();
  for (size_t i = 0; i < r; ++i) {
    auto c = big.coordinates(sb[i]);
    for (size_t j = 0; j < r; ++j) x(i, j) = (*c)[j];
  }
  Snf s = snf(x);
  // small = U^{-1} D V^{-1} B, so V^{-1} B is a basis of big with small = span(d_i b'_i).
  QMat vinv = inverse(to_rational(s.v));
  QMat nb = vinv * big.basis_matrix();
  QuotientData q;
  q.diag = s.diagonal;
  for (size_t i = 0; i < r; ++i) q.newbasis.push_back(nb.row(i));
  return q;
}

}  // namespace

AbelianQuotient quotient(const ZLattice& big, const ZLattice& small, long long rep_bound) {
  QuotientData q = quotient_data(big, small);
  AbelianQuotient out;
  for (size_t i = 0; i < q.diag.size(); ++i)
    if (!q.diag[i].is_one()) {
      out.invariant_factors.push_back(q.diag[i]);
      out.generators.push_back(q.newbasis[i]);
    }
  Integer ord = out.order();
  if (ord <= Integer(rep_bound)) {
    const RealStructure& s = big.structure();
    std::vector<long long> a(out.generators.size(), 0);
    const size_t d = static_cast<size_t>(s.dim());
    while (true) {
      QVec v(d, Rational(0));
      for (size_t g = 0; g < a.size(); ++g)
        if (a[g])
          for (size_t j = 0; j < d; ++j) v[j] += Rational(a[g]) * out.generators[g][j];
      out.coset_reps.push_back(s.to_complex(v));
      size_t g = 0;
      while (g < a.size() && ++a[g] == out.invariant_factors[g].small_value()) a[g++] = 0;
      if (g == a.size()) break;
    }
  }
  return out;
}

std::vector<ZLattice> enumerate_between(const ZLattice& small, const ZLattice& big,
                                        const std::function<bool(const ZLattice&)>& keep, long long bound) {
  QuotientData q = quotient_data(big, small);
  Integer ord(1);
  for (const auto& d : q.diag) ord *= d;
  if (ord > Integer(bound)) fail(ErrorCode::QuotientTooLarge, "quotient order " + ord.to_string());
  const size_t r = q.diag.size();
  // Work in Z^r with respect to the aligned basis; small = diag(d) Z^r.
  std::vector<size_t> active;
  for (size_t i = 0; i < r; ++i)
    if (!q.diag[i].is_one()) active.push_back(i);
  std::vector<ZVec> elements;
  {
    std::vector<long long> a(active.size(), 0);
    while (true) {
      ZVec v(r, Integer(0));
      for (size_t g = 0; g < active.size(); ++g) v[active[g]] = Integer(a[g]);
      elements.push_back(std::move(v));
      size_t g = 0;
      while (g < active.size() && ++a[g] == q.diag[active[g]].small_value()) a[g++] = 0;
      if (g == active.size()) break;
    }
  }
  auto canon = [&](std::vector<ZVec> gens) {
    for (size_t i = 0; i < r; ++i) {
      ZVec e(r, Integer(0));
      e[i] = q.diag[i];
      gens.push_back(std::move(e));
    }
    RowHnf h = row_hnf(ZMat::from_rows(gens));
    std::vector<ZVec> rows;
    for (size_t i = 0; i < h.rank(); ++i) rows.push_back(h.h.row(i));
    return rows;
  };
  auto contains = [&](const std::vector<ZVec>& rows, const ZVec& v) {
    ZVec w = v;
    for (const auto& row : rows) {
      size_t p = 0;
      while (row[p].is_zero()) ++p;
      if (!divides(row[p], w[p])) return false;
      Integer z = divexact(w[p], row[p]);
      for (size_t j = p; j < r; ++j) w[j] -= z * row[j];
    }
    for (const auto& x : w)
      if (!x.is_zero()) return false;
    return true;
  };
  std::set<std::vector<ZVec>> seen;
  std::deque<std::vector<ZVec>> queue;
  auto start = canon({});
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& g : elements) {
      if (contains(cur, g)) continue;
      auto gens = cur;
      gens.push_back(g);
      auto next = canon(gens);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  struct Item {
    Integer idx;
    std::vector<ZVec> rows;
    ZLattice lat;
  };
  std::vector<Item> items;
  const RealStructure& s = big.structure();
  const size_t d = static_cast<size_t>(s.dim());
  for (const auto& rows : seen) {
    Integer det_rows(1);
    std::vector<QVec> gens;
    for (const auto& row : rows) {
      size_t p = 0;
      while (row[p].is_zero()) ++p;
      det_rows *= row[p];
      QVec v(d, Rational(0));
      for (size_t i = 0; i < r; ++i)
        if (!row[i].is_zero())
          for (size_t j = 0; j < d; ++j) v[j] += Rational(row[i]) * q.newbasis[i][j];
      gens.push_back(std::move(v));
    }
    ZLattice lat = ZLattice::from_generators(s, gens);
    if (keep && !keep(lat)) continue;
    items.push_back(Item{divexact(ord, det_rows), rows, std::move(lat)});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.idx != b.idx) return a.idx < b.idx;
    return a.rows > b.rows;
  });
  std::vector<ZLattice> out;
  for (auto& it : items) out.push_back(std::move(it.lat));
  return out;
}

}  // namespace crysref
