#include "crysref/cohomology.hpp"

#include <algorithm>
#include <cctype>

namespace crysref {

Word Word::inverse() const {
  Word w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->first, -it->second});
  return w;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

Word power(const Word& w, long long e) {
  const Word base = e < 0 ? w.inverse() : w;
  Word out;
  for (long long k = 0; k < (e < 0 ? -e : e); ++k) out = out * base;
  return out;
}

namespace {

struct WordParser {
  std::string_view s;
  size_t p = 0;

  void skip() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorCode::ParseError, what + " at position " + std::to_string(p) + " in '" + std::string(s) + "'");
  }
  long long integer(bool allow_sign) {
    skip();
    bool neg = false;
    if (allow_sign && p < s.size() && (s[p] == '-' || s[p] == '+')) neg = s[p++] == '-';
    if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p]))) error("expected integer");
    long long v = 0;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
      v = v * 10 + (s[p++] - '0');
      if (v > 1000000) error("integer too large");
    }
    return neg ? -v : v;
  }
  Word word() {
    Word w;
    for (;;) {
      skip();
      if (p >= s.size() || s[p] == ')') return w;
      w = w * factor();
    }
  }
  Word factor() {
    Word a;
    if (s[p] == '(') {
      ++p;
      a = word();
      skip();
      if (p >= s.size() || s[p] != ')') error("expected ')'");
      ++p;
    } else if (s[p] == 'r' || s[p] == 'R') {
      ++p;
      const long long k = integer(false);
      if (k < 1) error("generator index must be >= 1");
      a.letters.push_back({static_cast<int>(k - 1), 1});
    } else {
      error("unexpected character");
    }
    skip();
    if (p < s.size() && s[p] == '^') {
      ++p;
      a = power(a, integer(true));
    }
    return a;
  }
};

CMat identity_minus(const CMat& r) { return CMat::identity(r.rows()) - r; }

std::vector<CMat> inverses(const ReflectionSystem& sys) {
  std::vector<CMat> out;
  for (const auto& m : sys.matrices()) out.push_back(inverse(m));
  return out;
}

void check_word(const ReflectionSystem& sys, const Word& w) {
  for (const auto& [j, e] : w.letters)
    if (j < 0 || j >= sys.s() || (e != 1 && e != -1)) fail(ErrorCode::IndexOutOfRange, "word letter r" + std::to_string(j + 1));
}

void check_cocycle(const ReflectionSystem& sys, const Cocycle& c) {
  if (static_cast<int>(c.values.size()) != sys.s()) fail(ErrorCode::DimensionMismatch, "one cocycle value per generator");
  for (const auto& v : c.values)
    if (static_cast<int>(v.size()) != sys.n()) fail(ErrorCode::DimensionMismatch, "cocycle value length");
}

}  // namespace

Word parse_word(std::string_view text) {
  WordParser ps{text};
  Word w = ps.word();
  ps.skip();
  if (ps.p != text.size()) ps.error("unbalanced ')'");
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& [j, e] : w.letters) {
    if (!out.empty()) out += ' ';
    out += "r" + std::to_string(j + 1);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

H1Result h1_root_lattice(const ReflectionSystem& sys, const ZLattice& lambda) {
  if (sys.s() != sys.n()) fail(ErrorCode::WrongGeneratorCount, "H1 via S needs s = n");
  if (!(root_sublattice(lambda, sys) == lambda)) fail(ErrorCode::NotRootLattice);
  const QMat S = lambda.structure().matrix(operator_S(sys).matrix);
  const auto basis = lambda.basis();
  const size_t r = basis.size();
  ZMat m(r, r, Integer(0));
  for (size_t i = 0; i < r; ++i) {
    auto c = lambda.coordinates(S.apply(basis[i]));
    if (!c) fail(ErrorCode::NotInvariant, "S does not preserve the lattice");
    for (size_t k = 0; k < r; ++k) m(k, i) = (*c)[k];
  }
  H1Result out;
  for (const auto& d : snf(m).diagonal) {
    const Integer a = abs(d);
    if (a.is_zero()) fail(ErrorCode::SingularS);
    if (!a.is_one()) out.invariant_factors.push_back(a);
    out.order *= a;
  }
  return out;
}

CMat word_matrix(const ReflectionSystem& sys, const Word& w) {
  check_word(sys, w);
  const auto inv = inverses(sys);
  CMat l = CMat::identity(sys.n());
  for (const auto& [j, e] : w.letters) l = l * (e > 0 ? sys.matrices()[j] : inv[j]);
  return l;
}

CVec evaluate_word(const Cocycle& c, const ReflectionSystem& sys, const Word& w) {
  check_word(sys, w);
  check_cocycle(sys, c);
  const auto inv = inverses(sys);
  CMat l = CMat::identity(sys.n());
  CVec v(sys.n(), CycloNum(0));
  for (const auto& [j, e] : w.letters) {
    if (e > 0) {
      v = add(v, l.apply(c.values[j]));
      l = l * sys.matrices()[j];
    } else {
      v = sub(v, l.apply(inv[j].apply(c.values[j])));
      l = l * inv[j];
    }
  }
  return v;
}

Cocycle shaped_cocycle(const ReflectionSystem& sys, const CycloNum& lambda) {
  Cocycle c;
  c.values.assign(sys.s(), CVec(sys.n(), CycloNum(0)));
  c.values.back() = scale(lambda, sys.gens().back().root);
  return c;
}

bool LambConstraints::allows(const CycloNum& lambda) const {
  if (!allowed) return true;
  return allowed->contains(CVec{lambda});
}

LambConstraints lamb_constraints(const ReflectionSystem& sys, const ZLattice& gamma) {
  const int n = sys.n();
  if (sys.s() != n + 1) fail(ErrorCode::WrongGeneratorCount, "need n + 1 generators");
  const ReflectionSystem sub = sys.prefix(n);
  const MatrixGroup& kp = sub.group();
  const CMat R = sys.matrices()[n], Rinv = inverse(R);
  const CVec e = sys.gens()[n].root;
  LambConstraints out;
  for (size_t i = 0; i < kp.order(); ++i) {
    const CMat q = R * kp.element(i) * Rinv;
    if (!kp.find(q)) continue;
    ++out.elements_used;
    const CVec u = identity_minus(q).apply(e);
    if (is_zero(u)) continue;
    if (std::find(out.vectors.begin(), out.vectors.end(), u) != out.vectors.end()) continue;
    out.vectors.push_back(u);
    std::vector<CycloNum> zs;
    for (const auto& w : intersect_with_complex_line(gamma, u).complex_basis()) {
      for (size_t a = 0; a < u.size(); ++a)
        if (!u[a].is_zero()) {
          zs.push_back(w[a] / u[a]);
          break;
        }
    }
    ZLattice allowed_u = complex_lattice(zs, sys.N());
    out.allowed = out.allowed ? intersect(*out.allowed, allowed_u) : allowed_u;
  }
  return out;
}

bool cocycle_well_defined(const ReflectionSystem& sys, const Cocycle& c, const ZLattice& gamma,
                          const Presentation& pres) {
  check_cocycle(sys, c);
  const CMat id = CMat::identity(sys.n());
  for (const auto& r : pres.relators)
    if (!(word_matrix(sys, r) == id)) fail(ErrorCode::PreconditionViolated, "relator " + to_string(r) + " is not trivial in the group");
  for (const auto& r : pres.relators)
    if (!gamma.contains(evaluate_word(c, sys, r))) return false;
  return true;
}

bool cocycle_well_defined(const ReflectionSystem& sys, const Cocycle& c, const ZLattice& gamma) {
  check_cocycle(sys, c);
  const MatrixGroup& g = sys.group();
  const RealStructure rs = gamma.structure();
  if (g.field_order() != rs.N) fail(ErrorCode::StructureMismatch, "group and lattice fields differ");
  std::vector<QVec> cj;
  for (const auto& v : c.values) cj.push_back(rs.to_real(v));
  std::vector<std::optional<QVec>> val(g.order());
  std::vector<size_t> queue{g.identity_index()};
  val[g.identity_index()] = QVec(rs.dim(), Rational(0));
  for (size_t head = 0; head < queue.size(); ++head) {
    const size_t x = queue[head];
    for (int k = 0; k < sys.s(); ++k) {
      const size_t y = g.times_generator(x, k);
      QVec v = g.apply(x, cj[k]);
      for (size_t a = 0; a < v.size(); ++a) v[a] += (*val[x])[a];
      if (!val[y]) {
        val[y] = std::move(v);
        queue.push_back(y);
        continue;
      }
      for (size_t a = 0; a < v.size(); ++a) v[a] -= (*val[y])[a];
      if (!gamma.contains(v)) return false;
    }
  }
  return true;
}

bool is_coboundary(const ReflectionSystem& sys, const Cocycle& c, const ZLattice& gamma) {
  check_cocycle(sys, c);
  const RealStructure rs = gamma.structure();
  const size_t d = static_cast<size_t>(rs.dim()), s = static_cast<size_t>(sys.s());
  QMat M(s * d, d, Rational(0));
  QVec C(s * d);
  for (size_t j = 0; j < s; ++j) {
    const QMat a = rs.matrix(identity_minus(sys.matrices()[j]));
    for (size_t r = 0; r < d; ++r)
      for (size_t k = 0; k < d; ++k) M(j * d + r, k) = a(r, k);
    const QVec cv = rs.to_real(c.values[j]);
    for (size_t r = 0; r < d; ++r) C[j * d + r] = cv[r];
  }
  // Functionals vanishing on the image of M.
  const auto P = kernel(M.transpose());
  if (P.empty()) return true;
  const RealStructure ps(static_cast<int>(P.size()), 1);
  auto project = [&](const QVec& x) {
    QVec y(P.size(), Rational(0));
    for (size_t i = 0; i < P.size(); ++i)
      for (size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero()) y[i] += P[i][k] * x[k];
    return y;
  };
  std::vector<QVec> gens;
  for (size_t j = 0; j < s; ++j)
    for (const auto& b : gamma.basis()) {
      QVec x(s * d, Rational(0));
      for (size_t r = 0; r < d; ++r) x[j * d + r] = b[r];
      gens.push_back(project(x));
    }
  return ZLattice::from_generators(ps, gens).contains(project(C));
}

ClassScan valid_classes(const ReflectionSystem& sys, const ZLattice& gamma, int D) {
  if (sys.s() != sys.n() + 1) fail(ErrorCode::WrongGeneratorCount, "need n + 1 generators");
  if (D < 1) fail(ErrorCode::PreconditionViolated, "D must be positive");
  const CVec e = sys.gens().back().root;
  std::vector<CycloNum> delta;
  for (const auto& w : intersect_with_complex_line(gamma, e).complex_basis())
    for (size_t a = 0; a < e.size(); ++a)
      if (!e[a].is_zero()) {
        delta.push_back(w[a] / e[a]);
        break;
      }
  ClassScan out;
  std::vector<int> digits(delta.size(), 0);
  for (;;) {
    CycloNum lam(0);
    for (size_t i = 0; i < delta.size(); ++i) lam += CycloNum(Rational(digits[i], D)) * delta[i];
    out.candidates.push_back(lam);
    size_t i = 0;
    while (i < digits.size() && ++digits[i] == D) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  const LambConstraints lc = lamb_constraints(sys, gamma);
  for (const auto& lam : out.candidates) {
    if (!lc.allows(lam)) continue;
    if (cocycle_well_defined(sys, shaped_cocycle(sys, lam), gamma)) out.valid.push_back(lam);
  }
  for (const auto& lam : out.valid) {
    bool fresh = true;
    for (const auto& rep : out.classes)
      if (is_coboundary(sys, shaped_cocycle(sys, lam - rep), gamma)) {
        fresh = false;
        break;
      }
    if (fresh) out.classes.push_back(lam);
  }
  return out;
}

}  // namespace crysref
