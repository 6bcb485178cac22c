#include "crysref/linalg.hpp"

#include <numeric>

namespace crysref {

CycloNum inner(const CVec& u, const CVec& v, const HermitianForm& form) {
  if (u.size() != v.size()) fail(ErrorCode::DimensionMismatch, "inner product");
  CycloNum s;
  if (form.standard()) {
    for (size_t k = 0; k < u.size(); ++k)
      if (!u[k].is_zero() && !v[k].is_zero()) s += u[k] * v[k].conj();
    return s;
  }
  const CMat& g = *form.gram;
  if (g.rows() != u.size()) fail(ErrorCode::DimensionMismatch, "Gram matrix size");
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    CycloNum t;
    for (size_t i = 0; i < u.size(); ++i)
      if (!u[i].is_zero() && !g(i, j).is_zero()) t += u[i] * g(i, j);
    if (!t.is_zero()) s += t * v[j].conj();
  }
  return s;
}

CMat conj(const CMat& m) {
  CMat c(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).conj();
  return c;
}

CMat conj_transpose(const CMat& m) { return conj(m).transpose(); }

CVec scale(const CycloNum& z, const CVec& v) {
  CVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = z * v[i];
  return w;
}

CVec add(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vector sum");
  CVec w(a.size());
  for (size_t i = 0; i < a.size(); ++i) w[i] = a[i] + b[i];
  return w;
}

CVec sub(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vector difference");
  CVec w(a.size());
  for (size_t i = 0; i < a.size(); ++i) w[i] = a[i] - b[i];
  return w;
}

bool is_zero(const CVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Reflection Reflection::standard(CVec root, int m, int N) {
  if (m < 2) fail(ErrorCode::PreconditionViolated, "reflection order must be at least 2");
  Reflection r;
  r.root = std::move(root);
  r.theta = coerce_order(CycloNum::zeta(m), N);
  r.order = m;
  return r;
}

CMat reflection_matrix(const Reflection& r, const HermitianForm& form) {
  const size_t n = r.root.size();
  CycloNum ee = inner(r.root, r.root, form);
  if (ee.is_zero()) fail(ErrorCode::ZeroRoot);
  CycloNum k = (CycloNum(1) - r.theta) / ee;
  CMat m = CMat::identity(n);
  for (size_t c = 0; c < n; ++c) {
    CVec unit(n);
    unit[c] = CycloNum(1);
    CycloNum t = k * inner(unit, r.root, form);
    if (t.is_zero()) continue;
    for (size_t i = 0; i < n; ++i) m(i, c) -= t * r.root[i];
  }
  return m;
}

bool is_unitary(const CMat& p, const HermitianForm& form) {
  if (!p.square()) return false;
  if (form.standard()) return p * conj_transpose(p) == CMat::identity(p.rows());
  return p.transpose() * (*form.gram) * conj(p) == *form.gram;
}

int fixed_codim(const CMat& p) {
  if (!p.square()) fail(ErrorCode::DimensionMismatch, "fixed_codim of non-square matrix");
  return static_cast<int>(rank(CMat::identity(p.rows()) - p));
}

int matrix_order(const CMat& p, int cap) {
  const CMat id = CMat::identity(p.rows());
  CMat q = p;
  for (int k = 1; k <= cap; ++k) {
    if (q == id) return k;
    q = q * p;
  }
  fail(ErrorCode::OrderCapExceeded, "no finite order up to " + std::to_string(cap));
}

bool is_reflection_matrix(const CMat& p, const HermitianForm& form, int cap) {
  if (!is_unitary(p, form)) return false;
  if (fixed_codim(p) != 1) return false;
  matrix_order(p, cap);
  return true;
}

int common_order(const CMat& m) {
  int N = 1;
  for (const auto& x : m.data()) N = std::lcm(N, x.order());
  return N;
}

int common_order(const CVec& v) {
  int N = 1;
  for (const auto& x : v) N = std::lcm(N, x.order());
  return N;
}

QVec realify(const CycloNum& z, int N) { return coerce_order(z, N).coeffs(); }

QVec realify(const CVec& v, int N) {
  QVec x;
  x.reserve(v.size() * static_cast<size_t>(euler_phi(N)));
  for (const auto& z : v) {
    QVec c = realify(z, N);
    x.insert(x.end(), c.begin(), c.end());
  }
  return x;
}

CVec complexify(const QVec& x, int n, int N) {
  const int phi = euler_phi(N);
  if (x.size() != static_cast<size_t>(n * phi)) fail(ErrorCode::DimensionMismatch, "complexify");
  CVec v(n);
  for (int i = 0; i < n; ++i) v[i] = CycloNum(N, QVec(x.begin() + i * phi, x.begin() + (i + 1) * phi));
  return v;
}

QMat multiplication_matrix(const CycloNum& z, int N) {
  const CycloField& f = CycloField::get(N);
  CycloNum w = coerce_order(z, N);
  QMat m(f.phi, f.phi, Rational(0));
  for (int k = 0; k < f.phi; ++k) {
    QVec col = (w * CycloNum::zeta(N, k)).embed(N).coeffs();
    for (int i = 0; i < f.phi; ++i) m(i, k) = col[i];
  }
  return m;
}

QMat realify(const CMat& m, int N) {
  const size_t phi = static_cast<size_t>(euler_phi(N));
  QMat r(m.rows() * phi, m.cols() * phi, Rational(0));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      QMat b = multiplication_matrix(m(i, j), N);
      for (size_t a = 0; a < phi; ++a)
        for (size_t c = 0; c < phi; ++c) r(i * phi + a, j * phi + c) = b(a, c);
    }
  return r;
}

std::string to_string(const CVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

}  // namespace crysref
