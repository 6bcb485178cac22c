#include "crysref/intmat.hpp"

namespace crysref {

void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  if (a.is_small() && b.is_small() && a.small_value() != INT64_MIN && b.small_value() != INT64_MIN) {
    long long r0 = a.small_value(), r1 = b.small_value();
    long long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      long long q = r0 / r1;
      long long tmp = r0 - q * r1;
      r0 = r1, r1 = tmp;
      tmp = s0 - q * s1;
      s0 = s1, s1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1, t1 = tmp;
    }
    if (r0 < 0) r0 = -r0, s0 = -s0, t0 = -t0;
    g = Integer(r0), s = Integer(s0), t = Integer(t0);
    return;
  }
  mpz_class G, S, T;
  mpz_gcdext(G.get_mpz_t(), S.get_mpz_t(), T.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  g = Integer(G), s = Integer(S), t = Integer(T);
}

namespace {

void row_axpy(ZMat& m, size_t dst, const Integer& k, size_t src) {
  if (k.is_zero()) return;
  for (size_t j = 0; j < m.cols(); ++j)
    if (!m(src, j).is_zero()) m(dst, j).add_mul(k, m(src, j));
}

void col_axpy(ZMat& m, size_t dst, const Integer& k, size_t src) {
  if (k.is_zero()) return;
  for (size_t i = 0; i < m.rows(); ++i)
    if (!m(i, src).is_zero()) m(i, dst).add_mul(k, m(i, src));
}

void swap_rows(ZMat& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(ZMat& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_row(ZMat& m, size_t r) {
  for (size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

void negate_col(ZMat& m, size_t c) {
  for (size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

// Rows (r, i) <- (s r + t i, -b/g r + a/g i); determinant 1.
void combine_rows(ZMat& m, size_t r, size_t i, const Integer& s, const Integer& t, const Integer& x, const Integer& y) {
  for (size_t j = 0; j < m.cols(); ++j) {
    const Integer mr = m(r, j), mi = m(i, j);
    if (mr.is_zero() && mi.is_zero()) continue;
    m(r, j) = s * mr + t * mi;
    m(i, j) = x * mr + y * mi;
  }
}

}  // namespace

RowHnf row_hnf(const ZMat& a, bool want_transform) {
  RowHnf out;
  out.h = a;
  ZMat& h = out.h;
  const size_t m = h.rows();
  if (want_transform) out.u = ZMat::identity(m);
  size_t r = 0;
  for (size_t c = 0; c < h.cols() && r < m; ++c) {
    for (size_t i = r + 1; i < m; ++i) {
      if (h(i, c).is_zero()) continue;
      if (h(r, c).is_zero()) {
        swap_rows(h, r, i);
        if (want_transform) swap_rows(out.u, r, i);
        continue;
      }
      Integer g, s, t;
      const Integer av = h(r, c), bv = h(i, c);
      ext_gcd(av, bv, g, s, t);
      const Integer x = -divexact(bv, g), y = divexact(av, g);
      combine_rows(h, r, i, s, t, x, y);
      if (want_transform) combine_rows(out.u, r, i, s, t, x, y);
    }
    if (h(r, c).is_zero()) continue;
    if (h(r, c).sign() < 0) {
      negate_row(h, r);
      if (want_transform) negate_row(out.u, r);
    }
    for (size_t k = 0; k < r; ++k) {
      Integer q = floor_div(h(k, c), h(r, c));
      if (q.is_zero()) continue;
      row_axpy(h, k, -q, r);
      if (want_transform) row_axpy(out.u, k, -q, r);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

Hnf hnf(const ZMat& m) {
  RowHnf r = row_hnf(m.transpose(), true);
  return Hnf{r.h.transpose(), r.u.transpose()};
}

Snf snf(const ZMat& m) {
  Snf out;
  out.d = m;
  ZMat& d = out.d;
  out.u = ZMat::identity(m.rows());
  out.v = ZMat::identity(m.cols());
  const size_t R = m.rows(), C = m.cols();
  for (size_t t = 0; t < std::min(R, C); ++t) {
    // Pivot: smallest nonzero entry in the trailing block.
    size_t pi = R, pj = C;
    for (size_t i = t; i < R; ++i)
      for (size_t j = t; j < C; ++j)
        if (!d(i, j).is_zero() && (pi == R || abs(d(i, j)) < abs(d(pi, pj)))) pi = i, pj = j;
    if (pi == R) break;
    swap_rows(d, t, pi);
    swap_rows(out.u, t, pi);
    swap_cols(d, t, pj);
    swap_cols(out.v, t, pj);
    while (true) {
      bool changed = false;
      for (size_t i = t + 1; i < R; ++i) {
        if (d(i, t).is_zero()) continue;
        Integer q = floor_div(d(i, t), d(t, t));
        row_axpy(d, i, -q, t);
        row_axpy(out.u, i, -q, t);
        if (!d(i, t).is_zero()) {
          swap_rows(d, t, i);
          swap_rows(out.u, t, i);
          changed = true;
        }
      }
      for (size_t j = t + 1; j < C; ++j) {
        if (d(t, j).is_zero()) continue;
        Integer q = floor_div(d(t, j), d(t, t));
        col_axpy(d, j, -q, t);
        col_axpy(out.v, j, -q, t);
        if (!d(t, j).is_zero()) {
          swap_cols(d, t, j);
          swap_cols(out.v, t, j);
          changed = true;
        }
      }
      if (changed) continue;
      // Divisibility: fold any offending row into row t.
      bool fixed = false;
      for (size_t i = t + 1; i < R && !fixed; ++i)
        for (size_t j = t + 1; j < C && !fixed; ++j)
          if (!divides(d(t, t), d(i, j))) {
            row_axpy(d, t, Integer(1), i);
            row_axpy(out.u, t, Integer(1), i);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (d(t, t).sign() < 0) {
      negate_col(d, t);
      negate_col(out.v, t);
    }
  }
  for (size_t t = 0; t < std::min(R, C); ++t) out.diagonal.push_back(d(t, t));
  return out;
}

std::vector<ZVec> integer_kernel(const ZMat& a) {
  RowHnf r = row_hnf(a.transpose(), true);
  std::vector<ZVec> basis;
  for (size_t i = r.rank(); i < r.h.rows(); ++i) basis.push_back(r.u.row(i));
  if (basis.empty()) return basis;
  // Tidy the basis itself into HNF so results are canonical.
  RowHnf k = row_hnf(ZMat::from_rows(basis));
  basis.clear();
  for (size_t i = 0; i < k.rank(); ++i) basis.push_back(k.h.row(i));
  return basis;
}

std::optional<ZVec> solve_integer(const ZMat& a, const ZVec& b) {
  if (b.size() != a.rows()) fail(ErrorCode::DimensionMismatch, "solve_integer");
  Snf s = snf(a);
  ZVec ub = s.u.apply(b);
  ZVec y(a.cols(), Integer(0));
  for (size_t i = 0; i < a.rows(); ++i) {
    const Integer di = i < a.cols() ? s.d(i, i) : Integer(0);
    if (di.is_zero()) {
      if (!ub[i].is_zero()) return std::nullopt;
    } else {
      if (!divides(di, ub[i])) return std::nullopt;
      y[i] = divexact(ub[i], di);
    }
  }
  return s.v.apply(y);
}

Integer det(const ZMat& a) {
  if (!a.square()) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  // Bareiss fraction-free elimination.
  ZMat m = a;
  const size_t n = m.rows();
  Integer prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return Integer(0);
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) m(i, j) = divexact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  if (n == 0) return Integer(1);
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

std::pair<Integer, ZMat> clear_denominators(const QMat& m) {
  Integer den(1);
  for (const auto& x : m.data()) den = lcm(den, x.den());
  ZMat z(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) z(i, j) = divexact(m(i, j).num() * den, m(i, j).den());
  return {den, z};
}

QMat to_rational(const ZMat& m) {
  QMat q(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

}  // namespace crysref
