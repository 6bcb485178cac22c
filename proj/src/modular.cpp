#include "crysref/modular.hpp"

#include "crysref/errors.hpp"

namespace crysref {

bool in_modular_strip(const CycloNum& t) {
  if (sign_im(t) <= 0) return false;
  const CycloNum half(Rational(1, 2));
  if (sign_re(t + half) < 0 || sign_re(t - half) >= 0) return false;
  const int m = sign_re(t.norm_sq() - CycloNum(1));
  if (m < 0) return false;
  return !(m == 0 && sign_re(t) > 0);
}

CycloNum modular_reduce(const CycloNum& alpha, const CycloNum& beta) {
  if (alpha.is_zero() || beta.is_zero()) fail(ErrorCode::DegenerateLattice, "zero generator");
  CycloNum t = beta / alpha;
  const int s = sign_im(t);
  if (s == 0) fail(ErrorCode::DegenerateLattice, "generators are R-linearly dependent");
  if (s < 0) t = -t;
  const CycloNum half(Rational(1, 2));
  while (true) {
    const Integer k = floor_re(t + half);
    if (!k.is_zero()) t -= CycloNum(Rational(k));
    const int m = sign_re(t.norm_sq() - CycloNum(1));
    if (m < 0 || (m == 0 && sign_re(t) > 0)) {
      t = -t.inverse();
      if (m == 0) return t;
      continue;
    }
    return t;
  }
}

}  // namespace crysref
