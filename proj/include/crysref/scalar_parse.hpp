#ifndef CRYSREF_SCALAR_PARSE_HPP
#define CRYSREF_SCALAR_PARSE_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crysref/cyclotomic.hpp"

namespace crysref {

// Parses a scalar expression into Q(zeta_N). Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/')? factor)*      juxtaposition multiplies
//   factor  := ('+' | '-') factor | atom ('^' integer)?
//   atom    := integer | 'i' | 'w' | 'z' integer | 's2' | 's3' | '(' expr ')'
// where i = zeta_4, w = zeta_3, zM = zeta_M, s2 = sqrt 2, s3 = sqrt 3.
CycloNum parse_scalar(std::string_view text, int order);

// Power-basis term list: pairs (exponent, "p/q") with nonzero coefficients.
std::vector<std::pair<int, std::string>> scalar_terms(const CycloNum& z);

}  // namespace crysref

#endif
