#ifndef CRYSREF_MODULAR_HPP
#define CRYSREF_MODULAR_HPP

#include "crysref/cyclotomic.hpp"

namespace crysref {

// True iff Im t > 0, -1/2 <= Re t < 1/2, |t| >= 1, and |t| > 1 when Re t > 0.
bool in_modular_strip(const CycloNum& t);

// tau in the strip with Z alpha + Z beta similar to Z + Z tau.
// Throws DegenerateLattice when alpha, beta are R-linearly dependent.
CycloNum modular_reduce(const CycloNum& alpha, const CycloNum& beta);

}  // namespace crysref

#endif
