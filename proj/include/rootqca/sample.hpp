#pragma once

// Seeded random torus elements for checks and demos.

#include <random>

#include "rootqca/torus.hpp"

namespace rootqca {

struct SampleShape {
  int terms = 3;        // number of terms drawn (duplicates merge)
  long lo = -2;         // exponent range, inclusive
  long hi = 2;
  long coeff = 3;       // integer parts drawn from [-coeff, coeff]
  bool zeta = true;     // multiply coefficients by a random power of z
};

TorusElement random_element(const QuantumTorus& T, std::mt19937_64& rng, const SampleShape& shape);
/// Exponents drawn from ell * [lo, hi].
TorusElement random_ell_power_element(const QuantumTorus& T, std::mt19937_64& rng, const SampleShape& shape);

}  // namespace rootqca
