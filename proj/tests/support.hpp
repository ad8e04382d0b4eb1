#pragma once

#include <random>

#include "rootqca/a2.hpp"
#include "rootqca/parse.hpp"
#include "rootqca/sample.hpp"
#include "rootqca/torus.hpp"

namespace testing {

using namespace rootqca;

inline Bicharacter a2_lambda(long ell) { return Bicharacter(ell, {{0, 1}, {-1, 0}}); }

inline CycRat z(const CycContextPtr& ctx, long k) { return CycRat::zeta_pow(ctx, k); }
inline CycRat q(const CycContextPtr& ctx, long num, long den = 1) {
  return CycRat(CycInt(ctx, mpz_class(num)), mpz_class(den));
}

inline TorusElement el(const QuantumTorus& T, const std::string& text) { return parse_element(text, T); }

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace testing
