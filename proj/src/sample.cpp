#include "rootqca/sample.hpp"

namespace rootqca {

namespace {

TorusElement draw(const QuantumTorus& T, std::mt19937_64& rng, const SampleShape& s, long step) {
  std::uniform_int_distribution<long> ex(s.lo, s.hi), co(-s.coeff, s.coeff), zp(0, T.ell() - 1);
  TorusElement a = T.zero();
  for (int t = 0; t < s.terms; ++t) {
    Exponent f(T.n());
    for (auto& v : f) v = step * ex(rng);
    long c = co(rng);
    if (c == 0) c = 1;
    CycRat coef(CycInt(T.context(), mpz_class(c)));
    if (s.zeta) coef = coef.times_zeta(zp(rng));
    a.add_term(f, coef);
  }
  return a;
}

}  // namespace

TorusElement random_element(const QuantumTorus& T, std::mt19937_64& rng, const SampleShape& shape) {
  return draw(T, rng, shape, 1);
}

TorusElement random_ell_power_element(const QuantumTorus& T, std::mt19937_64& rng, const SampleShape& shape) {
  return draw(T, rng, shape, T.ell());
}

}  // namespace rootqca
