#include <doctest.h>

#include "rootqca/polyhedral.hpp"
#include "support.hpp"

using namespace rootqca;
using testing::rng;

namespace {

Exponent random_exponent(std::mt19937_64& g, int n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  Exponent f(n);
  for (auto& x : f) x = d(g);
  return f;
}

std::set<Exponent> minkowski_vertices(const std::set<Exponent>& a, const std::set<Exponent>& b) {
  std::vector<IVec> pts;
  for (const auto& x : a)
    for (const auto& y : b) pts.push_back(add_exponents(x, y));
  const auto v = hull_vertices(pts);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("monomials and products") {
  QuantumTorus T(testing::a2_lambda(3));
  const auto& ctx = T.context();
  CHECK(T.monomial({0, 0}) == T.one());
  CHECK(T.mul(T.monomial({1, 0}), T.monomial({0, 1})) == T.monomial({1, 1}, testing::z(ctx, 1)));
  CHECK(T.mul(T.monomial({0, 1}), T.monomial({1, 0})) == T.monomial({1, 1}, testing::z(ctx, -1)));
  // z*x1^-1*x2 parses as the product z*X^(-1,0)*X^(0,1) = X^(-1,1)
  CHECK(testing::el(T, "z*x1^-1*x2") == T.monomial({-1, 1}));
  CHECK(T.monomial({-1, 1}, testing::z(ctx, 1)).coeff({-1, 1}) == testing::z(ctx, 1));

  auto g = rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_element(T, g, {});
    CHECK(T.mul(a, T.one()) == a);
    CHECK(T.mul(T.one(), a) == a);
  }
  QuantumTorus T5(testing::a2_lambda(5));
  CHECK_THROWS(T.mul(T.one(), T5.one()));
  CHECK_THROWS(T.mul(T.one(), QuantumTorus(Bicharacter::zero(3, 3)).one()));
}

TEST_CASE("normalized products") {
  QuantumTorus T(testing::a2_lambda(3));
  const std::vector<TorusElement> gens{T.generator(0), T.generator(1)};
  CHECK(T.normalized_product(T.lambda(), gens, {1, 0}) == gens[0]);
  CHECK(T.normalized_product(T.lambda(), gens, {0, 1}) == gens[1]);
  CHECK(T.normalized_product(T.lambda(), gens, {1, 1}) == T.monomial({1, 1}));
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 4; ++b) CHECK(T.normalized_product(T.lambda(), gens, {a, b}) == T.monomial({a, b}));
  // Negative exponents only make sense on monomial frame values.
  CHECK(T.normalized_product(T.lambda(), gens, {-1, 2}) == T.monomial({-1, 2}));
  const std::vector<TorusElement> mixed{T.generator(0) + T.one(), T.generator(1)};
  CHECK_THROWS(T.normalized_product(T.lambda(), mixed, {-1, 0}));
}

TEST_CASE("left division") {
  QuantumTorus T(testing::a2_lambda(3));
  const auto& ctx = T.context();
  auto v = T.left_divide(T.monomial({1, 0}), T.monomial({1, 1}, testing::z(ctx, 1)));
  REQUIRE(v);
  CHECK(*v == T.monomial({0, 1}));

  const auto u = T.monomial({1, 0}) + T.monomial({0, 1});
  const auto c = T.monomial({1, 1}) + T.scalar(2);
  v = T.left_divide(u, T.mul(u, c));
  REQUIRE(v);
  CHECK(*v == c);

  CHECK_FALSE(T.left_divide(T.one() + T.monomial({1, 0}), T.one()));
  CHECK_THROWS(T.left_divide(T.zero(), T.one()));
  CHECK(T.left_divide(u, T.zero()) == T.zero());
}

TEST_CASE("division round trips") {
  auto g = rng(5);
  for (long ell : {3L, 4L, 5L}) {
    QuantumTorus T(Bicharacter(ell, {{0, 1, 2}, {-1, 0, 1}, {-2, -1, 0}}));
    for (int t = 0; t < 25; ++t) {
      const auto u = random_element(T, g, {});
      const auto w = random_element(T, g, {});
      if (u.is_zero()) continue;
      const auto l = T.left_divide(u, T.mul(u, w));
      REQUIRE(l);
      CHECK(*l == w);
      const auto r = T.right_divide(u, T.mul(w, u));
      REQUIRE(r);
      CHECK(*r == w);
    }
  }
}

TEST_CASE("support and Newton vertices") {
  QuantumTorus T(testing::a2_lambda(3));
  CHECK(support(T.monomial({1, 0})) == std::set<Exponent>{{1, 0}});
  const auto y1 = testing::el(T, "x1^-1 + z*x1^-1*x2");
  CHECK(support(y1) == std::set<Exponent>{{-1, 0}, {-1, 1}});
  CHECK(newton_vertices(y1) == std::set<Exponent>{{-1, 0}, {-1, 1}});
  CHECK(support(T.zero()).empty());
  CHECK(newton_vertices(T.zero()).empty());
  const auto sq = testing::el(T, "1 + x1 + x2 + x1*x2 + x1^2*x2^2 + 3");
  CHECK(newton_vertices(sq) == std::set<Exponent>{{0, 0}, {1, 0}, {0, 1}, {2, 2}});
}

TEST_CASE("component split") {
  QuantumTorus T(testing::a2_lambda(3));
  const auto rebuild = [&](const std::map<long, TorusElement>& parts, int k) {
    TorusElement out = T.zero();
    for (const auto& [n, an] : parts) {
      for (const auto& [f, c] : an.terms()) CHECK(f[k] == 0);
      out += T.mul(T.generator(k, n), an);
    }
    return out;
  };
  const auto a = T.monomial({2, 1});
  const auto parts = T.component_split(a, 0);
  REQUIRE(parts.size() == 1);
  CHECK(parts.at(2) == T.monomial({0, 1}, testing::z(T.context(), -2)));
  CHECK(rebuild(parts, 0) == a);

  const auto one = T.component_split(T.one(), 0);
  REQUIRE(one.size() == 1);
  CHECK(one.at(0) == T.one());

  const auto pm = T.component_split(T.monomial({1, 0}) + T.monomial({-1, 0}), 0);
  REQUIRE(pm.size() == 2);
  CHECK(pm.at(1) == T.one());
  CHECK(pm.at(-1) == T.one());

  auto g = rng(9);
  for (int t = 0; t < 30; ++t) {
    const auto b = random_element(T, g, {5, -3, 3, 4, true});
    for (int k = 0; k < 2; ++k) CHECK(rebuild(T.component_split(b, k), k) == b);
  }
}

TEST_CASE("mixed torus and l-power subring") {
  QuantumTorus T(testing::a2_lambda(3));
  IndexProfile frozen{2, {0}, {}};
  CHECK(in_mixed_torus(testing::el(T, "x1^-3 + x2^-5"), IndexProfile::all_exchangeable(2)));
  CHECK_FALSE(in_mixed_torus(T.monomial({0, -1}), frozen));
  CHECK(in_mixed_torus(T.monomial({0, 3}), frozen));
  CHECK(in_ell_power_subring(T.monomial({3, -3}), 3));
  CHECK_FALSE(in_ell_power_subring(T.monomial({3, 1}), 3));
  CHECK(in_ell_power_subring(T.zero(), 3));
  CHECK_FALSE(in_ell_power_subring(T.monomial({3, -3}), 3, frozen));
}

TEST_CASE("quasi-commutation") {
  auto g = rng(13);
  for (long ell : {3L, 4L, 5L, 7L}) {
    QuantumTorus T(Bicharacter(ell, {{0, 1, 2}, {-1, 0, 3}, {-2, -3, 0}}));
    for (int t = 0; t < 40; ++t) {
      const auto f = random_exponent(g, 3, -6, 6);
      const auto h = random_exponent(g, 3, -6, 6);
      const auto lhs = T.mul(T.monomial(f), T.monomial(h));
      const auto rhs = T.mul(T.monomial(h), T.monomial(f)).scaled(testing::z(T.context(), 2 * T.lambda().pair(f, h)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("domain property") {
  auto g = rng(17);
  QuantumTorus T(Bicharacter(4, {{0, 2, 1}, {-2, 0, 1}, {-1, -1, 0}}));
  for (int t = 0; t < 60; ++t) {
    const auto a = random_element(T, g, {4, -2, 2, 2, true});
    const auto b = random_element(T, g, {4, -2, 2, 2, true});
    if (a.is_zero() || b.is_zero()) continue;
    CHECK_FALSE(T.mul(a, b).is_zero());
  }
}

TEST_CASE("Newton polytope of a product is the Minkowski sum") {
  auto g = rng(19);
  for (int n : {2, 3}) {
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) m[i][j] = i + j + 1, m[j][i] = -(i + j + 1);
    QuantumTorus T(Bicharacter(5, m));
    for (int t = 0; t < 25; ++t) {
      const auto a = random_element(T, g, {4, -2, 2, 3, true});
      const auto b = random_element(T, g, {4, -2, 2, 3, true});
      if (a.is_zero() || b.is_zero()) continue;
      CHECK(newton_vertices(T.mul(a, b)) == minkowski_vertices(newton_vertices(a), newton_vertices(b)));
    }
  }
}
