#include <doctest.h>

#include "rootqca/lattice.hpp"
#include "support.hpp"

using namespace rootqca;
using testing::rng;

namespace {

Bicharacter random_skew(std::mt19937_64& g, long ell, int n) {
  std::uniform_int_distribution<long> d(0, ell - 1);
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m[i][j] = d(g);
      m[j][i] = -m[i][j];
    }
  return Bicharacter(ell, m);
}

IntMatrix random_matrix(std::mt19937_64& g, int r, int c, long span) {
  std::uniform_int_distribution<long> d(-span, span);
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = d(g);
  return m;
}

// Every residue vector mod ell, as representatives in [0, ell).
std::vector<std::vector<long>> residues(long ell, int n) {
  std::vector<std::vector<long>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<long>> next;
    for (const auto& v : out)
      for (long r = 0; r < ell; ++r) {
        auto w = v;
        w.push_back(r);
        next.push_back(w);
      }
    out = next;
  }
  return out;
}

bool in_radical(const Bicharacter& L, const std::vector<long>& f) {
  for (int j = 0; j < L.n(); ++j)
    if (L.pair(f, unit_vector(L.n(), j)) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("normal form examples") {
  const IntMatrix id = IntMatrix::identity(3);
  CHECK(hnf(id).H == id);
  CHECK(snf(id).S == id);
  CHECK(snf(IntMatrix({{2, 0}, {0, 4}})).S == IntMatrix({{2, 0}, {0, 4}}));
  CHECK(snf(IntMatrix({{0, 1}, {-1, 0}})).S == IntMatrix::identity(2));
  CHECK(snf(IntMatrix({{2, 0}, {0, 3}})).S == IntMatrix({{1, 0}, {0, 6}}));
  const auto h = hnf(IntMatrix({{2, 4}, {1, 3}}));
  CHECK(h.rank == 2);
  CHECK(h.H == IntMatrix({{1, 1}, {0, 2}}));
}

TEST_CASE("normal form transforms are unimodular and reconstruct") {
  auto g = rng(23);
  for (int t = 0; t < 60; ++t) {
    const int r = 1 + t % 4, c = 1 + (t / 4) % 4;
    const auto m = random_matrix(g, r, c, 6);
    const auto s = snf(m);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(s.U * m * s.V == s.S);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j) CHECK(s.S(i, j) == 0);
    for (int i = 0; i + 1 < std::min(r, c); ++i)
      if (s.S(i + 1, i + 1) != 0) CHECK(mpz_divisible_p(s.S(i + 1, i + 1).get_mpz_t(), s.S(i, i).get_mpz_t()));
    const auto h = hnf(m);
    CHECK(abs(determinant(h.U)) == 1);
    CHECK(h.U * m == h.H);
  }
}

TEST_CASE("integer kernel") {
  const auto k = integer_kernel(IntMatrix({{1, 1, 1}}));
  CHECK(k.cols() == 2);
  for (int j = 0; j < k.cols(); ++j) CHECK(k(0, j) + k(1, j) + k(2, j) == 0);
  CHECK(lattice_contains(k, {1, -1, 0}));
  CHECK(lattice_contains(k, {0, 1, -1}));
  CHECK_FALSE(lattice_contains(k, {1, 0, 0}));
  CHECK(integer_kernel(IntMatrix::identity(2)).cols() == 0);
}

TEST_CASE("kernel of the bicharacter") {
  const auto a2 = kernel_mod_ell(testing::a2_lambda(3));
  CHECK(a2.index == 9);
  CHECK(a2.pi_degree == 3);
  CHECK(a2.contains({3, 0}));
  CHECK(a2.contains({0, 3}));
  CHECK_FALSE(a2.contains({1, 0}));
  CHECK_FALSE(a2.contains({0, 1}));
  CHECK_FALSE(a2.contains({1, 2}));

  const auto zero = kernel_mod_ell(Bicharacter::zero(7, 3));
  CHECK(zero.index == 1);
  CHECK(zero.pi_degree == 1);
  CHECK(zero.contains({1, 0, 0}));

  const auto four = kernel_mod_ell(Bicharacter(4, {{0, 2}, {-2, 0}}));
  CHECK(four.index == 4);
  CHECK(four.pi_degree == 2);
  CHECK(four.contains({2, 0}));
  CHECK(four.contains({0, 2}));
  CHECK_FALSE(four.contains({1, 0}));
}

TEST_CASE("kernel index is a square and contains (ell Z)^N") {
  auto g = rng(29);
  for (long ell = 2; ell <= 9; ++ell)
    for (int n = 1; n <= 4; ++n)
      for (int t = 0; t < 4; ++t) {
        const auto L = random_skew(g, ell, n);
        const auto k = kernel_mod_ell(L);
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), k.index.get_mpz_t());
        CHECK(root * root == k.index);
        CHECK(k.pi_degree == root);
        CHECK(abs(determinant(k.basis)) == k.index);
        for (int i = 0; i < n; ++i) CHECK(k.contains(unit_vector(n, i, ell)));
      }
}

TEST_CASE("kernel agrees with residue enumeration") {
  auto g = rng(31);
  for (long ell = 2; ell <= 5; ++ell)
    for (int n = 1; n <= 3; ++n)
      for (int t = 0; t < 5; ++t) {
        const auto L = random_skew(g, ell, n);
        const auto k = kernel_mod_ell(L);
        long count = 0, total = 0;
        for (const auto& f : residues(ell, n)) {
          ++total;
          const bool rad = in_radical(L, f);
          count += rad;
          CHECK(k.contains(f) == rad);
        }
        CHECK(k.index * count == total);
      }
}

TEST_CASE("compatibility and coprimality") {
  const auto L = testing::a2_lambda(3);
  const IntMatrix B({{0, 1}, {-1, 0}});
  const auto all = IndexProfile::all_exchangeable(2);
  CHECK(check_compatible(L, B, IntMatrix::identity(2), all));
  CHECK_FALSE(check_compatible(L, B, IntMatrix({{2, 0}, {0, 2}}), all));
  CHECK_FALSE(check_compatible(Bicharacter::zero(3, 2), B, IntMatrix::identity(2), all));
  CHECK_THROWS(check_compatible(L, B, IntMatrix({{1, 1}, {0, 1}}), all));
  CHECK_THROWS(check_compatible(L, B, IntMatrix({{-1, 0}, {0, 1}}), all));

  CHECK(check_coprime_condition(3, {1, 1}));
  CHECK_FALSE(check_coprime_condition(4, {1, 1}));
  CHECK_FALSE(check_coprime_condition(9, {3}));
  CHECK(check_coprime_condition(9, {2}));
}

TEST_CASE("restricted kernel") {
  const auto L = testing::a2_lambda(3);
  const auto full = restricted_kernel(L, IntMatrix::identity(2));
  CHECK(full.index == 9);
  CHECK(full.pi_degree == 3);

  const auto line = restricted_kernel(L, IntMatrix(std::vector<std::vector<long>>{{1}, {0}}));
  CHECK(line.index == 1);
  CHECK(line.pi_degree == 1);

  const auto tall = restricted_kernel(L, IntMatrix({{1, 0}, {0, 3}}));
  CHECK(tall.index == 1);
  CHECK(tall.pi_degree == 1);

  CHECK_THROWS(restricted_kernel(L, IntMatrix({{1, 2}, {1, 2}})));
}

TEST_CASE("restricted kernel agrees with enumeration on sublattices") {
  // {(a,b) : a + b = 0 mod 4} has basis (1,-1), (0,4)
  const IntMatrix sub({{1, 0}, {-1, 4}});
  const auto L = testing::a2_lambda(3);
  const auto k = restricted_kernel(L, sub);
  // Coordinates (s, t) of s*(1,-1) + t*(0,4); residues mod 3 suffice since 3*sub lies in the kernel.
  long count = 0;
  for (long s = 0; s < 3; ++s)
    for (long t = 0; t < 3; ++t) {
      const std::vector<long> f{s, -s + 4 * t};
      const bool rad = L.pair(f, {1, -1}) == 0 && L.pair(f, {0, 4}) == 0;
      count += rad;
      CHECK(k.contains(f) == rad);
    }
  CHECK(k.index * count == 9);
  CHECK(k.pi_degree * k.pi_degree == k.index);
}
