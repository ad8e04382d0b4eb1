#pragma once

// The rank-2 cluster algebra of type A2 at a root of unity: the seed, its five
// cluster variables and a self-check suite.

#include <string>
#include <vector>

#include "rootqca/seed.hpp"

namespace rootqca {

/// Btilde = Lambda = [[0,1],[-1,0]], D = I.
Seed make_a2_seed(long ell);

struct A2Variables {
  TorusElement x1, x2, y1, y2, fifth;
  std::vector<TorusElement> all() const { return {x1, x2, y1, y2, fifth}; }
};
/// Closed forms in the normalized basis of T(Lambda).
A2Variables a2_variables(const QuantumTorus& T);

/// The eight defining relations as (name, lhs - rhs) in T; each difference must vanish.
std::vector<std::pair<std::string, TorusElement>> a2_relation_residuals(const QuantumTorus& T, const A2Variables& v);

/// Y1^m1 X1^n1 X2^n2 Y2^m2, min(m1,n1) = min(m2,n2) = 0, exponents <= bound.
std::vector<TorusElement> a2_spanning_monomials(const QuantumTorus& T, const A2Variables& v, long bound);

/// Rank over Q(z) of the coefficient vectors in the torus basis.
std::size_t torus_rank(const std::vector<TorusElement>& elems);

struct A2Check {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0;
};

struct A2Report {
  long ell = 0;
  std::vector<A2Check> checks;
  bool all_pass() const;
};

A2Report run_a2_suite(long ell);

}  // namespace rootqca
