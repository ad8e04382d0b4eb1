#pragma once

// Submonoids of Z^N: membership, group closure, and the integral
// convexity / closedness classification of monomial subalgebras.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "rootqca/lattice.hpp"
#include "rootqca/polyhedral.hpp"
#include "rootqca/torus.hpp"

namespace rootqca {

struct Halfspace {
  std::vector<mpq_class> form;  // L(x) = sum form_i x_i
  bool strict = false;          // L(x) > 0 for x != 0, otherwise L(x) >= 0
};

struct MonoidSpec {
  int n = 0;
  std::vector<IVec> generators;
  std::vector<Halfspace> halfspaces;

  static MonoidSpec from_generators(std::vector<IVec> gens);
  static MonoidSpec from_halfspaces(int n, std::vector<Halfspace> hs);
  bool generator_form() const { return !generators.empty(); }
  void validate() const;
};

/// "1,0;0,1" -> {(1,0),(0,1)}.
std::vector<IVec> parse_generators(const std::string& text);
/// "x1 + x2 > 0", "2*x1 >= x2", "x2 <= 0". Homogeneous only.
Halfspace parse_halfspace(const std::string& text, int n);

/// Columns form a basis of the group generated by the generators.
IntMatrix group_closure(const MonoidSpec& m);

struct MemberResult {
  bool member = false;
  std::vector<long> combination;  // multiplicities of the generators, when member
  std::string reason;
};
MemberResult monoid_member(const MonoidSpec& m, const IVec& f);

struct MonoidVerdict {
  bool integrally_convex = false;
  bool integrally_closed = false;
  bool maximal_order = false;
  std::optional<IVec> witness;  // f with k f in Phi but f not in Phi
  long multiplier = 0;          // least such k
  bool redundant = false;       // halfspace form: strict form implied by the others
  std::string certificate;
};
MonoidVerdict classify(const MonoidSpec& m);

/// PI degree of the monomial subalgebra: sqrt([Phibar : Ker(Lambda|Phibar)]).
mpz_class ch_degree_monomial(const MonoidSpec& m, const Bicharacter& lambda);
/// Cayley-Hamilton at degree ch_degree_monomial with the restricted reduced trace.
/// Throws if a sample is not supported in Phi.
bool monomial_ch_verify(const MonoidSpec& m, const Bicharacter& lambda, const std::vector<TorusElement>& samples);

}  // namespace rootqca
