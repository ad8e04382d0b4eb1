#pragma once

// Moving elements between seed coordinates and deciding membership in
// intersections of (mixed) quantum tori.
//
// Seed coordinates: an element of the seed's local torus T(lambda) whose
// monomial X^f stands for the frame value M(f). At the root they coincide
// with initial coordinates.

#include <optional>
#include <string>
#include <vector>

#include "rootqca/graph.hpp"
#include "rootqca/seed.hpp"

namespace rootqca {

struct DivisionFailure {
  MutationWord path;  // seed at which the division was attempted
  int k = 0;          // mutation direction
  long m = 0;         // a_{-m} was not divisible by Q_{2m-1}...Q_1
  std::string dividend;
  std::string divisor;
};

struct Conversion {
  bool ok = false;
  std::optional<TorusElement> coords;
  std::optional<DivisionFailure> failure;
};

/// u in coordinates of seed a; result in coordinates of mutate_seed(a, k).
Conversion convert_edge(const Seed& a, const TorusElement& u, int k);
/// u in coordinates of seed `from`; folds convert_edge along the word.
Conversion convert_path(const Seed& from, const TorusElement& u, const MutationWord& word);

/// Conversion to the seed reached by `word` succeeds and lands in the mixed torus.
bool member_mixed(const Seed& root, const TorusElement& u, const MutationWord& word);

struct SeedVerdict {
  int vertex = 0;
  MutationWord path;
  bool member = false;
  std::optional<TorusElement> coords;
  std::optional<DivisionFailure> failure;
  std::string reason;
};

struct MembershipReport {
  bool member = false;
  std::vector<SeedVerdict> seeds;
};

/// u in root (initial) coordinates; theta holds vertex ids of g.
MembershipReport member_intersection(const ExchangeGraph& g, const std::vector<int>& theta, const TorusElement& u);
/// Additionally requires the converted form to lie in the l-th power subring at every seed of theta.
MembershipReport member_central_subalgebra(const ExchangeGraph& g, const std::vector<int>& theta,
                                           const TorusElement& u);
/// member_intersection plus support inside Ker(lambda) at the first seed of theta.
MembershipReport center_test(const ExchangeGraph& g, const std::vector<int>& theta, const TorusElement& u);

}  // namespace rootqca
