#pragma once

// Root-of-unity quantum seeds. Frames are stored as elements of the initial
// (ambient) torus; every index below is 0-based.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rootqca/lattice.hpp"
#include "rootqca/torus.hpp"

namespace rootqca {

using MutationWord = std::vector<int>;

struct Seed {
  std::shared_ptr<const QuantumTorus> ambient;
  IndexProfile idx;
  IntMatrix btilde;  // N x |ex|, column j belongs to idx.ex[j]
  Bicharacter lambda;
  std::vector<long> d;
  std::vector<TorusElement> frame;
  MutationWord path;

  int n() const { return lambda.n(); }
  long ell() const { return lambda.ell(); }
  IntMatrix dmat() const;
  /// The seed's own torus T(lambda), in which local coordinates live.
  QuantumTorus local_torus() const { return QuantumTorus(lambda); }
  /// M(f) in the ambient torus; negative entries only at monomial frame entries.
  TorusElement frame_value(const Exponent& f) const;
  /// Exchange column for index k as a length-N vector.
  Exponent exchange_column(int k) const;
};

/// Root seed with frame X^{e_i}. Throws unless (lambda, btilde) is compatible.
Seed make_root_seed(const Bicharacter& lambda, const IntMatrix& btilde, const std::vector<long>& d,
                    const IndexProfile& idx);

IntMatrix mutate_btilde(const IntMatrix& btilde, const IndexProfile& idx, int k);
Bicharacter mutate_lambda(const Bicharacter& lambda, const IntMatrix& btilde, const IndexProfile& idx, int k);

/// Q_n in the seed's local coordinates (an element of T(lambda) free of index k).
TorusElement q_element_local(const Seed& s, int k, long n);
/// Q_n evaluated through the frame, in ambient coordinates.
TorusElement q_element(const Seed& s, int k, long n);

/// The new frame variable y_k with frame[k] * y_k = Q_1.
TorusElement mutated_variable(const Seed& s, int k);
Seed mutate_seed(const Seed& s, int k);
Seed mutate_along(const Seed& s, const MutationWord& word);

/// frame[k]^l y_k^l == prod_{b>0} (frame[i]^l)^b + prod_{b<0} (frame[i]^l)^{-b}.
/// Throws when the coprime condition fails.
bool ell_power_check(const Seed& s, int k);

bool frame_quasi_commutes(const Seed& s);
bool exchange_identity_holds(const Seed& s, int k);
bool seed_compatible(const Seed& s);

/// A commutative seed over Z: Laurent polynomials in t_1..t_N with classical
/// exchange relations.
struct ClassicalSeed {
  std::shared_ptr<const QuantumTorus> ring;  // commutative, coefficients in Z
  IndexProfile idx;
  IntMatrix btilde;
  std::vector<TorusElement> frame;
  MutationWord path;

  int n() const { return ring->n(); }
};

ClassicalSeed make_classical_root(const IntMatrix& btilde, const IndexProfile& idx);
ClassicalSeed mutate_seed(const ClassicalSeed& s, int k);
ClassicalSeed mutate_along(const ClassicalSeed& s, const MutationWord& word);

/// Frame l-th powers read as commutative Laurent polynomials (X^{l f} -> t^f),
/// or nullopt when some power leaves the l-th power subring or has irrational coefficients.
std::optional<std::vector<TorusElement>> ell_power_shadow(const Seed& s, const QuantumTorus& classical_ring);

/// Canonical vertex key; unlabelled keys are invariant under permutations of
/// exchangeable indices.
std::string seed_key(const Seed& s, bool labelled);
std::string seed_key(const ClassicalSeed& s, bool labelled);
std::vector<std::string> frame_strings(const Seed& s);
std::vector<std::string> frame_strings(const ClassicalSeed& s);

}  // namespace rootqca
