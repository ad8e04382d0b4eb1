#pragma once

// Traces on a quantum torus, Newton's identities and Cayley-Hamilton checks.

#include <optional>
#include <string>
#include <vector>

#include "rootqca/lattice.hpp"
#include "rootqca/seed.hpp"

namespace rootqca {

enum class TraceKind {
  RegularEllSubring,  // over the l-th power subring: l^N X^f on (lZ)^N
  RegularCenter,      // over the full center: d^2 X^f on Ker
  Reduced,            // d X^f on Ker
  Standard,           // d * reduced
};

TraceKind parse_trace_kind(const std::string& s);
std::string to_string(TraceKind k);

class TraceOperator {
 public:
  TraceOperator(const Bicharacter& lambda, TraceKind kind);
  /// Trace over the monomial subalgebra spanned by a sublattice (columns of sub).
  /// Only Reduced and Standard make sense there.
  TraceOperator(const Bicharacter& lambda, TraceKind kind, const IntMatrix& sub);

  TraceKind kind() const { return kind_; }
  const KernelData& kernel() const { return kernel_; }
  mpz_class pi_degree() const { return kernel_.pi_degree; }
  /// l^N, d, d^2 or d^2 according to the kind.
  long default_degree() const;
  bool keeps(const Exponent& f) const;
  TorusElement apply(const TorusElement& a) const;

 private:
  Bicharacter lambda_;
  TraceKind kind_;
  KernelData kernel_;
  std::optional<IntMatrix> sub_;
  mpz_class scale_;
};

/// sigma_i = (1/i) sum_{j=1..i} (-1)^{j-1} sigma_{i-j} psi_j, sigma_0 = 1.
std::vector<TorusElement> newton_sigma(const QuantumTorus& T, const std::vector<TorusElement>& psi);

struct CharPolyReport {
  long degree = 0;
  std::vector<TorusElement> psi;    // psi_1..psi_d
  std::vector<TorusElement> sigma;  // sigma_1..sigma_d
  std::optional<TorusElement> residual;
  bool is_zero = false;
};

CharPolyReport verify_cayley_hamilton(const QuantumTorus& T, const TorusElement& a, const TraceOperator& tr,
                                      long degree);

struct TraceAgreement {
  bool agree = false;
  std::optional<TorusElement> trace_from_a;  // computed at a, converted to b
  std::optional<TorusElement> trace_at_b;
};

/// u in coordinates of a; compares traces across the edge a -> mutate_seed(a, k).
/// Throws when u does not convert.
TraceAgreement trace_agreement(const Seed& a, const TorusElement& u, int k, TraceKind kind);

}  // namespace rootqca
