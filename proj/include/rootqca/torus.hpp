#pragma once

// Sparse arithmetic in the quantum torus T(Lambda): basis X^f, f in Z^N, with
// X^f X^g = z^{Lambda(f,g)} X^{f+g}.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rootqca/cyclotomic.hpp"

namespace rootqca {

using Exponent = std::vector<long>;

/// Degree first (sum of entries), then lexicographic. Compatible with addition.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

int graded_lex_compare(const Exponent& a, const Exponent& b);

class Bicharacter {
 public:
  /// Entries are lifted to {0,...,ell-1}. Throws unless skew with zero diagonal mod ell.
  Bicharacter(long ell, const std::vector<std::vector<long>>& entries);
  static Bicharacter zero(long ell, int n);

  int n() const { return static_cast<int>(m_.size()); }
  long ell() const { return ell_; }
  long at(int i, int j) const { return m_[i][j]; }
  const std::vector<std::vector<long>>& entries() const { return m_; }
  /// sum_ij f_i L_ij g_j reduced into [0, ell).
  long pair(const Exponent& f, const Exponent& g) const;
  /// Entry in (-ell/2, ell/2], used for display.
  long signed_at(int i, int j) const;

  friend bool operator==(const Bicharacter&, const Bicharacter&) = default;

 private:
  long ell_;
  std::vector<std::vector<long>> m_;
};

/// 0-based. `ex` exchangeable, `inv` inverted frozen; the rest are frozen
/// indices on which exponents must stay nonnegative.
struct IndexProfile {
  int n = 0;
  std::vector<int> ex;
  std::vector<int> inv;

  static IndexProfile all_exchangeable(int n);
  void validate() const;
  bool is_exchangeable(int i) const;
  bool is_nonneg_frozen(int i) const;
  int column_of(int k) const;  // position of k inside ex, or -1
};

class TorusElement {
 public:
  using Terms = std::map<Exponent, CycRat, GradedLex>;

  TorusElement(CycContextPtr ctx, int n);
  static TorusElement monomial(const CycContextPtr& ctx, const Exponent& f, const CycRat& c);
  static TorusElement constant(const CycContextPtr& ctx, int n, const CycRat& c);

  const CycContextPtr& context() const { return ctx_; }
  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  CycRat coeff(const Exponent& f) const;

  void add_term(const Exponent& f, const CycRat& c);

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  TorusElement scaled(const CycRat& c) const;
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator-(TorusElement a);
  friend bool operator==(const TorusElement& a, const TorusElement& b);

  /// Highest / lowest term in the graded-lex order. Requires nonzero.
  const Exponent& lead() const { return terms_.rbegin()->first; }
  const Exponent& trail() const { return terms_.begin()->first; }

  /// Raw dump "c*X^(e1,...)+..." in term order; a stable key, not the grammar form.
  std::string raw_string() const;

 private:
  void check_compatible(const TorusElement& o) const;

  CycContextPtr ctx_;
  int n_;
  Terms terms_;
};

/// The algebra T(Lambda) over Q(z), z of order Lambda.ell().
class QuantumTorus {
 public:
  explicit QuantumTorus(Bicharacter lambda);

  const Bicharacter& lambda() const { return lambda_; }
  const CycContextPtr& context() const { return ctx_; }
  int n() const { return lambda_.n(); }
  long ell() const { return lambda_.ell(); }

  TorusElement zero() const { return TorusElement(ctx_, n()); }
  TorusElement one() const;
  TorusElement scalar(const CycRat& c) const;
  TorusElement scalar(long c) const;
  TorusElement monomial(const Exponent& f, const CycRat& c) const;
  TorusElement monomial(const Exponent& f) const;
  TorusElement generator(int i, long power = 1) const;

  TorusElement mul(const TorusElement& a, const TorusElement& b) const;
  /// Negative powers only for monomials.
  TorusElement pow(const TorusElement& a, long e) const;
  /// Inverse of a monomial c X^f.
  TorusElement monomial_inverse(const TorusElement& a) const;

  /// v with u*v = w, or nullopt when no Laurent v exists.
  std::optional<TorusElement> left_divide(const TorusElement& u, const TorusElement& w) const;
  /// v with v*u = w, or nullopt.
  std::optional<TorusElement> right_divide(const TorusElement& u, const TorusElement& w) const;

  /// z^{-sum_{i<j} L'_ij f_i f_j} gens[0]^{f_0} ... gens[n-1]^{f_{n-1}}, product in this torus.
  TorusElement normalized_product(const Bicharacter& frame_lambda, const std::vector<TorusElement>& gens,
                                  const Exponent& f) const;

  /// a = sum_n X^{n e_k} a_n with a_n free of index k.
  std::map<long, TorusElement> component_split(const TorusElement& a, int k) const;

  /// True iff a commutes with every generator.
  bool is_central(const TorusElement& a) const;

 private:
  void check(const TorusElement& a) const;

  Bicharacter lambda_;
  CycContextPtr ctx_;
};

std::set<Exponent> support(const TorusElement& a);
/// Vertices of the convex hull of the support.
std::set<Exponent> newton_vertices(const TorusElement& a);

bool in_mixed_torus(const TorusElement& a, const IndexProfile& idx);
bool in_ell_power_subring(const TorusElement& a, long ell);
bool in_ell_power_subring(const TorusElement& a, long ell, const IndexProfile& idx);

Exponent add_exponents(const Exponent& a, const Exponent& b);
Exponent sub_exponents(const Exponent& a, const Exponent& b);
Exponent scale_exponent(const Exponent& a, long s);
Exponent unit_vector(int n, int i, long s = 1);

}  // namespace rootqca
