#pragma once

// Exact arithmetic in Z[z] and Q(z), z a primitive ell-th root of unity,
// realized as residues modulo the ell-th cyclotomic polynomial.

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootqca {

class CycContext;
using CycContextPtr = std::shared_ptr<const CycContext>;

struct ContextMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class CycContext {
 public:
  /// Returns the (cached, shared) context for Z[z]/Phi_ell. Throws on ell <= 0.
  static CycContextPtr make(long ell);

  long ell() const { return ell_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  /// Coefficients of Phi_ell, lowest degree first; monic.
  const std::vector<mpz_class>& phi() const { return phi_; }
  /// Reduced residue of x^(k mod ell).
  const std::vector<mpz_class>& zeta_power(long k) const;

  CycContext(long ell, std::vector<mpz_class> phi);

 private:
  long ell_;
  std::vector<mpz_class> phi_;
  std::vector<std::vector<mpz_class>> powers_;
};

/// Computes Phi_ell by exact division of x^ell - 1 by Phi_d, d a proper divisor.
std::vector<mpz_class> cyclotomic_polynomial(long ell);

class CycInt {
 public:
  explicit CycInt(CycContextPtr ctx);
  /// Any-length polynomial; reduced into the canonical residue.
  CycInt(CycContextPtr ctx, std::vector<mpz_class> poly);
  CycInt(CycContextPtr ctx, const mpz_class& value);

  static CycInt zeta_pow(const CycContextPtr& ctx, long k);

  const CycContextPtr& context() const { return ctx_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// True when all coefficients above degree 0 vanish.
  bool is_integer() const;
  /// Non-negative gcd of the coefficients.
  mpz_class content() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const mpz_class& k);
  CycInt& divexact(const mpz_class& k);
  CycInt times_zeta(long k) const;

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator-(CycInt a);
  friend bool operator==(const CycInt& a, const CycInt& b);
  friend std::strong_ordering operator<=>(const CycInt& a, const CycInt& b);

  /// Polynomial in `z`, e.g. "1 - 2*z^2".
  std::string to_string() const;

 private:
  void check_same(const CycInt& o) const;

  CycContextPtr ctx_;
  std::vector<mpz_class> coeffs_;
};

/// An element of Q(z) kept as num / den with a single positive integer
/// denominator coprime to the content of num.
class CycRat {
 public:
  explicit CycRat(CycContextPtr ctx);
  CycRat(const CycInt& num);  // NOLINT: implicit embedding Z[z] -> Q(z)
  CycRat(CycInt num, mpz_class den);
  CycRat(CycContextPtr ctx, const mpq_class& value);

  static CycRat zeta_pow(const CycContextPtr& ctx, long k) { return CycRat(CycInt::zeta_pow(ctx, k)); }

  const CycContextPtr& context() const { return num_.context(); }
  const CycInt& num() const { return num_; }
  const mpz_class& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const { return num_.is_integer(); }

  CycRat inverse() const;
  CycRat div_by_int(const mpz_class& i) const;
  CycRat times_zeta(long k) const;

  CycRat& operator+=(const CycRat& o);
  CycRat& operator-=(const CycRat& o);
  CycRat& operator*=(const CycRat& o);
  friend CycRat operator+(CycRat a, const CycRat& b) { return a += b; }
  friend CycRat operator-(CycRat a, const CycRat& b) { return a -= b; }
  friend CycRat operator*(CycRat a, const CycRat& b) { return a *= b; }
  friend CycRat operator/(const CycRat& a, const CycRat& b) { return a * b.inverse(); }
  friend CycRat operator-(CycRat a);
  friend bool operator==(const CycRat& a, const CycRat& b) = default;
  friend std::strong_ordering operator<=>(const CycRat& a, const CycRat& b);

  /// "1 - 2*z^2", "z/3", "(1 + z)/2".
  std::string to_string() const;

 private:
  void normalize();

  CycInt num_;
  mpz_class den_{1};
};

}  // namespace rootqca
