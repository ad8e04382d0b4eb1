#pragma once

// Integer linear algebra: Hermite and Smith normal forms, kernels, and the
// radical of a bicharacter.

#include <gmpxx.h>

#include <vector>

#include "rootqca/torus.hpp"

namespace rootqca {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(const std::vector<std::vector<long>>& rows);  // NOLINT
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const mpz_class& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  long get(int i, int j) const { return (*this)(i, j).get_si(); }

  IntMatrix transpose() const;
  std::vector<long> row(int i) const;
  std::vector<long> col(int j) const;
  std::vector<std::vector<long>> to_rows() const;
  void swap_rows(int a, int b);
  void swap_cols(int a, int b);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> data_;
};

mpz_class determinant(const IntMatrix& m);

struct HnfResult {
  IntMatrix H;  // row echelon, positive pivots, entries above pivots reduced
  IntMatrix U;  // unimodular, U * m = H
  int rank = 0;
  std::vector<int> pivots;
};
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
  IntMatrix S;  // diagonal, d_1 | d_2 | ..., nonnegative
  IntMatrix U;
  IntMatrix V;  // U * m * V = S
  int rank = 0;
};
SnfResult snf(const IntMatrix& m);

/// Columns form a basis of {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& A);

/// Membership of v in the lattice spanned by the columns of basis.
bool lattice_contains(const IntMatrix& basis, const std::vector<long>& v);

struct KernelData {
  IntMatrix basis;  // columns generate the kernel (ambient coordinates)
  mpz_class index;  // index inside the ambient lattice (or sublattice)
  mpz_class pi_degree;
  bool contains(const std::vector<long>& f) const { return lattice_contains(basis, f); }
};

/// Ker(L) = {f : L(f, g) = 0 mod ell for all g}.
KernelData kernel_mod_ell(const Bicharacter& lambda);
/// Kernel of L restricted to the lattice spanned by the columns of sub.
KernelData restricted_kernel(const Bicharacter& lambda, const IntMatrix& sub);

/// Lambda^T Btilde == [D; 0] mod ell, rows of D placed at the exchangeable indices.
bool check_compatible(const Bicharacter& lambda, const IntMatrix& btilde, const std::vector<long>& d,
                      const IndexProfile& idx);
/// Same with D as a matrix; throws unless D is diagonal, positive, and D*B is skew-symmetric.
bool check_compatible(const Bicharacter& lambda, const IntMatrix& btilde, const IntMatrix& dmat,
                      const IndexProfile& idx);
bool check_coprime_condition(long ell, const std::vector<long>& d);

}  // namespace rootqca
