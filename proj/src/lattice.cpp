#include "rootqca/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace rootqca {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
}

IntMatrix::IntMatrix(const std::vector<std::vector<long>>& rows)
    : IntMatrix(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  for (int i = 0; i < rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != cols_) throw std::invalid_argument("matrix: ragged rows");
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = rows[i][j];
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<long> IntMatrix::row(int i) const {
  std::vector<long> r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = get(i, j);
  return r;
}

std::vector<long> IntMatrix::col(int j) const {
  std::vector<long> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = get(i, j);
  return c;
}

std::vector<std::vector<long>> IntMatrix::to_rows() const {
  std::vector<std::vector<long>> out;
  for (int i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix: dimension mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class sign = 1, prev = 1;
  // Fraction-free (Bareiss) elimination.
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

void row_axpy(IntMatrix& m, int target, int source, const mpz_class& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols(); ++j) m(target, j) -= q * m(source, j);
}

void col_axpy(IntMatrix& m, int target, int source, const mpz_class& q) {
  if (q == 0) return;
  for (int i = 0; i < m.rows(); ++i) m(i, target) -= q * m(i, source);
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  HnfResult res{m, IntMatrix::identity(m.rows()), 0, {}};
  IntMatrix& H = res.H;
  IntMatrix& U = res.U;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    for (;;) {
      int best = -1;
      for (int i = row; i < m.rows(); ++i)
        if (H(i, col) != 0 && (best < 0 || abs(H(i, col)) < abs(H(best, col)))) best = i;
      if (best < 0) break;
      H.swap_rows(row, best);
      U.swap_rows(row, best);
      bool clean = true;
      for (int i = row + 1; i < m.rows(); ++i) {
        if (H(i, col) == 0) continue;
        const mpz_class q = floor_div(H(i, col), H(row, col));
        row_axpy(H, i, row, q);
        row_axpy(U, i, row, q);
        if (H(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(row, col) == 0) continue;
    if (H(row, col) < 0) {
      for (int j = 0; j < m.cols(); ++j) H(row, j) = -H(row, j);
      for (int j = 0; j < m.rows(); ++j) U(row, j) = -U(row, j);
    }
    for (int i = 0; i < row; ++i) {
      const mpz_class q = floor_div(H(i, col), H(row, col));
      row_axpy(H, i, row, q);
      row_axpy(U, i, row, q);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

SnfResult snf(const IntMatrix& m) {
  SnfResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
  IntMatrix& S = res.S;
  const int r = m.rows(), c = m.cols();
  int t = 0;
  for (; t < std::min(r, c); ++t) {
    bool found = true;
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = t; i < r; ++i)
        for (int j = t; j < c; ++j)
          if (S(i, j) != 0 && (bi < 0 || abs(S(i, j)) < abs(S(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) {
        found = false;
        break;
      }
      S.swap_rows(t, bi);
      res.U.swap_rows(t, bi);
      S.swap_cols(t, bj);
      res.V.swap_cols(t, bj);
      bool clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (S(i, t) == 0) continue;
        const mpz_class q = floor_div(S(i, t), S(t, t));
        row_axpy(S, i, t, q);
        row_axpy(res.U, i, t, q);
        if (S(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < c; ++j) {
        if (S(t, j) == 0) continue;
        const mpz_class q = floor_div(S(t, j), S(t, t));
        col_axpy(S, j, t, q);
        col_axpy(res.V, j, t, q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < r && bad < 0; ++i)
        for (int j = t + 1; j < c; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_axpy(S, t, bad, mpz_class(-1));
      row_axpy(res.U, t, bad, mpz_class(-1));
    }
    if (!found) break;
    if (S(t, t) < 0) {
      for (int j = 0; j < c; ++j) S(t, j) = -S(t, j);
      for (int j = 0; j < r; ++j) res.U(t, j) = -res.U(t, j);
    }
  }
  res.rank = t;
  return res;
}

IntMatrix integer_kernel(const IntMatrix& A) {
  const HnfResult h = hnf(A.transpose());
  const int c = A.cols();
  IntMatrix K(c, c - h.rank);
  for (int i = h.rank; i < c; ++i)
    for (int j = 0; j < c; ++j) K(j, i - h.rank) = h.U(i, j);
  return K;
}

bool lattice_contains(const IntMatrix& basis, const std::vector<long>& v) {
  if (static_cast<int>(v.size()) != basis.rows()) throw std::invalid_argument("lattice_contains: length mismatch");
  const HnfResult h = hnf(basis.transpose());
  std::vector<mpz_class> rem(v.begin(), v.end());
  for (int i = 0; i < h.rank; ++i) {
    const int p = h.pivots[i];
    for (int j = 0; j < p; ++j)
      if (rem[j] != 0) return false;
    if (rem[p] % h.H(i, p) != 0) return false;
    const mpz_class q = rem[p] / h.H(i, p);
    for (int j = 0; j < basis.rows(); ++j) rem[j] -= q * h.H(i, j);
  }
  for (const auto& x : rem)
    if (x != 0) return false;
  return true;
}

namespace {

mpz_class exact_isqrt(const mpz_class& v) {
  mpz_class r = sqrt(v);
  if (r * r != v) throw std::logic_error("kernel: index is not a perfect square");
  return r;
}

}  // namespace

KernelData kernel_mod_ell(const Bicharacter& lambda) {
  const int N = lambda.n();
  const long ell = lambda.ell();
  // f in Ker  <=>  Lambda^T f + ell t = 0 for some integer t.
  IntMatrix block(N, 2 * N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) block(i, j) = lambda.at(j, i);
    block(i, N + i) = ell;
  }
  const IntMatrix K = integer_kernel(block);
  IntMatrix gens(K.cols(), N);
  for (int g = 0; g < K.cols(); ++g)
    for (int j = 0; j < N; ++j) gens(g, j) = K(j, g);
  const HnfResult h = hnf(gens);
  if (h.rank != N) throw std::logic_error("kernel: projection is not full rank");
  KernelData kd;
  kd.basis = IntMatrix(N, N);
  kd.index = 1;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) kd.basis(j, i) = h.H(i, j);
    kd.index *= h.H(i, h.pivots[i]);
  }
  kd.pi_degree = exact_isqrt(kd.index);
  return kd;
}

KernelData restricted_kernel(const Bicharacter& lambda, const IntMatrix& sub) {
  const int N = lambda.n();
  if (sub.rows() != N) throw std::invalid_argument("restricted_kernel: sublattice rows must equal rank");
  const int r = sub.cols();
  if (hnf(sub.transpose()).rank != r) throw std::invalid_argument("restricted_kernel: dependent columns");
  std::vector<std::vector<long>> form(r, std::vector<long>(r, 0));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) form[a][b] = lambda.pair(sub.col(a), sub.col(b));
  KernelData inner = kernel_mod_ell(Bicharacter(lambda.ell(), form));
  KernelData kd;
  kd.basis = sub * inner.basis;
  kd.index = inner.index;
  kd.pi_degree = inner.pi_degree;
  return kd;
}

bool check_compatible(const Bicharacter& lambda, const IntMatrix& btilde, const std::vector<long>& d,
                      const IndexProfile& idx) {
  const int N = lambda.n();
  const int m = static_cast<int>(idx.ex.size());
  if (btilde.rows() != N || btilde.cols() != m) throw std::invalid_argument("check_compatible: Btilde has wrong shape");
  if (static_cast<int>(d.size()) != m) throw std::invalid_argument("check_compatible: D has wrong size");
  const long ell = lambda.ell();
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < m; ++j) {
      mpz_class v = 0;
      for (int l = 0; l < N; ++l) v += lambda.at(l, i) * btilde(l, j);
      if (i == idx.ex[j]) v -= d[j];
      if (v % ell != 0) return false;
    }
  }
  return true;
}

bool check_compatible(const Bicharacter& lambda, const IntMatrix& btilde, const IntMatrix& dmat,
                      const IndexProfile& idx) {
  const int m = static_cast<int>(idx.ex.size());
  if (dmat.rows() != m || dmat.cols() != m) throw std::invalid_argument("check_compatible: D has wrong shape");
  std::vector<long> d(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j)
      if (i != j && dmat(i, j) != 0) throw std::invalid_argument("check_compatible: D is not diagonal");
    if (dmat(i, i) <= 0) throw std::invalid_argument("check_compatible: D has a nonpositive diagonal entry");
    d[i] = dmat.get(i, i);
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (d[a] * btilde.get(idx.ex[a], b) != -d[b] * btilde.get(idx.ex[b], a))
        throw std::invalid_argument("check_compatible: D*B is not skew-symmetric");
  return check_compatible(lambda, btilde, d, idx);
}

bool check_coprime_condition(long ell, const std::vector<long>& d) {
  if (ell % 2 == 0) return false;
  for (long v : d)
    if (std::gcd(ell, v) != 1) return false;
  return true;
}

}  // namespace rootqca
