#include "rootqca/polyhedral.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rootqca {

namespace {

// Dense tableau; the last column of each row is the right-hand side.
struct Tableau {
  QMat rows;
  std::vector<int> basis;
  QVec obj;  // reduced costs, obj.back() = -(current objective)
  int ncols = 0;

  void pivot(int r, int c) {
    const mpq_class p = rows[r][c];
    for (auto& v : rows[r]) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][c] == 0) continue;
      const mpq_class f = rows[i][c];
      for (int j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (obj[c] != 0) {
      const mpq_class f = obj[c];
      for (int j = 0; j <= ncols; ++j) obj[j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  void set_costs(const QVec& cost) {
    obj.assign(ncols + 1, 0);
    for (int j = 0; j < ncols; ++j) obj[j] = cost[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const mpq_class& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= ncols; ++j) obj[j] -= cb * rows[i][j];
    }
  }

  // Minimizes over the allowed columns. Returns false when unbounded.
  bool run(const std::vector<bool>& allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncols; ++j)
        if (allowed[j] && obj[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      mpq_class best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        mpq_class ratio = rows[i][ncols] / rows[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

// Phase I. On success the tableau holds a feasible basis over the original columns.
bool phase_one(const QMat& A, const QVec& b, Tableau& t) {
  const int m = static_cast<int>(A.size());
  const int n = m ? static_cast<int>(A[0].size()) : 0;
  t.ncols = n + m;
  t.rows.assign(m, QVec(n + m + 1, 0));
  t.basis.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    const int s = b[i] < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) t.rows[i][j] = s * A[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][n + m] = s * b[i];
    t.basis[i] = n + i;
  }
  QVec cost(n + m, 0);
  for (int i = 0; i < m; ++i) cost[n + i] = 1;
  t.set_costs(cost);
  t.run(std::vector<bool>(n + m, true));
  if (t.obj[n + m] != 0) return false;
  // Drive artificial variables out; drop redundant rows.
  for (int i = m - 1; i >= 0; --i) {
    if (t.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (t.rows[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0) {
      t.pivot(i, col);
    } else {
      t.rows.erase(t.rows.begin() + i);
      t.basis.erase(t.basis.begin() + i);
    }
  }
  // Remove artificial columns.
  for (auto& row : t.rows) {
    mpq_class rhs = row[n + m];
    row.resize(n + 1);
    row[n] = rhs;
  }
  t.ncols = n;
  return true;
}

QVec extract(const Tableau& t) {
  QVec x(t.ncols, 0);
  for (std::size_t i = 0; i < t.rows.size(); ++i) x[t.basis[i]] = t.rows[i][t.ncols];
  return x;
}

mpz_class lcm_of_denominators(const QVec& v) {
  mpz_class l = 1;
  for (const auto& q : v) l = lcm(l, q.get_den());
  return l;
}

}  // namespace

std::optional<QVec> lp_feasible(const QMat& A, const QVec& b) {
  if (A.empty()) return QVec{};
  Tableau t;
  if (!phase_one(A, b, t)) return std::nullopt;
  return extract(t);
}

LpResult lp_maximize(const QMat& A, const QVec& b, const QVec& c) {
  LpResult res;
  Tableau t;
  if (!phase_one(A, b, t)) return res;
  res.feasible = true;
  QVec cost(t.ncols);
  for (int j = 0; j < t.ncols; ++j) cost[j] = -c[j];
  t.set_costs(cost);
  if (!t.run(std::vector<bool>(t.ncols, true))) {
    res.unbounded = true;
    return res;
  }
  res.x = extract(t);
  res.value = t.obj[t.ncols];
  return res;
}

IVec primitive(const IVec& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, std::labs(x));
  if (g <= 1) return v;
  IVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

namespace {

bool is_zero_vec(const IVec& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

// lambda >= 0, sum lambda_i g_i = p (and sum lambda = 1 when affine).
bool combination_exists(const std::vector<IVec>& gens, const IVec& p, bool affine) {
  const std::size_t dim = p.size();
  if (gens.empty()) return !affine && is_zero_vec(p);
  QMat A(dim + (affine ? 1 : 0), QVec(gens.size(), 0));
  QVec b(A.size(), 0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) A[i][j] = gens[j][i];
    b[i] = p[i];
  }
  if (affine) {
    for (std::size_t j = 0; j < gens.size(); ++j) A[dim][j] = 1;
    b[dim] = 1;
  }
  return lp_feasible(A, b).has_value();
}

// Feasibility of {F x >= 0, E x = e} with x free (split as x+ - x-).
bool free_system_feasible(const std::vector<IVec>& F, const std::vector<IVec>& E, const QVec& e, std::size_t n) {
  const std::size_t nf = F.size();
  const std::size_t cols = 2 * n + nf;
  QMat A;
  QVec b;
  for (std::size_t r = 0; r < nf; ++r) {
    QVec row(cols, 0);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = F[r][j];
      row[n + j] = -F[r][j];
    }
    row[2 * n + r] = -1;
    A.push_back(row);
    b.push_back(0);
  }
  for (std::size_t r = 0; r < E.size(); ++r) {
    QVec row(cols, 0);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = E[r][j];
      row[n + j] = -E[r][j];
    }
    A.push_back(row);
    b.push_back(e[r]);
  }
  return lp_feasible(A, b).has_value();
}

}  // namespace

bool in_convex_hull(const std::vector<IVec>& pts, const IVec& p) { return combination_exists(pts, p, true); }

std::vector<IVec> hull_vertices(const std::vector<IVec>& pts) {
  std::vector<IVec> uniq(pts.begin(), pts.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<IVec> out;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    std::vector<IVec> others;
    for (std::size_t j = 0; j < uniq.size(); ++j)
      if (j != i) others.push_back(uniq[j]);
    if (!in_convex_hull(others, uniq[i])) out.push_back(uniq[i]);
  }
  return out;
}

bool in_cone(const std::vector<IVec>& gens, const IVec& p) { return combination_exists(gens, p, false); }

std::vector<IVec> extreme_rays(const std::vector<IVec>& gens) {
  std::set<IVec> prim;
  for (const auto& g : gens)
    if (!is_zero_vec(g)) prim.insert(primitive(g));
  std::vector<IVec> dirs(prim.begin(), prim.end());
  std::vector<IVec> out;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    std::vector<IVec> others;
    for (std::size_t j = 0; j < dirs.size(); ++j)
      if (j != i) others.push_back(dirs[j]);
    if (!in_cone(others, dirs[i])) out.push_back(dirs[i]);
  }
  return out;
}

std::vector<IVec> lineality_generators(const std::vector<IVec>& gens) {
  std::vector<IVec> out;
  for (const auto& g : gens) {
    if (is_zero_vec(g)) continue;
    IVec neg(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
    if (in_cone(gens, neg)) out.push_back(g);
  }
  return out;
}

std::optional<IVec> pointed_witness(const std::vector<IVec>& gens) {
  std::vector<IVec> nz;
  for (const auto& g : gens)
    if (!is_zero_vec(g)) nz.push_back(g);
  if (nz.empty()) return gens.empty() ? std::nullopt : std::optional<IVec>(IVec(gens[0].size(), 0));
  const std::size_t n = nz[0].size();
  const std::size_t cols = 2 * n + nz.size();
  QMat A(nz.size(), QVec(cols, 0));
  QVec b(nz.size(), 1);
  for (std::size_t r = 0; r < nz.size(); ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      A[r][j] = nz[r][j];
      A[r][n + j] = -nz[r][j];
    }
    A[r][2 * n + r] = -1;
  }
  auto sol = lp_feasible(A, b);
  if (!sol) return std::nullopt;
  QVec w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = (*sol)[j] - (*sol)[n + j];
  const mpz_class l = lcm_of_denominators(w);
  IVec out(n);
  for (std::size_t j = 0; j < n; ++j) {
    mpq_class v = w[j] * l;
    out[j] = v.get_num().get_si();
  }
  return out;
}

bool cone_has_positive(const std::vector<IVec>& forms, const IVec& extra) {
  return free_system_feasible(forms, {extra}, {mpq_class(1)}, extra.size());
}

bool cone_face_trivial(const std::vector<IVec>& forms, const IVec& extra) {
  const std::size_t n = extra.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      IVec coord(n, 0);
      coord[i] = s;
      if (free_system_feasible(forms, {extra, coord}, {mpq_class(0), mpq_class(1)}, n)) return false;
    }
  }
  return true;
}

}  // namespace rootqca
