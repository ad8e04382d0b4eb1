#include "rootqca/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rootqca/trace.hpp"

namespace rootqca {

namespace {

bool is_zero(const IVec& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

IVec scaled(const IVec& v, long k) {
  IVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
  return out;
}

long dot(const IVec& a, const IVec& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string vec_string(const IVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

IntMatrix rows_matrix(const std::vector<IVec>& rows, int n) {
  IntMatrix m(static_cast<int>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n; ++j) m(static_cast<int>(i), j) = rows[i][j];
  return m;
}

// Integer x with x * M = v, or nullopt.
std::optional<std::vector<mpz_class>> solve_rows(const IntMatrix& M, const std::vector<mpz_class>& v) {
  const HnfResult h = hnf(M);
  std::vector<mpz_class> rem = v;
  std::vector<mpz_class> y(M.rows(), 0);
  for (int i = 0; i < h.rank; ++i) {
    const int p = h.pivots[i];
    for (int j = 0; j < p; ++j)
      if (rem[j] != 0) return std::nullopt;
    if (rem[p] % h.H(i, p) != 0) return std::nullopt;
    y[i] = rem[p] / h.H(i, p);
    for (int j = 0; j < M.cols(); ++j) rem[j] -= y[i] * h.H(i, j);
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  std::vector<mpz_class> x(M.rows(), 0);
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.rows(); ++j) x[j] += y[i] * h.U(i, j);
  return x;
}

std::vector<mpz_class> to_mpz(const IVec& v) { return {v.begin(), v.end()}; }

IVec to_long(const std::vector<mpz_class>& v) {
  IVec out;
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw std::overflow_error("monoid: coordinate overflow");
    out.push_back(x.get_si());
  }
  return out;
}

mpz_class lcm_den(const QVec& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

IVec integer_form(const QVec& q) {
  const mpz_class l = lcm_den(q);
  IVec out;
  for (const auto& x : q) {
    mpq_class v = x * l;
    out.push_back(v.get_num().get_si());
  }
  return out;
}

bool is_integer_form(const QVec& q) {
  return std::all_of(q.begin(), q.end(), [](const mpq_class& x) { return x.get_den() == 1; });
}

// Finitely generated monoid split as (pointed part) + (lattice of the lineality part).
struct Engine {
  int n = 0;
  std::vector<IVec> gens;
  std::vector<int> pointed;   // indices into gens
  std::vector<int> lineal;    // indices into gens
  IVec w;                     // w.h = 0 on lineality, w.p >= 1 on pointed
  std::vector<long> relation; // positive integer relation among lineality generators
  IntMatrix lineal_rows;

  explicit Engine(const std::vector<IVec>& g) : gens(g) {
    n = static_cast<int>(g.front().size());
    const std::vector<IVec> lin = lineality_generators(g);
    const std::set<IVec> lin_set(lin.begin(), lin.end());
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (is_zero(g[i])) continue;
      if (lin_set.count(g[i]))
        lineal.push_back(static_cast<int>(i));
      else
        pointed.push_back(static_cast<int>(i));
    }
    std::vector<IVec> lrows;
    for (int i : lineal) lrows.push_back(g[i]);
    lineal_rows = rows_matrix(lrows, n);
    compute_witness();
    compute_relation();
  }

  void compute_witness() {
    const std::size_t cols = 2 * n + pointed.size();
    QMat A;
    QVec b;
    for (int i : lineal) {
      QVec row(cols, 0);
      for (int j = 0; j < n; ++j) {
        row[j] = gens[i][j];
        row[n + j] = -gens[i][j];
      }
      A.push_back(row);
      b.push_back(0);
    }
    for (std::size_t r = 0; r < pointed.size(); ++r) {
      QVec row(cols, 0);
      for (int j = 0; j < n; ++j) {
        row[j] = gens[pointed[r]][j];
        row[n + j] = -gens[pointed[r]][j];
      }
      row[2 * n + r] = -1;
      A.push_back(row);
      b.push_back(1);
    }
    w.assign(n, 0);
    if (A.empty()) return;
    auto sol = lp_feasible(A, b);
    if (!sol) throw std::logic_error("monoid: no grading on the pointed part");
    QVec q(n);
    for (int j = 0; j < n; ++j) q[j] = (*sol)[j] - (*sol)[n + j];
    w = integer_form(q);
  }

  void compute_relation() {
    if (lineal.empty()) return;
    // sum c_h h = 0 with c_h >= 1, written c_h = 1 + s_h.
    QMat A(n, QVec(lineal.size(), 0));
    QVec b(n, 0);
    for (int j = 0; j < n; ++j)
      for (std::size_t i = 0; i < lineal.size(); ++i) {
        A[j][i] = gens[lineal[i]][j];
        b[j] -= gens[lineal[i]][j];
      }
    auto sol = lp_feasible(A, b);
    if (!sol) throw std::logic_error("monoid: lineality part has no positive relation");
    QVec c(lineal.size());
    for (std::size_t i = 0; i < lineal.size(); ++i) c[i] = (*sol)[i] + 1;
    relation = integer_form(c);
  }

  // Nonnegative multiplicities of the lineality generators summing to r, if r lies in their lattice.
  std::optional<std::vector<long>> lineal_combination(const IVec& r) const {
    if (lineal.empty()) {
      if (is_zero(r)) return std::vector<long>{};
      return std::nullopt;
    }
    auto x = solve_rows(lineal_rows, to_mpz(r));
    if (!x) return std::nullopt;
    mpz_class k = 0;
    for (std::size_t i = 0; i < lineal.size(); ++i)
      if ((*x)[i] < 0) {
        mpz_class need = (-(*x)[i] + relation[i] - 1) / relation[i];
        if (need > k) k = need;
      }
    std::vector<mpz_class> c(lineal.size());
    for (std::size_t i = 0; i < lineal.size(); ++i) c[i] = (*x)[i] + k * relation[i];
    return to_long(c);
  }

  bool search(std::size_t i, const IVec& res, std::vector<long>& mult, std::set<std::pair<std::size_t, IVec>>& dead,
              std::vector<long>& lin_out) const {
    if (dead.count({i, res})) return false;
    if (i == pointed.size()) {
      auto lc = lineal_combination(res);
      if (lc) {
        lin_out = *lc;
        return true;
      }
      dead.insert({i, res});
      return false;
    }
    const IVec& p = gens[pointed[i]];
    const long wp = dot(w, p);
    const long budget = dot(w, res);
    IVec cur = res;
    for (long a = 0; a * wp <= budget; ++a) {
      mult[i] = a;
      if (search(i + 1, cur, mult, dead, lin_out)) return true;
      for (int j = 0; j < n; ++j) cur[j] -= p[j];
    }
    mult[i] = 0;
    dead.insert({i, res});
    return false;
  }

  MemberResult member(const IVec& f) const {
    MemberResult r;
    if (static_cast<int>(f.size()) != n) throw std::invalid_argument("monoid_member: vector has the wrong length");
    if (dot(w, f) < 0) {
      r.reason = "grading is negative";
      return r;
    }
    std::vector<long> mult(pointed.size(), 0);
    std::vector<long> lin;
    std::set<std::pair<std::size_t, IVec>> dead;
    if (!search(0, f, mult, dead, lin)) {
      r.reason = "no nonnegative integer combination";
      return r;
    }
    r.member = true;
    r.combination.assign(gens.size(), 0);
    for (std::size_t i = 0; i < pointed.size(); ++i) r.combination[pointed[i]] = mult[i];
    for (std::size_t i = 0; i < lineal.size(); ++i) r.combination[lineal[i]] = lin[i];
    return r;
  }
};

bool halfspace_member(const MonoidSpec& m, const IVec& f) {
  if (is_zero(f)) return true;
  for (const auto& h : m.halfspaces) {
    mpq_class v = 0;
    for (int i = 0; i < m.n; ++i) v += h.form[i] * f[i];
    if (h.strict ? v <= 0 : v < 0) return false;
  }
  return true;
}

// Least k >= 2 with k f in Phi.
long least_multiplier(const Engine& e, const IVec& f) {
  for (long k = 2; k <= 1000000; ++k)
    if (e.member(scaled(f, k)).member) return k;
  throw std::logic_error("monoid: no multiple of the certificate lies in the monoid");
}

std::vector<mpz_class> row_times(const std::vector<mpz_class>& x, const IntMatrix& M) {
  std::vector<mpz_class> out(M.cols(), 0);
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) out[j] += x[i] * M(i, j);
  return out;
}

// Lattice points of the half-open parallelepiped spanned by the rows of M (square, nonsingular).
std::vector<IVec> parallelepiped_points(const std::vector<IVec>& rays) {
  const int q = static_cast<int>(rays.size());
  const IntMatrix M = rows_matrix(rays, q);
  const SnfResult s = snf(M);
  const IntMatrix Vinv = hnf(s.V).U;
  // Rational inverse of M by Gauss-Jordan.
  QMat A(q, QVec(2 * q, 0));
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) A[i][j] = M.get(i, j);
    A[i][q + i] = 1;
  }
  for (int c = 0; c < q; ++c) {
    int p = c;
    while (A[p][c] == 0) ++p;
    std::swap(A[p], A[c]);
    const mpq_class piv = A[c][c];
    for (auto& v : A[c]) v /= piv;
    for (int r = 0; r < q; ++r) {
      if (r == c || A[r][c] == 0) continue;
      const mpq_class f = A[r][c];
      for (int j = 0; j < 2 * q; ++j) A[r][j] -= f * A[c][j];
    }
  }
  std::vector<long> diag(q);
  for (int i = 0; i < q; ++i) diag[i] = s.S.get(i, i);
  std::vector<IVec> out;
  std::vector<long> c(q, 0);
  for (;;) {
    const std::vector<mpz_class> v = row_times(std::vector<mpz_class>(c.begin(), c.end()), Vinv);
    // lambda = v M^{-1}; keep the fractional parts.
    std::vector<mpq_class> lam(q, 0);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) lam[j] += mpq_class(v[i]) * A[i][q + j];
    for (auto& x : lam) {
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
      x -= fl;
    }
    std::vector<mpq_class> pt(q, 0);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) pt[j] += lam[i] * M.get(i, j);
    IVec ip;
    for (const auto& x : pt) ip.push_back(x.get_num().get_si());
    out.push_back(ip);
    int k = 0;
    while (k < q && ++c[k] == diag[k]) c[k++] = 0;
    if (k == q) break;
  }
  return out;
}

void combinations(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

MonoidVerdict classify_generators(const MonoidSpec& m) {
  MonoidVerdict v;
  v.integrally_closed = true;
  const Engine full(m.generators);
  const IntMatrix B = group_closure(m);
  const int r = B.cols();
  auto finish_failure = [&](const IVec& f, const std::string& why) {
    v.integrally_convex = false;
    v.witness = f;
    v.multiplier = least_multiplier(full, f);
    v.certificate = why + ": " + std::to_string(v.multiplier) + "*" + vec_string(f) + " lies in the monoid, " +
                    vec_string(f) + " does not";
  };
  if (r == 0) {
    v.integrally_convex = true;
    v.maximal_order = true;
    v.certificate = "trivial monoid";
    return v;
  }
  // Coordinates in the basis of the group closure.
  const IntMatrix Bt = B.transpose();
  auto coords = [&](const IVec& f) { return to_long(*solve_rows(Bt, to_mpz(f))); };
  auto ambient = [&](const std::vector<mpz_class>& x) { return to_long(row_times(x, Bt)); };

  std::vector<IVec> lin_c;
  for (int i : full.lineal) lin_c.push_back(coords(m.generators[i]));
  IntMatrix V = IntMatrix::identity(r);
  int h = 0;
  if (!lin_c.empty()) {
    const SnfResult s = snf(rows_matrix(lin_c, r));
    h = s.rank;
    V = s.V;
    const IntMatrix Vinv = hnf(s.V).U;
    for (int i = 0; i < h; ++i)
      if (s.S(i, i) != 1) {
        std::vector<mpz_class> row(r);
        for (int j = 0; j < r; ++j) row[j] = Vinv(i, j);
        finish_failure(ambient(row), "lineality lattice is not saturated");
        return v;
      }
  }
  const IntMatrix Vinv = hnf(V).U;
  const int q = r - h;
  auto project = [&](const IVec& x) {
    const std::vector<mpz_class> y = row_times(to_mpz(x), V);
    return to_long(std::vector<mpz_class>(y.begin() + h, y.end()));
  };
  auto lift = [&](const IVec& g) {
    std::vector<mpz_class> y(r, 0);
    for (int i = 0; i < q; ++i) y[h + i] = g[i];
    return ambient(row_times(y, Vinv));
  };
  if (q == 0) {
    v.integrally_convex = true;
    v.maximal_order = true;
    v.certificate = "group";
    return v;
  }
  std::vector<IVec> pq;
  for (int i : full.pointed) pq.push_back(project(coords(m.generators[i])));
  const Engine quot(pq);
  const std::vector<IVec> rays = extreme_rays(pq);
  std::set<IVec> seen;
  std::vector<IVec> candidates;
  for (const auto& ray : rays)
    if (seen.insert(ray).second) candidates.push_back(ray);
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  combinations(static_cast<int>(rays.size()), q, 0, cur, subsets);
  for (const auto& sub : subsets) {
    std::vector<IVec> sr;
    for (int i : sub) sr.push_back(rays[i]);
    if (determinant(rows_matrix(sr, q)) == 0) continue;
    for (auto& p : parallelepiped_points(sr))
      if (!is_zero(p) && seen.insert(p).second) candidates.push_back(p);
  }
  std::sort(candidates.begin(), candidates.end(), [](const IVec& a, const IVec& b) {
    long sa = 0, sb = 0;
    for (long x : a) sa += std::abs(x);
    for (long x : b) sb += std::abs(x);
    return sa != sb ? sa < sb : a < b;
  });
  for (const auto& c : candidates)
    if (!quot.member(c).member) {
      finish_failure(lift(c), "Hilbert basis candidate outside the monoid");
      return v;
    }
  v.integrally_convex = true;
  v.maximal_order = true;
  v.certificate = "saturated: " + std::to_string(candidates.size()) + " Hilbert basis candidates are members";
  return v;
}

MonoidVerdict classify_halfspaces(const MonoidSpec& m) {
  MonoidVerdict v;
  v.integrally_convex = true;
  std::vector<IVec> weak;
  std::vector<const Halfspace*> strict;
  for (const auto& h : m.halfspaces) {
    if (h.strict)
      strict.push_back(&h);
    else
      weak.push_back(integer_form(h.form));
  }
  if (strict.empty()) {
    v.integrally_closed = true;
    v.maximal_order = true;
    v.certificate = "non-strict halfspace system";
    return v;
  }
  if (strict.size() > 1) throw std::invalid_argument("classify: systems with more than one strict form are not supported");
  if (!is_integer_form(strict.front()->form))
    throw std::invalid_argument("classify: the strict form must have integer coefficients");
  const IVec L1 = integer_form(strict.front()->form);
  IVec negL1(L1.size());
  for (std::size_t i = 0; i < L1.size(); ++i) negL1[i] = -L1[i];
  const bool positive_part = cone_has_positive(weak, L1);
  const bool face_trivial = cone_face_trivial(weak, L1);
  v.redundant = !cone_has_positive(weak, negL1) && face_trivial;
  if (positive_part && !face_trivial) {
    v.integrally_closed = false;
    v.certificate = "the face L1 = 0 of the cone carries rays of the group that are limits of rays of the monoid";
  } else {
    v.integrally_closed = true;
    v.certificate = positive_part ? "the face L1 = 0 of the cone is {0}" : "monoid is {0}";
  }
  v.maximal_order = v.integrally_convex && v.integrally_closed;
  return v;
}

}  // namespace

MonoidSpec MonoidSpec::from_generators(std::vector<IVec> gens) {
  MonoidSpec m;
  if (gens.empty()) throw std::invalid_argument("monoid: generator list is empty");
  m.n = static_cast<int>(gens.front().size());
  m.generators = std::move(gens);
  m.validate();
  return m;
}

MonoidSpec MonoidSpec::from_halfspaces(int n, std::vector<Halfspace> hs) {
  MonoidSpec m;
  m.n = n;
  m.halfspaces = std::move(hs);
  m.validate();
  return m;
}

void MonoidSpec::validate() const {
  if (n <= 0) throw std::invalid_argument("monoid: rank must be positive");
  if (!generators.empty() && !halfspaces.empty())
    throw std::invalid_argument("monoid: give either generators or halfspaces, not both");
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("monoid: generators have different lengths");
  for (const auto& h : halfspaces) {
    if (static_cast<int>(h.form.size()) != n) throw std::invalid_argument("monoid: form has the wrong length");
    if (std::all_of(h.form.begin(), h.form.end(), [](const mpq_class& x) { return x == 0; }))
      throw std::invalid_argument("monoid: zero linear form");
  }
}

std::vector<IVec> parse_generators(const std::string& text) {
  std::vector<IVec> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    IVec v;
    std::stringstream is(item);
    std::string num;
    while (std::getline(is, num, ',')) {
      std::size_t used = 0;
      long x = 0;
      try {
        x = std::stol(num, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("generators: bad integer '" + num + "'");
      }
      while (used < num.size() && std::isspace(static_cast<unsigned char>(num[used]))) ++used;
      if (used != num.size()) throw std::invalid_argument("generators: bad integer '" + num + "'");
      v.push_back(x);
    }
    if (v.empty()) throw std::invalid_argument("generators: empty vector");
    if (!out.empty() && v.size() != out.front().size())
      throw std::invalid_argument("generators: vectors have different lengths");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("generators: nothing to parse");
  return out;
}

namespace {

// sum of terms c, c*xi, c xi, xi/c; returns coefficients of x1..xn and the constant.
std::pair<QVec, mpq_class> parse_linear(const std::string& s, int n) {
  QVec form(n, 0);
  mpq_class constant = 0;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto read_int = [&]() -> std::optional<mpz_class> {
    skip();
    const std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i) return std::nullopt;
    return mpz_class(s.substr(b, i - b));
  };
  bool first = true;
  skip();
  if (i == s.size()) throw std::invalid_argument("halfspace: empty side");
  while (i < s.size()) {
    int sign = 1;
    skip();
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("halfspace: expected + or - at position " + std::to_string(i));
    }
    first = false;
    mpq_class coef = 1;
    bool has_num = false;
    if (auto a = read_int()) {
      coef = *a;
      has_num = true;
      skip();
      if (i < s.size() && s[i] == '/') {
        ++i;
        auto d = read_int();
        if (!d || *d == 0) throw std::invalid_argument("halfspace: bad denominator");
        coef /= *d;
      }
      skip();
      if (i < s.size() && s[i] == '*') ++i;
    }
    skip();
    if (i < s.size() && s[i] == 'x') {
      ++i;
      auto idx = read_int();
      if (!idx || *idx < 1 || *idx > n)
        throw std::invalid_argument("halfspace: variable index out of range 1.." + std::to_string(n));
      skip();
      if (i < s.size() && s[i] == '/') {
        ++i;
        auto d = read_int();
        if (!d || *d == 0) throw std::invalid_argument("halfspace: bad denominator");
        coef /= *d;
      }
      form[idx->get_si() - 1] += sign * coef;
    } else if (has_num) {
      constant += sign * coef;
    } else {
      throw std::invalid_argument("halfspace: expected a term at position " + std::to_string(i));
    }
    skip();
  }
  return {form, constant};
}

}  // namespace

Halfspace parse_halfspace(const std::string& text, int n) {
  static const std::vector<std::pair<std::string, int>> ops{{">=", 0}, {"<=", 1}, {">", 2}, {"<", 3}};
  for (const auto& [op, kind] : ops) {
    const std::size_t at = text.find(op);
    if (at == std::string::npos) continue;
    const auto [lf, lc] = parse_linear(text.substr(0, at), n);
    const auto [rf, rc] = parse_linear(text.substr(at + op.size()), n);
    if (lc != rc) throw std::invalid_argument("halfspace: only homogeneous inequalities are supported");
    Halfspace h;
    h.strict = kind >= 2;
    const bool flip = kind == 1 || kind == 3;
    h.form.resize(n);
    for (int i = 0; i < n; ++i) h.form[i] = flip ? rf[i] - lf[i] : lf[i] - rf[i];
    if (std::all_of(h.form.begin(), h.form.end(), [](const mpq_class& x) { return x == 0; }))
      throw std::invalid_argument("halfspace: zero linear form");
    return h;
  }
  throw std::invalid_argument("halfspace: expected one of >=, <=, >, < in '" + text + "'");
}

IntMatrix group_closure(const MonoidSpec& m) {
  m.validate();
  if (m.generator_form()) {
    const HnfResult h = hnf(rows_matrix(m.generators, m.n));
    IntMatrix B(m.n, h.rank);
    for (int i = 0; i < h.rank; ++i)
      for (int j = 0; j < m.n; ++j) B(j, i) = h.H(i, j);
    return B;
  }
  std::vector<IVec> weak;
  IVec strict;
  for (const auto& h : m.halfspaces) {
    if (h.strict)
      strict = integer_form(h.form);
    else
      weak.push_back(integer_form(h.form));
  }
  if (!strict.empty() && !cone_has_positive(weak, strict)) return IntMatrix(m.n, 0);
  // The span of the cone is cut out by the forms that vanish on all of it.
  std::vector<IVec> implicit;
  for (const auto& f : weak)
    if (!cone_has_positive(weak, f)) implicit.push_back(f);
  if (implicit.empty()) return IntMatrix::identity(m.n);
  return integer_kernel(rows_matrix(implicit, m.n));
}

MemberResult monoid_member(const MonoidSpec& m, const IVec& f) {
  m.validate();
  if (static_cast<int>(f.size()) != m.n) throw std::invalid_argument("monoid_member: vector has the wrong length");
  if (!m.generator_form()) {
    MemberResult r;
    r.member = halfspace_member(m, f);
    if (!r.member) r.reason = "violates an inequality";
    return r;
  }
  return Engine(m.generators).member(f);
}

MonoidVerdict classify(const MonoidSpec& m) {
  m.validate();
  return m.generator_form() ? classify_generators(m) : classify_halfspaces(m);
}

mpz_class ch_degree_monomial(const MonoidSpec& m, const Bicharacter& lambda) {
  if (lambda.n() != m.n) throw std::invalid_argument("ch_degree: rank of lambda differs from the monoid rank");
  const IntMatrix B = group_closure(m);
  if (B.cols() == 0) return 1;
  return restricted_kernel(lambda, B).pi_degree;
}

bool monomial_ch_verify(const MonoidSpec& m, const Bicharacter& lambda, const std::vector<TorusElement>& samples) {
  if (lambda.n() != m.n) throw std::invalid_argument("ch_verify: rank of lambda differs from the monoid rank");
  std::optional<Engine> engine;
  if (m.generator_form()) engine.emplace(m.generators);
  for (const auto& a : samples)
    for (const auto& [f, c] : a.terms()) {
      const bool in = engine ? engine->member(f).member : halfspace_member(m, f);
      if (!in) throw std::invalid_argument("ch_verify: sample has support " + vec_string(f) + " outside the monoid");
    }
  const IntMatrix B = group_closure(m);
  if (B.cols() == 0) return true;
  const QuantumTorus T(lambda);
  const TraceOperator tr(lambda, TraceKind::Reduced, B);
  const long d = tr.pi_degree().get_si();
  for (const auto& a : samples)
    if (!verify_cayley_hamilton(T, a, tr, d).is_zero) return false;
  return true;
}

}  // namespace rootqca
