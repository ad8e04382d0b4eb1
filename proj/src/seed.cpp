#include "rootqca/seed.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rootqca/parse.hpp"

namespace rootqca {

namespace {

void require_exchangeable(const IndexProfile& idx, int k) {
  if (idx.column_of(k) < 0) throw std::invalid_argument("mutation: index " + std::to_string(k + 1) + " is not exchangeable");
}

long positive_part(long v) { return v > 0 ? v : 0; }

}  // namespace

IntMatrix Seed::dmat() const {
  IntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

TorusElement Seed::frame_value(const Exponent& f) const { return ambient->normalized_product(lambda, frame, f); }

Exponent Seed::exchange_column(int k) const {
  const int c = idx.column_of(k);
  if (c < 0) throw std::invalid_argument("seed: index " + std::to_string(k + 1) + " is not exchangeable");
  return btilde.col(c);
}

Seed make_root_seed(const Bicharacter& lambda, const IntMatrix& btilde, const std::vector<long>& d,
                    const IndexProfile& idx) {
  idx.validate();
  if (idx.n != lambda.n()) throw std::invalid_argument("seed: index profile rank differs from lambda");
  for (long v : d)
    if (v <= 0) throw std::invalid_argument("seed: D must have positive diagonal");
  if (!check_compatible(lambda, btilde, d, idx)) throw std::invalid_argument("seed: (lambda, Btilde) is not compatible mod ell");
  auto ambient = std::make_shared<const QuantumTorus>(lambda);
  std::vector<TorusElement> frame;
  for (int i = 0; i < lambda.n(); ++i) frame.push_back(ambient->generator(i));
  return Seed{ambient, idx, btilde, lambda, d, std::move(frame), {}};
}

IntMatrix mutate_btilde(const IntMatrix& b, const IndexProfile& idx, int k) {
  require_exchangeable(idx, k);
  const int c = idx.column_of(k);
  IntMatrix out(b.rows(), b.cols());
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      if (i == k || j == c) {
        out(i, j) = -b(i, j);
      } else {
        const mpz_class& bik = b(i, c);
        const mpz_class& bkj = b(k, j);
        mpz_class corr = abs(bik) * bkj + bik * abs(bkj);
        out(i, j) = b(i, j) + corr / 2;
      }
    }
  }
  return out;
}

Bicharacter mutate_lambda(const Bicharacter& lambda, const IntMatrix& b, const IndexProfile& idx, int k) {
  require_exchangeable(idx, k);
  const int N = lambda.n();
  const int c = idx.column_of(k);
  // E fixes e_j (j != k); E e_k = -e_k + [b^k]_+.
  std::vector<std::vector<long>> E(N, std::vector<long>(N, 0));
  for (int i = 0; i < N; ++i) E[i][i] = 1;
  for (int i = 0; i < N; ++i) E[i][k] = i == k ? -1 : positive_part(b.get(i, c));
  std::vector<std::vector<long>> out(N, std::vector<long>(N, 0));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Exponent ei(N), ej(N);
      for (int r = 0; r < N; ++r) {
        ei[r] = E[r][i];
        ej[r] = E[r][j];
      }
      out[i][j] = lambda.pair(ei, ej);
    }
  return Bicharacter(lambda.ell(), out);
}

namespace {

struct QParts {
  Exponent plus, minus_neg;  // [b]_+ and -[b]_-
  long zp, zm;               // z-exponents for n = 1
};

QParts q_parts(const Seed& s, int k) {
  const Exponent b = s.exchange_column(k);
  QParts q{Exponent(b.size(), 0), Exponent(b.size(), 0), 0, 0};
  Exponent minus(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    q.plus[i] = positive_part(b[i]);
    minus[i] = std::min(b[i], 0L);
    q.minus_neg[i] = -minus[i];
  }
  const Exponent ek = unit_vector(s.n(), k);
  q.zp = s.lambda.pair(ek, q.plus);
  q.zm = -s.lambda.pair(ek, minus);
  return q;
}

}  // namespace

TorusElement q_element_local(const Seed& s, int k, long n) {
  const QParts q = q_parts(s, k);
  const QuantumTorus T = s.local_torus();
  const auto& ctx = T.context();
  TorusElement out = T.monomial(q.plus, CycRat::zeta_pow(ctx, n * q.zp));
  out += T.monomial(q.minus_neg, CycRat::zeta_pow(ctx, n * q.zm));
  return out;
}

TorusElement q_element(const Seed& s, int k, long n) {
  const QParts q = q_parts(s, k);
  const auto& ctx = s.ambient->context();
  TorusElement out = s.frame_value(q.plus).scaled(CycRat::zeta_pow(ctx, n * q.zp));
  out += s.frame_value(q.minus_neg).scaled(CycRat::zeta_pow(ctx, n * q.zm));
  return out;
}

TorusElement mutated_variable(const Seed& s, int k) {
  require_exchangeable(s.idx, k);
  auto y = s.ambient->left_divide(s.frame[k], q_element(s, k, 1));
  if (!y) throw std::logic_error("mutation: Q_1 is not left-divisible by x_k; seed invariants are broken");
  return *y;
}

Seed mutate_seed(const Seed& s, int k) {
  Seed out = s;
  out.frame[k] = mutated_variable(s, k);
  out.btilde = mutate_btilde(s.btilde, s.idx, k);
  out.lambda = mutate_lambda(s.lambda, s.btilde, s.idx, k);
  out.path.push_back(k);
  return out;
}

Seed mutate_along(const Seed& s, const MutationWord& word) {
  Seed cur = s;
  for (int k : word) cur = mutate_seed(cur, k);
  return cur;
}

bool ell_power_check(const Seed& s, int k) {
  if (!check_coprime_condition(s.ell(), s.d))
    throw std::invalid_argument("ell_power_check: coprime condition fails (ell must be odd and prime to D)");
  const QuantumTorus& T = *s.ambient;
  const long ell = s.ell();
  const TorusElement y = mutated_variable(s, k);
  const TorusElement lhs = T.mul(T.pow(s.frame[k], ell), T.pow(y, ell));
  const Exponent b = s.exchange_column(k);
  TorusElement pos = T.one(), neg = T.one();
  for (int i = 0; i < s.n(); ++i) {
    if (b[i] == 0) continue;
    const TorusElement p = T.pow(s.frame[i], ell * std::labs(b[i]));
    if (b[i] > 0)
      pos = T.mul(pos, p);
    else
      neg = T.mul(neg, p);
  }
  return lhs == pos + neg;
}

bool frame_quasi_commutes(const Seed& s) {
  const QuantumTorus& T = *s.ambient;
  const auto& ctx = T.context();
  for (int i = 0; i < s.n(); ++i)
    for (int j = i + 1; j < s.n(); ++j) {
      const TorusElement lhs = T.mul(s.frame[i], s.frame[j]);
      const TorusElement rhs = T.mul(s.frame[j], s.frame[i]).scaled(CycRat::zeta_pow(ctx, 2 * s.lambda.at(i, j)));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool exchange_identity_holds(const Seed& s, int k) {
  const TorusElement y = mutated_variable(s, k);
  return s.ambient->mul(s.frame[k], y) == q_element(s, k, 1);
}

bool seed_compatible(const Seed& s) { return check_compatible(s.lambda, s.btilde, s.d, s.idx); }

// ---------------------------------------------------------------- classical

ClassicalSeed make_classical_root(const IntMatrix& btilde, const IndexProfile& idx) {
  idx.validate();
  auto ring = std::make_shared<const QuantumTorus>(Bicharacter::zero(1, idx.n));
  std::vector<TorusElement> frame;
  for (int i = 0; i < idx.n; ++i) frame.push_back(ring->generator(i));
  return ClassicalSeed{ring, idx, btilde, std::move(frame), {}};
}

ClassicalSeed mutate_seed(const ClassicalSeed& s, int k) {
  require_exchangeable(s.idx, k);
  const QuantumTorus& R = *s.ring;
  const int c = s.idx.column_of(k);
  TorusElement pos = R.one(), neg = R.one();
  for (int i = 0; i < s.n(); ++i) {
    const long b = s.btilde.get(i, c);
    if (b > 0) pos = R.mul(pos, R.pow(s.frame[i], b));
    if (b < 0) neg = R.mul(neg, R.pow(s.frame[i], -b));
  }
  auto y = R.left_divide(s.frame[k], pos + neg);
  if (!y) throw std::logic_error("classical mutation: exchange binomial is not divisible by x_k");
  ClassicalSeed out = s;
  out.frame[k] = *y;
  out.btilde = mutate_btilde(s.btilde, s.idx, k);
  out.path.push_back(k);
  return out;
}

ClassicalSeed mutate_along(const ClassicalSeed& s, const MutationWord& word) {
  ClassicalSeed cur = s;
  for (int k : word) cur = mutate_seed(cur, k);
  return cur;
}

std::optional<std::vector<TorusElement>> ell_power_shadow(const Seed& s, const QuantumTorus& classical_ring) {
  const long ell = s.ell();
  std::vector<TorusElement> out;
  for (const auto& x : s.frame) {
    const TorusElement p = s.ambient->pow(x, ell);
    TorusElement t = classical_ring.zero();
    for (const auto& [f, c] : p.terms()) {
      if (!c.is_rational()) return std::nullopt;
      Exponent g(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] % ell != 0) return std::nullopt;
        g[i] = f[i] / ell;
      }
      t.add_term(g, CycRat(classical_ring.context(), mpq_class(c.num().coeffs()[0], c.den())));
    }
    out.push_back(std::move(t));
  }
  return out;
}

// ---------------------------------------------------------------- keys

namespace {

std::string serialize(const IntMatrix& bt, const Bicharacter* lam, const std::vector<long>* d,
                      const std::vector<std::string>& frame, const std::vector<int>& perm,
                      const std::vector<int>& colperm) {
  std::ostringstream os;
  const int N = static_cast<int>(perm.size());
  os << "B";
  for (int i = 0; i < N; ++i) {
    os << '[';
    for (std::size_t j = 0; j < colperm.size(); ++j) os << bt.get(perm[i], colperm[j]) << ',';
    os << ']';
  }
  if (lam) {
    os << "L";
    for (int i = 0; i < N; ++i) {
      os << '[';
      for (int j = 0; j < N; ++j) os << lam->at(perm[i], perm[j]) << ',';
      os << ']';
    }
  }
  if (d) {
    os << "D[";
    for (int j : colperm) os << (*d)[j] << ',';
    os << ']';
  }
  os << "F";
  for (int i = 0; i < N; ++i) os << '{' << frame[perm[i]] << '}';
  return os.str();
}

std::string canonical_key(const IndexProfile& idx, const IntMatrix& bt, const Bicharacter* lam,
                          const std::vector<long>* d, const std::vector<std::string>& frame, bool labelled) {
  const int N = idx.n;
  const int m = static_cast<int>(idx.ex.size());
  std::vector<int> perm(N), colperm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::iota(colperm.begin(), colperm.end(), 0);
  if (labelled) return serialize(bt, lam, d, frame, perm, colperm);
  // Order exchangeable slots by frame string; ties are broken by trying every
  // order consistent with the sort and keeping the smallest key.
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  auto by_frame = [&](int a, int b) { return frame[idx.ex[a]] < frame[idx.ex[b]]; };
  std::sort(order.begin(), order.end(), by_frame);
  bool ties = false;
  for (int j = 1; j < m; ++j)
    if (frame[idx.ex[order[j - 1]]] == frame[idx.ex[order[j]]]) ties = true;
  if (!ties) {
    for (int j = 0; j < m; ++j) {
      colperm[j] = order[j];
      perm[idx.ex[j]] = idx.ex[order[j]];
    }
    return serialize(bt, lam, d, frame, perm, colperm);
  }
  std::string best;
  bool have = false;
  std::vector<int> cur(m);
  std::iota(cur.begin(), cur.end(), 0);
  do {
    bool sorted = true;
    for (int j = 1; j < m; ++j)
      if (frame[idx.ex[cur[j - 1]]] > frame[idx.ex[cur[j]]]) sorted = false;
    if (!sorted) continue;
    for (int j = 0; j < m; ++j) {
      colperm[j] = cur[j];
      perm[idx.ex[j]] = idx.ex[cur[j]];
    }
    std::string key = serialize(bt, lam, d, frame, perm, colperm);
    if (!have || key < best) {
      best = std::move(key);
      have = true;
    }
  } while (std::next_permutation(cur.begin(), cur.end()));
  return best;
}

std::vector<std::string> raw_frames(const std::vector<TorusElement>& frame) {
  std::vector<std::string> out;
  for (const auto& x : frame) out.push_back(x.raw_string());
  return out;
}

}  // namespace

std::string seed_key(const Seed& s, bool labelled) {
  return canonical_key(s.idx, s.btilde, &s.lambda, &s.d, raw_frames(s.frame), labelled);
}

std::string seed_key(const ClassicalSeed& s, bool labelled) {
  return canonical_key(s.idx, s.btilde, nullptr, nullptr, raw_frames(s.frame), labelled);
}

std::vector<std::string> frame_strings(const Seed& s) {
  std::vector<std::string> out;
  for (const auto& x : s.frame) out.push_back(format_element(x, s.ambient->lambda()));
  return out;
}

std::vector<std::string> frame_strings(const ClassicalSeed& s) {
  std::vector<std::string> out;
  for (const auto& x : s.frame) out.push_back(format_element(x, s.ring->lambda()));
  return out;
}

}  // namespace rootqca
