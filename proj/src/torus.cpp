#include "rootqca/torus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rootqca/polyhedral.hpp"

namespace rootqca {

namespace {

long mod_ell(long long v, long ell) {
  long long r = v % ell;
  if (r < 0) r += ell;
  return static_cast<long>(r);
}

}  // namespace

int graded_lex_compare(const Exponent& a, const Exponent& b) {
  long sa = 0, sb = 0;
  for (long v : a) sa += v;
  for (long v : b) sb += v;
  if (sa != sb) return sa < sb ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const { return graded_lex_compare(a, b) < 0; }

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent sub_exponents(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Exponent scale_exponent(const Exponent& a, long s) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Exponent unit_vector(int n, int i, long s) {
  Exponent e(n, 0);
  e[i] = s;
  return e;
}

// ---------------------------------------------------------------- Bicharacter

Bicharacter::Bicharacter(long ell, const std::vector<std::vector<long>>& entries) : ell_(ell) {
  if (ell <= 0) throw std::invalid_argument("bicharacter: ell must be positive");
  const std::size_t n = entries.size();
  m_.assign(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n) throw std::invalid_argument("bicharacter: matrix must be square");
    for (std::size_t j = 0; j < n; ++j) m_[i][j] = mod_ell(entries[i][j], ell);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m_[i][i] != 0) throw std::invalid_argument("bicharacter: nonzero diagonal entry mod ell");
    for (std::size_t j = 0; j < n; ++j)
      if ((m_[i][j] + m_[j][i]) % ell != 0) throw std::invalid_argument("bicharacter: not skew-symmetric mod ell");
  }
}

Bicharacter Bicharacter::zero(long ell, int n) {
  return Bicharacter(ell, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
}

long Bicharacter::pair(const Exponent& f, const Exponent& g) const {
  long long acc = 0;
  const int N = n();
  for (int i = 0; i < N; ++i) {
    if (f[i] == 0) continue;
    long long row = 0;
    for (int j = 0; j < N; ++j) {
      if (g[j] == 0 || m_[i][j] == 0) continue;
      row = (row + static_cast<long long>(m_[i][j]) * mod_ell(g[j], ell_)) % ell_;
    }
    acc = (acc + mod_ell(f[i], ell_) * row) % ell_;
  }
  return mod_ell(acc, ell_);
}

long Bicharacter::signed_at(int i, int j) const {
  long v = m_[i][j];
  if (2 * v > ell_) v -= ell_;
  return v;
}

// ---------------------------------------------------------------- IndexProfile

IndexProfile IndexProfile::all_exchangeable(int n) {
  IndexProfile p;
  p.n = n;
  for (int i = 0; i < n; ++i) p.ex.push_back(i);
  return p;
}

void IndexProfile::validate() const {
  std::vector<int> seen(n, 0);
  for (int i : ex) {
    if (i < 0 || i >= n) throw std::invalid_argument("index profile: exchangeable index out of range");
    if (seen[i]++) throw std::invalid_argument("index profile: repeated index");
  }
  for (int i : inv) {
    if (i < 0 || i >= n) throw std::invalid_argument("index profile: inverted index out of range");
    if (seen[i]++) throw std::invalid_argument("index profile: inverted index is exchangeable or repeated");
  }
}

bool IndexProfile::is_exchangeable(int i) const { return std::find(ex.begin(), ex.end(), i) != ex.end(); }

bool IndexProfile::is_nonneg_frozen(int i) const {
  return !is_exchangeable(i) && std::find(inv.begin(), inv.end(), i) == inv.end();
}

int IndexProfile::column_of(int k) const {
  auto it = std::find(ex.begin(), ex.end(), k);
  return it == ex.end() ? -1 : static_cast<int>(it - ex.begin());
}

// ---------------------------------------------------------------- TorusElement

TorusElement::TorusElement(CycContextPtr ctx, int n) : ctx_(std::move(ctx)), n_(n) {}

TorusElement TorusElement::monomial(const CycContextPtr& ctx, const Exponent& f, const CycRat& c) {
  TorusElement a(ctx, static_cast<int>(f.size()));
  a.add_term(f, c);
  return a;
}

TorusElement TorusElement::constant(const CycContextPtr& ctx, int n, const CycRat& c) {
  return monomial(ctx, Exponent(n, 0), c);
}

CycRat TorusElement::coeff(const Exponent& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? CycRat(ctx_) : it->second;
}

void TorusElement::add_term(const Exponent& f, const CycRat& c) {
  if (static_cast<int>(f.size()) != n_) throw std::invalid_argument("torus: exponent length does not match rank");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TorusElement::check_compatible(const TorusElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("torus: rank mismatch");
  if (ctx_->ell() != o.ctx_->ell()) throw ContextMismatch("torus: context mismatch");
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  check_compatible(o);
  for (const auto& [f, c] : o.terms_) add_term(f, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  check_compatible(o);
  for (const auto& [f, c] : o.terms_) add_term(f, -c);
  return *this;
}

TorusElement TorusElement::scaled(const CycRat& c) const {
  TorusElement out(ctx_, n_);
  if (c.is_zero()) return out;
  for (const auto& [f, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), f, v * c);
  return out;
}

TorusElement operator-(TorusElement a) {
  for (auto& [f, c] : a.terms_) c = -c;
  return a;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
  return a.n_ == b.n_ && a.ctx_->ell() == b.ctx_->ell() && a.terms_ == b.terms_;
}

std::string TorusElement::raw_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, c] : terms_) {
    if (!first) os << ';';
    first = false;
    os << '[' << c.to_string() << "](";
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << ')';
  }
  return os.str();
}

// ---------------------------------------------------------------- QuantumTorus

QuantumTorus::QuantumTorus(Bicharacter lambda) : lambda_(std::move(lambda)), ctx_(CycContext::make(lambda_.ell())) {}

void QuantumTorus::check(const TorusElement& a) const {
  if (a.n() != n()) throw std::invalid_argument("torus: rank mismatch");
  if (a.context()->ell() != ell()) throw ContextMismatch("torus: context mismatch");
}

TorusElement QuantumTorus::one() const { return scalar(1); }

TorusElement QuantumTorus::scalar(const CycRat& c) const { return TorusElement::constant(ctx_, n(), c); }

TorusElement QuantumTorus::scalar(long c) const { return scalar(CycRat(CycInt(ctx_, mpz_class(c)))); }

TorusElement QuantumTorus::monomial(const Exponent& f, const CycRat& c) const {
  if (static_cast<int>(f.size()) != n()) throw std::invalid_argument("torus: exponent length does not match rank");
  return TorusElement::monomial(ctx_, f, c);
}

TorusElement QuantumTorus::monomial(const Exponent& f) const { return monomial(f, CycRat(CycInt(ctx_, mpz_class(1)))); }

TorusElement QuantumTorus::generator(int i, long power) const { return monomial(unit_vector(n(), i, power)); }

TorusElement QuantumTorus::mul(const TorusElement& a, const TorusElement& b) const {
  check(a);
  check(b);
  TorusElement out(ctx_, n());
  for (const auto& [f, cf] : a.terms()) {
    for (const auto& [g, cg] : b.terms()) {
      CycRat c = cf * cg;
      const long t = lambda_.pair(f, g);
      if (t != 0) c = c.times_zeta(t);
      out.add_term(add_exponents(f, g), c);
    }
  }
  return out;
}

TorusElement QuantumTorus::monomial_inverse(const TorusElement& a) const {
  check(a);
  if (!a.is_monomial()) throw std::invalid_argument("torus: only monomials are invertible");
  const auto& [f, c] = *a.terms().begin();
  const Exponent g = scale_exponent(f, -1);
  // (c X^f)(c^{-1} X^{-f}) = z^{L(f,-f)} = 1
  return monomial(g, c.inverse());
}

TorusElement QuantumTorus::pow(const TorusElement& a, long e) const {
  check(a);
  if (e < 0) return pow(monomial_inverse(a), -e);
  TorusElement result = one();
  TorusElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

namespace {

struct Box {
  Exponent lo, hi;
};

std::pair<Exponent, Exponent> coordinate_range(const TorusElement& a) {
  Exponent lo(a.n()), hi(a.n());
  bool first = true;
  for (const auto& [f, c] : a.terms()) {
    for (int i = 0; i < a.n(); ++i) {
      if (first || f[i] < lo[i]) lo[i] = f[i];
      if (first || f[i] > hi[i]) hi[i] = f[i];
    }
    first = false;
  }
  return {lo, hi};
}

// Candidate quotient exponents live in a coordinate box (coordinate minima and
// maxima add under multiplication) and above trail(w) - trail(u).
std::optional<Box> quotient_box(const TorusElement& u, const TorusElement& w) {
  auto [ulo, uhi] = coordinate_range(u);
  auto [wlo, whi] = coordinate_range(w);
  Box b{sub_exponents(wlo, ulo), sub_exponents(whi, uhi)};
  for (int i = 0; i < u.n(); ++i)
    if (b.lo[i] > b.hi[i]) return std::nullopt;
  return b;
}

bool in_box(const Exponent& h, const Box& b) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] < b.lo[i] || h[i] > b.hi[i]) return false;
  return true;
}

}  // namespace

std::optional<TorusElement> QuantumTorus::left_divide(const TorusElement& u, const TorusElement& w) const {
  check(u);
  check(w);
  if (u.is_zero()) throw std::domain_error("torus: division by zero");
  TorusElement v(ctx_, n());
  if (w.is_zero()) return v;
  auto box = quotient_box(u, w);
  if (!box) return std::nullopt;
  const Exponent floor = sub_exponents(w.trail(), u.trail());
  const Exponent lu = u.lead();
  const CycRat lc_inv = u.terms().rbegin()->second.inverse();
  TorusElement r = w;
  while (!r.is_zero()) {
    const Exponent h = sub_exponents(r.lead(), lu);
    if (!in_box(h, *box) || graded_lex_compare(h, floor) < 0) return std::nullopt;
    CycRat d = r.terms().rbegin()->second * lc_inv;
    const long t = lambda_.pair(lu, h);
    if (t != 0) d = d.times_zeta(-t);
    const TorusElement step = monomial(h, d);
    v += step;
    r -= mul(u, step);
  }
  return v;
}

std::optional<TorusElement> QuantumTorus::right_divide(const TorusElement& u, const TorusElement& w) const {
  check(u);
  check(w);
  if (u.is_zero()) throw std::domain_error("torus: division by zero");
  TorusElement v(ctx_, n());
  if (w.is_zero()) return v;
  auto box = quotient_box(u, w);
  if (!box) return std::nullopt;
  const Exponent floor = sub_exponents(w.trail(), u.trail());
  const Exponent lu = u.lead();
  const CycRat lc_inv = u.terms().rbegin()->second.inverse();
  TorusElement r = w;
  while (!r.is_zero()) {
    const Exponent h = sub_exponents(r.lead(), lu);
    if (!in_box(h, *box) || graded_lex_compare(h, floor) < 0) return std::nullopt;
    CycRat d = r.terms().rbegin()->second * lc_inv;
    const long t = lambda_.pair(h, lu);
    if (t != 0) d = d.times_zeta(-t);
    const TorusElement step = monomial(h, d);
    v += step;
    r -= mul(step, u);
  }
  return v;
}

TorusElement QuantumTorus::normalized_product(const Bicharacter& frame_lambda, const std::vector<TorusElement>& gens,
                                              const Exponent& f) const {
  const int N = static_cast<int>(gens.size());
  if (static_cast<int>(f.size()) != N || frame_lambda.n() != N)
    throw std::invalid_argument("normalized_product: length mismatch");
  const long ell = frame_lambda.ell();
  long long corr = 0;
  for (int i = 0; i < N; ++i) {
    if (f[i] == 0) continue;
    for (int j = i + 1; j < N; ++j) {
      if (f[j] == 0) continue;
      corr = (corr + static_cast<long long>(frame_lambda.at(i, j)) * mod_ell(f[i], ell) % ell * mod_ell(f[j], ell)) % ell;
    }
  }
  TorusElement result = one();
  for (int i = 0; i < N; ++i) {
    if (f[i] == 0) continue;
    if (f[i] < 0 && !gens[i].is_monomial())
      throw std::invalid_argument("normalized_product: negative exponent on a non-monomial generator");
    result = mul(result, pow(gens[i], f[i]));
  }
  if (corr != 0) result = result.scaled(CycRat::zeta_pow(ctx_, -static_cast<long>(corr)));
  return result;
}

std::map<long, TorusElement> QuantumTorus::component_split(const TorusElement& a, int k) const {
  check(a);
  if (k < 0 || k >= n()) throw std::invalid_argument("component_split: index out of range");
  std::map<long, TorusElement> parts;
  for (const auto& [f, c] : a.terms()) {
    const long m = f[k];
    Exponent g = f;
    g[k] = 0;
    CycRat coeff = c;
    const long t = lambda_.pair(unit_vector(n(), k, m), g);
    if (t != 0) coeff = coeff.times_zeta(-t);
    auto it = parts.try_emplace(m, ctx_, n()).first;
    it->second.add_term(g, coeff);
  }
  return parts;
}

bool QuantumTorus::is_central(const TorusElement& a) const {
  check(a);
  for (const auto& [f, c] : a.terms())
    for (int i = 0; i < n(); ++i)
      if (lambda_.pair(f, unit_vector(n(), i)) != 0) return false;
  return true;
}

// ---------------------------------------------------------------- queries

std::set<Exponent> support(const TorusElement& a) {
  std::set<Exponent> s;
  for (const auto& [f, c] : a.terms()) s.insert(f);
  return s;
}

std::set<Exponent> newton_vertices(const TorusElement& a) {
  std::vector<IVec> pts;
  for (const auto& [f, c] : a.terms()) pts.push_back(f);
  std::set<Exponent> out;
  for (auto& v : hull_vertices(pts)) out.insert(v);
  return out;
}

bool in_mixed_torus(const TorusElement& a, const IndexProfile& idx) {
  for (const auto& [f, c] : a.terms())
    for (int i = 0; i < a.n(); ++i)
      if (f[i] < 0 && idx.is_nonneg_frozen(i)) return false;
  return true;
}

bool in_ell_power_subring(const TorusElement& a, long ell) {
  for (const auto& [f, c] : a.terms())
    for (long v : f)
      if (v % ell != 0) return false;
  return true;
}

bool in_ell_power_subring(const TorusElement& a, long ell, const IndexProfile& idx) {
  return in_ell_power_subring(a, ell) && in_mixed_torus(a, idx);
}

}  // namespace rootqca
