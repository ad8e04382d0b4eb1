#include "rootqca/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace rootqca {

namespace {

using Poly = std::vector<mpz_class>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial; throws if the remainder is nonzero.
Poly divide_exact_monic(Poly num, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("cyclotomic: degree too small for division");
  Poly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const mpz_class c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic: inexact division");
  trim(quot);
  return quot;
}

// In-place reduction of an arbitrary polynomial modulo the monic phi.
void reduce_mod(Poly& p, const Poly& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] == 0) continue;
    const mpz_class c = p[i];
    for (std::size_t j = 0; j < deg; ++j) p[i - deg + j] -= c * phi[j];
    p[i] = 0;
  }
  p.resize(deg, 0);
}

int cmp_coeffs(const Poly& a, const Poly& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::strong_ordering to_ordering(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(long ell) {
  if (ell <= 0) throw std::invalid_argument("cyclotomic: ell must be positive");
  Poly p(static_cast<std::size_t>(ell) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(ell)] = 1;
  for (long d = 1; d < ell; ++d) {
    if (ell % d == 0) p = divide_exact_monic(p, cyclotomic_polynomial(d));
  }
  return p;
}

CycContext::CycContext(long ell, std::vector<mpz_class> phi) : ell_(ell), phi_(std::move(phi)) {
  powers_.reserve(static_cast<std::size_t>(ell));
  Poly cur(static_cast<std::size_t>(degree()), 0);
  cur[0] = 1;
  if (degree() == 1) reduce_mod(cur, phi_);
  for (long k = 0; k < ell; ++k) {
    powers_.push_back(cur);
    Poly next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    reduce_mod(next, phi_);
    cur = std::move(next);
  }
}

CycContextPtr CycContext::make(long ell) {
  if (ell <= 0) throw std::invalid_argument("cyclotomic: ell must be positive");
  static std::mutex mu;
  static std::map<long, CycContextPtr> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(ell);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<const CycContext>(ell, cyclotomic_polynomial(ell));
  cache.emplace(ell, ctx);
  return ctx;
}

const std::vector<mpz_class>& CycContext::zeta_power(long k) const {
  long r = k % ell_;
  if (r < 0) r += ell_;
  return powers_[static_cast<std::size_t>(r)];
}

// ---------------------------------------------------------------- CycInt

CycInt::CycInt(CycContextPtr ctx) : ctx_(std::move(ctx)) {
  coeffs_.assign(static_cast<std::size_t>(ctx_->degree()), 0);
}

CycInt::CycInt(CycContextPtr ctx, std::vector<mpz_class> poly) : ctx_(std::move(ctx)), coeffs_(std::move(poly)) {
  if (coeffs_.size() < static_cast<std::size_t>(ctx_->degree())) coeffs_.resize(ctx_->degree(), 0);
  reduce_mod(coeffs_, ctx_->phi());
}

CycInt::CycInt(CycContextPtr ctx, const mpz_class& value) : CycInt(std::move(ctx)) {
  coeffs_[0] = value;
  if (ctx_->degree() == 1) reduce_mod(coeffs_, ctx_->phi());
}

CycInt CycInt::zeta_pow(const CycContextPtr& ctx, long k) {
  CycInt out(ctx);
  out.coeffs_ = ctx->zeta_power(k);
  return out;
}

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycInt::is_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

mpz_class CycInt::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

void CycInt::check_same(const CycInt& o) const {
  if (ctx_->ell() != o.ctx_->ell()) throw ContextMismatch("cyclotomic: operands live in different rings");
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator*=(const mpz_class& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

CycInt& CycInt::divexact(const mpz_class& k) {
  for (auto& c : coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  return *this;
}

CycInt CycInt::times_zeta(long k) const {
  if (ctx_->zeta_power(k) == ctx_->zeta_power(0)) return *this;
  return *this * zeta_pow(ctx_, k);
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.check_same(b);
  const std::size_t n = a.coeffs_.size();
  Poly prod(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return CycInt(a.ctx_, std::move(prod));
}

CycInt operator-(CycInt a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

bool operator==(const CycInt& a, const CycInt& b) {
  return a.ctx_->ell() == b.ctx_->ell() && a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const CycInt& a, const CycInt& b) {
  if (auto c = a.ctx_->ell() <=> b.ctx_->ell(); c != 0) return c;
  return to_ordering(cmp_coeffs(a.coeffs_, b.coeffs_));
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  if (first) return "0";
  return os.str();
}

// ---------------------------------------------------------------- CycRat

CycRat::CycRat(CycContextPtr ctx) : num_(std::move(ctx)) {}

CycRat::CycRat(const CycInt& num) : num_(num) {}

CycRat::CycRat(CycInt num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("cyclotomic: zero denominator");
  normalize();
}

CycRat::CycRat(CycContextPtr ctx, const mpq_class& value) : num_(ctx, value.get_num()), den_(value.get_den()) {
  normalize();
}

void CycRat::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const mpz_class g = gcd(num_.content(), den_);
  if (g != 1) {
    num_.divexact(g);
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

bool CycRat::is_one() const { return den_ == 1 && num_ == CycInt(num_.context(), mpz_class(1)); }

CycRat& CycRat::operator+=(const CycRat& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    CycInt rhs = o.num_;
    rhs *= den_;
    num_ *= o.den_;
    num_ += rhs;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycRat& CycRat::operator-=(const CycRat& o) { return *this += -o; }

CycRat& CycRat::operator*=(const CycRat& o) {
  num_ = num_ * o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

CycRat operator-(CycRat a) {
  a.num_ = -a.num_;
  return a;
}

std::strong_ordering operator<=>(const CycRat& a, const CycRat& b) {
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return to_ordering(cmp(a.den_, b.den_));
}

CycRat CycRat::div_by_int(const mpz_class& i) const {
  if (i == 0) throw std::domain_error("cyclotomic: division by zero");
  return CycRat(num_, den_ * i);
}

CycRat CycRat::times_zeta(long k) const {
  CycRat out(*this);
  out.num_ = num_.times_zeta(k);
  return out;
}

// Inverse in Q(z): solve (multiplication-by-num) * y = 1 over Q.
CycRat CycRat::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic: inverse of zero");
  const auto& ctx = num_.context();
  const int n = ctx->degree();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  for (int j = 0; j < n; ++j) {
    const CycInt col = num_.times_zeta(j);
    for (int i = 0; i < n; ++i) m[i][j] = col.coeffs()[i];
  }
  m[0][n] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw std::logic_error("cyclotomic: singular multiplication matrix");
    std::swap(m[piv], m[c]);
    const mpq_class p = m[c][c];
    for (int j = c; j <= n; ++j) m[c][j] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const mpq_class f = m[r][c];
      for (int j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  mpz_class common = 1;
  for (int i = 0; i < n; ++i) common = lcm(common, m[i][n].get_den());
  std::vector<mpz_class> coeffs(n);
  for (int i = 0; i < n; ++i) {
    mpq_class v = m[i][n] * common;
    coeffs[i] = v.get_num();
  }
  CycInt inv_num(ctx, std::move(coeffs));
  inv_num *= den_;
  return CycRat(std::move(inv_num), common);
}

std::string CycRat::to_string() const {
  std::string s = num_.to_string();
  if (den_ == 1) return s;
  int nonzero = 0;
  for (const auto& c : num_.coeffs()) nonzero += (c != 0);
  if (nonzero > 1) s = "(" + s + ")";
  return s + "/" + den_.get_str();
}

}  // namespace rootqca
