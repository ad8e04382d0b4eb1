#include "rootqca/parse.hpp"

#include <cctype>
#include <sstream>

namespace rootqca {

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const QuantumTorus& torus) : s_(text), T_(torus) {}

  TorusElement run() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
    TorusElement e = expr();
    skip_ws();
    if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return mpz_class(s_.substr(start, pos_ - start));
  }

  long small_integer() {
    const std::size_t at = pos_;
    const mpz_class v = integer();
    if (!v.fits_slong_p() || v > 1000000) throw ParseError("integer too large", at);
    return v.get_si();
  }

  TorusElement expr() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    TorusElement acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  TorusElement term() {
    TorusElement t = factor();
    for (;;) {
      if (accept('*')) {
        t = T_.mul(t, factor());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const mpz_class d = integer();
        if (d == 0) throw ParseError("division by zero", at);
        t = t.scaled(CycRat(CycInt(T_.context(), mpz_class(1)), d));
      } else {
        break;
      }
    }
    return t;
  }

  TorusElement factor() {
    TorusElement a = atom();
    if (accept('^')) {
      bool paren = accept('(');
      bool neg = accept('-');
      const std::size_t epos = pos_;
      long e = small_integer();
      if (paren && !accept(')')) throw ParseError("expected ')'", pos_);
      if (neg) e = -e;
      if (e < 0 && !a.is_monomial()) throw ParseError("negative exponent on a non-monomial", epos);
      a = T_.pow(a, e);
    }
    return a;
  }

  TorusElement atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const mpz_class v = integer();
      return T_.scalar(CycRat(CycInt(T_.context(), v)));
    }
    if (c == 'z') {
      ++pos_;
      return T_.scalar(CycRat::zeta_pow(T_.context(), 1));
    }
    if (c == 'x') {
      const std::size_t at = pos_++;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected variable index after 'x'", pos_);
      const long i = small_integer();
      if (i < 1 || i > T_.n())
        throw ParseError("variable x" + std::to_string(i) + " outside rank " + std::to_string(T_.n()), at);
      return T_.generator(static_cast<int>(i - 1));
    }
    if (c == '(') {
      ++pos_;
      TorusElement e = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    throw ParseError(std::string("unknown symbol '") + c + "'", pos_);
  }

  const std::string& s_;
  const QuantumTorus& T_;
  std::size_t pos_ = 0;
};

int nonzero_coeffs(const CycRat& c) {
  int k = 0;
  for (const auto& v : c.num().coeffs()) k += (v != 0);
  return k;
}

bool single_negative(const CycRat& c) {
  if (nonzero_coeffs(c) != 1) return false;
  for (const auto& v : c.num().coeffs())
    if (v != 0) return v < 0;
  return false;
}

}  // namespace

TorusElement parse_element(const std::string& text, const QuantumTorus& torus) { return Parser(text, torus).run(); }

CycRat parse_scalar(const std::string& text, const CycContextPtr& ctx) {
  const QuantumTorus T(Bicharacter::zero(ctx->ell(), 0));
  const TorusElement e = Parser(text, T).run();
  return e.coeff(Exponent{});
}

std::string format_element(const TorusElement& a, const Bicharacter& lambda) {
  if (a.is_zero()) return "0";
  const int N = a.n();
  const long ell = lambda.ell();
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, c] : a.terms()) {
    long long corr = 0;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        corr = (corr + static_cast<long long>(lambda.at(i, j)) * ((f[i] % ell + ell) % ell) % ell *
                           ((f[j] % ell + ell) % ell)) %
               ell;
    CycRat coeff = corr ? c.times_zeta(-static_cast<long>(corr)) : c;
    std::ostringstream mono;
    bool any = false;
    for (int i = 0; i < N; ++i) {
      if (f[i] == 0) continue;
      if (any) mono << '*';
      mono << 'x' << (i + 1);
      if (f[i] != 1) mono << '^' << f[i];
      any = true;
    }
    const bool neg = single_negative(coeff);
    if (neg) coeff = -coeff;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string sc = coeff.to_string();
    if (!any) {
      if (a.size() > 1 && nonzero_coeffs(coeff) > 1 && coeff.den() == 1) sc = "(" + sc + ")";
      os << sc;
      continue;
    }
    if (!coeff.is_one()) {
      if (nonzero_coeffs(coeff) > 1 && coeff.den() == 1) sc = "(" + sc + ")";
      os << sc << '*';
    }
    os << mono.str();
  }
  return os.str();
}

}  // namespace rootqca
