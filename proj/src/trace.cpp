#include "rootqca/trace.hpp"

#include "rootqca/membership.hpp"

namespace rootqca {

TraceKind parse_trace_kind(const std::string& s) {
  if (s == "regular") return TraceKind::RegularEllSubring;
  if (s == "regular-center") return TraceKind::RegularCenter;
  if (s == "reduced") return TraceKind::Reduced;
  if (s == "standard") return TraceKind::Standard;
  throw std::invalid_argument("trace kind must be regular, regular-center, reduced or standard, got '" + s + "'");
}

std::string to_string(TraceKind k) {
  switch (k) {
    case TraceKind::RegularEllSubring:
      return "regular";
    case TraceKind::RegularCenter:
      return "regular-center";
    case TraceKind::Reduced:
      return "reduced";
    case TraceKind::Standard:
      return "standard";
  }
  return "?";
}

TraceOperator::TraceOperator(const Bicharacter& lambda, TraceKind kind)
    : lambda_(lambda), kind_(kind), kernel_(kernel_mod_ell(lambda)) {
  const mpz_class& d = kernel_.pi_degree;
  switch (kind_) {
    case TraceKind::RegularEllSubring: {
      mpz_class s;
      mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(lambda.ell()), static_cast<unsigned long>(lambda.n()));
      scale_ = s;
      break;
    }
    case TraceKind::RegularCenter:
    case TraceKind::Standard:
      scale_ = d * d;
      break;
    case TraceKind::Reduced:
      scale_ = d;
      break;
  }
}

TraceOperator::TraceOperator(const Bicharacter& lambda, TraceKind kind, const IntMatrix& sub)
    : lambda_(lambda), kind_(kind), kernel_(restricted_kernel(lambda, sub)), sub_(sub) {
  if (kind != TraceKind::Reduced && kind != TraceKind::Standard)
    throw std::invalid_argument("trace: restricted traces are reduced or standard only");
  const mpz_class& d = kernel_.pi_degree;
  scale_ = kind == TraceKind::Reduced ? d : d * d;
}

long TraceOperator::default_degree() const {
  const mpz_class& d = kernel_.pi_degree;
  switch (kind_) {
    case TraceKind::RegularEllSubring: {
      mpz_class s;
      mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(lambda_.ell()), static_cast<unsigned long>(lambda_.n()));
      return s.get_si();
    }
    case TraceKind::Reduced:
      return d.get_si();
    default:
      return mpz_class(d * d).get_si();
  }
}

bool TraceOperator::keeps(const Exponent& f) const {
  if (kind_ == TraceKind::RegularEllSubring) {
    for (long v : f)
      if (v % lambda_.ell() != 0) return false;
    return true;
  }
  if (sub_) return kernel_.contains(f);
  for (int j = 0; j < lambda_.n(); ++j)
    if (lambda_.pair(f, unit_vector(lambda_.n(), j)) != 0) return false;
  return true;
}

TorusElement TraceOperator::apply(const TorusElement& a) const {
  TorusElement out(a.context(), a.n());
  const CycRat s(CycInt(a.context(), scale_));
  for (const auto& [f, c] : a.terms())
    if (keeps(f)) out.add_term(f, c * s);
  return out;
}

std::vector<TorusElement> newton_sigma(const QuantumTorus& T, const std::vector<TorusElement>& psi) {
  std::vector<TorusElement> sigma{T.one()};
  for (std::size_t i = 1; i <= psi.size(); ++i) {
    TorusElement acc = T.zero();
    for (std::size_t j = 1; j <= i; ++j) {
      const TorusElement t = T.mul(sigma[i - j], psi[j - 1]);
      if (j % 2 == 1)
        acc += t;
      else
        acc -= t;
    }
    sigma.push_back(acc.scaled(CycRat(CycInt(T.context(), mpz_class(1)), mpz_class(static_cast<long>(i)))));
  }
  sigma.erase(sigma.begin());
  return sigma;
}

CharPolyReport verify_cayley_hamilton(const QuantumTorus& T, const TorusElement& a, const TraceOperator& tr,
                                      long degree) {
  if (degree <= 0) throw std::invalid_argument("cayley-hamilton: degree must be positive");
  CharPolyReport rep;
  rep.degree = degree;
  std::vector<TorusElement> powers{T.one()};
  for (long i = 1; i <= degree; ++i) powers.push_back(T.mul(powers.back(), a));
  for (long i = 1; i <= degree; ++i) rep.psi.push_back(tr.apply(powers[i]));
  rep.sigma = newton_sigma(T, rep.psi);
  TorusElement chi = powers[degree];
  for (long i = 1; i <= degree; ++i) {
    const TorusElement t = T.mul(rep.sigma[i - 1], powers[degree - i]);
    if (i % 2 == 1)
      chi -= t;
    else
      chi += t;
  }
  rep.is_zero = chi.is_zero();
  rep.residual = std::move(chi);
  return rep;
}

TraceAgreement trace_agreement(const Seed& a, const TorusElement& u, int k, TraceKind kind) {
  const Seed b = mutate_seed(a, k);
  const Conversion ub = convert_edge(a, u, k);
  if (!ub.ok) throw std::invalid_argument("trace_agreement: element does not convert across the edge");
  const TorusElement ta = TraceOperator(a.lambda, kind).apply(u);
  const Conversion tab = convert_edge(a, ta, k);
  TraceAgreement res;
  res.trace_at_b = TraceOperator(b.lambda, kind).apply(*ub.coords);
  if (!tab.ok) return res;
  res.trace_from_a = tab.coords;
  res.agree = *res.trace_from_a == *res.trace_at_b;
  return res;
}

}  // namespace rootqca
