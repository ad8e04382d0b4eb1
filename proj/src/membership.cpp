#include "rootqca/membership.hpp"

#include "rootqca/parse.hpp"

namespace rootqca {

Conversion convert_edge(const Seed& a, const TorusElement& u, int k) {
  if (!a.idx.is_exchangeable(k))
    throw std::invalid_argument("convert_edge: index " + std::to_string(k + 1) + " is not exchangeable");
  const QuantumTorus TA = a.local_torus();
  const QuantumTorus TB(mutate_lambda(a.lambda, a.btilde, a.idx, k));
  if (u.n() != a.n()) throw std::invalid_argument("convert_edge: coordinates have the wrong rank");

  Conversion res;
  TorusElement out = TB.zero();
  for (const auto& [n, an] : TA.component_split(u, k)) {
    if (an.is_zero()) continue;
    TorusElement c = TA.zero();
    long yexp = 0;
    if (n == 0) {
      c = an;
    } else if (n > 0) {
      // x^n a_n = y^{-n} Q_{-1} Q_{-3} ... Q_{-2n+1} a_n
      TorusElement p = TA.one();
      for (long j = 1; j <= n; ++j) p = TA.mul(p, q_element_local(a, k, -(2 * j - 1)));
      c = TA.mul(p, an);
      yexp = -n;
    } else {
      // x^{-m} a_{-m} = y^m c_m with Q_{2m-1} ... Q_3 Q_1 c_m = a_{-m}
      const long m = -n;
      TorusElement p = TA.one();
      for (long j = m; j >= 1; --j) p = TA.mul(p, q_element_local(a, k, 2 * j - 1));
      auto q = TA.left_divide(p, an);
      if (!q) {
        res.failure = DivisionFailure{a.path, k, m, format_element(an, a.lambda), format_element(p, a.lambda)};
        return res;
      }
      c = *q;
      yexp = m;
    }
    // Coefficients are free of index k, where TA and TB agree.
    TorusElement cb = TB.zero();
    for (const auto& [f, v] : c.terms()) cb.add_term(f, v);
    out += TB.mul(TB.generator(k, yexp), cb);
  }
  res.ok = true;
  res.coords = std::move(out);
  return res;
}

Conversion convert_path(const Seed& from, const TorusElement& u, const MutationWord& word) {
  Seed cur = from;
  TorusElement coords = u;
  for (int k : word) {
    Conversion step = convert_edge(cur, coords, k);
    if (!step.ok) return step;
    coords = std::move(*step.coords);
    cur = mutate_seed(cur, k);
  }
  Conversion res;
  res.ok = true;
  res.coords = std::move(coords);
  return res;
}

bool member_mixed(const Seed& root, const TorusElement& u, const MutationWord& word) {
  const Conversion c = convert_path(root, u, word);
  return c.ok && in_mixed_torus(*c.coords, root.idx);
}

namespace {

template <class Extra>
MembershipReport run_membership(const ExchangeGraph& g, const std::vector<int>& theta, const TorusElement& u,
                                Extra extra) {
  MembershipReport rep;
  rep.member = true;
  for (int v : theta) {
    if (v < 0 || v >= static_cast<int>(g.vertices().size()))
      throw std::invalid_argument("membership: vertex " + std::to_string(v) + " is not in the graph");
    const Seed& s = g.vertices()[v];
    SeedVerdict sv;
    sv.vertex = v;
    sv.path = s.path;
    Conversion c = convert_path(g.root(), u, s.path);
    if (!c.ok) {
      sv.failure = c.failure;
      sv.reason = "division failed";
    } else {
      sv.coords = c.coords;
      if (!in_mixed_torus(*c.coords, s.idx))
        sv.reason = "negative exponent at a frozen index";
      else
        sv.reason = extra(s, *c.coords);
    }
    sv.member = sv.reason.empty();
    rep.member = rep.member && sv.member;
    rep.seeds.push_back(std::move(sv));
  }
  return rep;
}

}  // namespace

MembershipReport member_intersection(const ExchangeGraph& g, const std::vector<int>& theta, const TorusElement& u) {
  return run_membership(g, theta, u, [](const Seed&, const TorusElement&) { return std::string(); });
}

MembershipReport member_central_subalgebra(const ExchangeGraph& g, const std::vector<int>& theta,
                                           const TorusElement& u) {
  return run_membership(g, theta, u, [](const Seed& s, const TorusElement& c) {
    return in_ell_power_subring(c, s.ell()) ? std::string() : std::string("support leaves the l-th power lattice");
  });
}

MembershipReport center_test(const ExchangeGraph& g, const std::vector<int>& theta, const TorusElement& u) {
  MembershipReport rep = member_intersection(g, theta, u);
  if (!rep.member || rep.seeds.empty()) return rep;
  SeedVerdict& first = rep.seeds.front();
  const Seed& s = g.vertices()[first.vertex];
  if (!s.local_torus().is_central(*first.coords)) {
    first.member = false;
    first.reason = "support leaves Ker(lambda)";
    rep.member = false;
  }
  return rep;
}

}  // namespace rootqca
