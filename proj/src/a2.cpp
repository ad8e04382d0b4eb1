#include "rootqca/a2.hpp"

#include <chrono>
#include <set>

#include "rootqca/graph.hpp"
#include "rootqca/membership.hpp"
#include "rootqca/parse.hpp"

namespace rootqca {

Seed make_a2_seed(long ell) {
  const std::vector<std::vector<long>> b{{0, 1}, {-1, 0}};
  return make_root_seed(Bicharacter(ell, b), IntMatrix(b), {1, 1}, IndexProfile::all_exchangeable(2));
}

A2Variables a2_variables(const QuantumTorus& T) {
  auto m = [&](long a, long b) { return T.monomial({a, b}); };
  return {m(1, 0), m(0, 1), m(-1, 0) + m(-1, 1), m(0, -1) + m(1, -1), m(-1, -1) + m(-1, 0) + m(0, -1)};
}

std::vector<std::pair<std::string, TorusElement>> a2_relation_residuals(const QuantumTorus& T, const A2Variables& v) {
  const auto& ctx = T.context();
  auto z = [&](long k) { return CycRat::zeta_pow(ctx, k); };
  auto mul = [&](const TorusElement& a, const TorusElement& b) { return T.mul(a, b); };
  const TorusElement one = T.one();
  std::vector<std::pair<std::string, TorusElement>> out;
  out.emplace_back("x2 x1 = e^-1 x1 x2", mul(v.x2, v.x1) - mul(v.x1, v.x2).scaled(z(-2)));
  out.emplace_back("y2 x1 = e x1 y2", mul(v.y2, v.x1) - mul(v.x1, v.y2).scaled(z(2)));
  out.emplace_back("x2 y1 = e y1 x2", mul(v.x2, v.y1) - mul(v.y1, v.x2).scaled(z(2)));
  out.emplace_back("x1 y1 = 1 + e^1/2 x2", mul(v.x1, v.y1) - (one + v.x2.scaled(z(1))));
  out.emplace_back("y1 x1 = 1 + e^-1/2 x2", mul(v.y1, v.x1) - (one + v.x2.scaled(z(-1))));
  out.emplace_back("x2 y2 = 1 + e^-1/2 x1", mul(v.x2, v.y2) - (one + v.x1.scaled(z(-1))));
  out.emplace_back("y2 x2 = 1 + e^1/2 x1", mul(v.y2, v.x2) - (one + v.x1.scaled(z(1))));
  out.emplace_back("y2 y1 = e^-1 y1 y2 + (1 - e^-1)",
                   mul(v.y2, v.y1) - (mul(v.y1, v.y2).scaled(z(-2)) + T.scalar(CycRat(CycInt(ctx, 1)) - z(-2))));
  return out;
}

std::vector<TorusElement> a2_spanning_monomials(const QuantumTorus& T, const A2Variables& v, long bound) {
  std::vector<std::pair<long, long>> pairs;
  for (long m = 0; m <= bound; ++m)
    for (long n = 0; n <= bound; ++n)
      if (std::min(m, n) == 0) pairs.emplace_back(m, n);
  std::vector<TorusElement> out;
  for (const auto& [m1, n1] : pairs)
    for (const auto& [m2, n2] : pairs) {
      TorusElement e = T.pow(v.y1, m1);
      e = T.mul(e, T.pow(v.x1, n1));
      e = T.mul(e, T.pow(v.x2, n2));
      e = T.mul(e, T.pow(v.y2, m2));
      out.push_back(std::move(e));
    }
  return out;
}

std::size_t torus_rank(const std::vector<TorusElement>& elems) {
  if (elems.empty()) return 0;
  std::map<Exponent, std::size_t> col;
  for (const auto& e : elems)
    for (const auto& [f, c] : e.terms()) col.emplace(f, 0);
  std::size_t j = 0;
  for (auto& [f, idx] : col) idx = j++;
  const auto& ctx = elems.front().context();
  std::vector<std::vector<CycRat>> rows;
  for (const auto& e : elems) {
    std::vector<CycRat> r(col.size(), CycRat(ctx));
    for (const auto& [f, c] : e.terms()) r[col[f]] = c;
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < col.size() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const CycRat inv = rows[rank][c].inverse();
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      const CycRat f = rows[i][c] * inv;
      for (std::size_t k = c; k < col.size(); ++k)
        if (!rows[rank][k].is_zero()) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool A2Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass && !c.skipped) return false;
  return true;
}

namespace {

bool is_cycle(const std::vector<std::vector<int>>& adj, std::size_t edges) {
  const std::size_t n = adj.size();
  if (n < 3 || edges != n) return false;
  for (const auto& a : adj)
    if (a.size() != 2) return false;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

template <class F>
void timed(A2Report& rep, const std::string& name, F f) {
  A2Check c;
  c.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    f(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.skipped = false;
    c.detail = std::string("error: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.checks.push_back(std::move(c));
}

}  // namespace

A2Report run_a2_suite(long ell) {
  A2Report rep;
  rep.ell = ell;
  const Seed root = make_a2_seed(ell);
  const QuantumTorus& T = *root.ambient;
  const A2Variables vars = a2_variables(T);
  ExchangeGraph unl(root, GraphMode::Unlabelled);
  ExchangeGraph lab(root, GraphMode::Labelled);

  timed(rep, "pentagon", [&](A2Check& c) {
    unl.explore();
    lab.explore();
    const bool u5 = unl.vertices().size() == 5 && is_cycle(unl.adjacency(), unl.edges().size());
    const bool l10 = lab.vertices().size() == 10 && is_cycle(lab.adjacency(), lab.edges().size());
    c.pass = u5 && l10 && !unl.truncated() && !lab.truncated();
    c.detail = "unlabelled " + std::to_string(unl.vertices().size()) + " seeds / " +
               std::to_string(unl.edges().size()) + " edges, labelled " + std::to_string(lab.vertices().size()) +
               " seeds";
  });

  timed(rep, "cluster variables", [&](A2Check& c) {
    std::set<std::string> got, want;
    for (const auto& s : unl.vertices())
      for (const auto& f : s.frame) got.insert(f.raw_string());
    for (const auto& v : vars.all()) want.insert(v.raw_string());
    const TorusElement y1_text = parse_element("x1^-1 + z*x1^-1*x2", T);
    const TorusElement y2_text = parse_element("x2^-1 + z^-1*x2^-1*x1", T);
    const CycRat zi = CycRat::zeta_pow(T.context(), -1);
    const TorusElement ident = T.mul(vars.y1, vars.y2).scaled(zi) - T.scalar(zi);
    c.pass = got == want && y1_text == vars.y1 && y2_text == vars.y2 && ident == vars.fifth;
    c.detail = std::to_string(got.size()) + " distinct variables; fifth = z^-1 Y1 Y2 - z^-1";
  });

  timed(rep, "relations", [&](A2Check& c) {
    int ok = 0;
    std::string bad;
    for (const auto& [name, r] : a2_relation_residuals(T, vars)) {
      if (r.is_zero())
        ++ok;
      else
        bad += (bad.empty() ? "" : "; ") + name;
    }
    c.pass = ok == 8;
    c.detail = std::to_string(ok) + "/8 hold" + (bad.empty() ? "" : ", failing: " + bad);
  });

  timed(rep, "basis", [&](A2Check& c) {
    const auto mons = a2_spanning_monomials(T, vars, 3);
    const std::size_t r = torus_rank(mons);
    c.pass = r == mons.size();
    c.detail = "rank " + std::to_string(r) + " of " + std::to_string(mons.size()) + " monomials";
  });

  timed(rep, "l-power mutation", [&](A2Check& c) {
    if (!check_coprime_condition(ell, root.d)) {
      c.skipped = true;
      c.detail = "coprime condition fails for this ell";
      return;
    }
    int checked = 0;
    bool ok = true;
    for (const auto& s : lab.vertices())
      for (int k : s.idx.ex) {
        ok = ok && ell_power_check(s, k);
        ++checked;
      }
    c.pass = ok;
    c.detail = std::to_string(checked) + " seed/direction pairs";
  });

  timed(rep, "classical shadow", [&](A2Check& c) {
    if (!check_coprime_condition(ell, root.d)) {
      c.skipped = true;
      c.detail = "coprime condition fails for this ell";
      return;
    }
    ClassicalExchangeGraph cl(make_classical_root(root.btilde, root.idx), GraphMode::Labelled);
    cl.explore();
    const IsomorphismReport iso = shadow_isomorphism(lab, cl);
    // x_{n+1} x_{n-1} = x_n + 1 along the alternating word.
    ClassicalSeed s = cl.root();
    std::vector<TorusElement> seq{s.frame[0], s.frame[1]};
    for (int i = 0; i < 10; ++i) {
      const int k = i % 2;
      s = mutate_seed(s, k);
      seq.push_back(s.frame[k]);
    }
    bool periodic = true;
    for (std::size_t i = 0; i + 5 < seq.size(); ++i) periodic = periodic && seq[i] == seq[i + 5];
    bool distinct = true;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) distinct = distinct && !(seq[i] == seq[j]);
    c.pass = iso.isomorphic && iso.shadows_match && periodic && distinct;
    c.detail = (iso.detail.empty() ? std::string("isomorphic") : iso.detail) + ", period 5 " +
               (periodic && distinct ? "holds" : "fails");
  });

  timed(rep, "membership", [&](A2Check& c) {
    const ThetaSet all = theta_all(unl);
    bool ok = true;
    for (const auto& v : vars.all()) ok = ok && member_intersection(unl, all.vertices, v).member;
    const int mu1 = unl.resolve_word({0});
    const MembershipReport inv = member_intersection(unl, {mu1}, T.generator(0, -1));
    const bool cert = !inv.member && inv.seeds.front().failure.has_value();
    c.pass = ok && cert;
    c.detail = std::string("5 variables ") + (ok ? "are" : "are not") + " members; x1^-1 " +
               (cert ? "fails with a division certificate" : "has no certificate");
  });

  return rep;
}

}  // namespace rootqca
