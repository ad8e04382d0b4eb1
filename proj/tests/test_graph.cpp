#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <functional>

#include "rootqca/graph.hpp"
#include "support.hpp"

using namespace rootqca;

namespace {

Seed a2_root(long ell) {
  return make_root_seed(testing::a2_lambda(ell), IntMatrix({{0, 1}, {-1, 0}}), {1, 1}, IndexProfile::all_exchangeable(2));
}

Seed b2_root(long ell) {
  return make_root_seed(testing::a2_lambda(ell), IntMatrix({{0, 2}, {-1, 0}}), {1, 2}, IndexProfile::all_exchangeable(2));
}

ExchangeGraph explored(const Seed& root, GraphMode mode, std::size_t bound = kDefaultMaxSeeds) {
  ExchangeGraph g(root, mode);
  g.explore(bound);
  return g;
}

// Reachability inside the induced subgraph, from the edge list alone.
bool connected_oracle(const ExchangeGraph& g, const std::vector<int>& ids) {
  if (ids.empty()) return true;
  std::set<int> in(ids.begin(), ids.end()), seen{ids.front()};
  std::vector<int> stack{ids.front()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& e : g.edges())
      for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}})
        if (a == v && in.count(b) && seen.insert(b).second) stack.push_back(b);
  }
  return seen.size() == in.size();
}

bool is_cycle(const ExchangeGraph& g, std::size_t len) {
  if (g.vertices().size() != len || g.edges().size() != len) return false;
  for (const auto& nbrs : g.adjacency())
    if (nbrs.size() != 2) return false;
  std::vector<int> all(len);
  for (std::size_t i = 0; i < len; ++i) all[i] = static_cast<int>(i);
  return connected_oracle(g, all);
}

std::multiset<std::string> frame_multiset(const Seed& s) {
  std::multiset<std::string> out;
  for (const auto& f : s.frame) out.insert(f.raw_string());
  return out;
}

}  // namespace

TEST_CASE("A2 unlabelled graph is a pentagon") {
  for (long ell : {3L, 4L, 5L}) {
    const auto g = explored(a2_root(ell), GraphMode::Unlabelled);
    CHECK_FALSE(g.truncated());
    CHECK(is_cycle(g, 5));
    // labels alternate around the cycle
    for (const auto& nbrs : g.adjacency()) CHECK(nbrs.size() == 2);
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
      std::set<int> labels;
      for (const auto& e : g.edges())
        if (e.u == static_cast<int>(v) || e.v == static_cast<int>(v)) labels.insert(e.k);
      CHECK(labels.size() <= 2);
    }
  }
}

TEST_CASE("A2 labelled graph is a 10-cycle") {
  const auto g = explored(a2_root(3), GraphMode::Labelled, 30);
  CHECK_FALSE(g.truncated());
  CHECK(is_cycle(g, 10));
}

TEST_CASE("A2 cluster variables") {
  const auto g = explored(a2_root(3), GraphMode::Unlabelled);
  const auto& T = *g.root().ambient;
  const auto v = a2_variables(T);
  const auto& z = T.context();
  std::set<std::string> found;
  for (const auto& s : g.vertices())
    for (const auto& f : s.frame) found.insert(f.raw_string());
  const auto fifth = T.mul(v.y1, v.y2).scaled(testing::z(z, -1)) - T.scalar(testing::z(z, -1));
  CHECK(fifth == v.fifth);
  std::set<std::string> want;
  for (const auto& x : {v.x1, v.x2, v.y1, v.y2, fifth}) want.insert(x.raw_string());
  CHECK(found == want);
}

TEST_CASE("rank one seed without exchangeable indices") {
  const auto s = make_root_seed(Bicharacter::zero(3, 1), IntMatrix(1, 0), {}, IndexProfile{1, {}, {}});
  const auto g = explored(s, GraphMode::Labelled);
  CHECK(g.vertices().size() == 1);
  CHECK(g.edges().empty());
  CHECK_FALSE(g.truncated());
  const auto j = nlohmann::json::parse(export_json(g));
  CHECK(j["vertices"].size() == 1);
  CHECK(j["edges"].empty());
}

TEST_CASE("theta subsets") {
  const auto g = explored(a2_root(3), GraphMode::Unlabelled);
  const auto all = theta_all(g);
  CHECK(all.vertices.size() == 5);
  CHECK(all.connected);
  const auto two = theta_from_words(g, {{}, {0}});
  CHECK(two.vertices.size() == 2);
  CHECK(two.connected);
  const auto far = theta_from_words(g, {{}, {0, 1, 0}});
  CHECK(far.vertices.size() == 2);
  CHECK(far.connected == connected_oracle(g, far.vertices));
  CHECK_FALSE(far.connected);
  for (const auto& ids : std::vector<std::vector<int>>{{0, 1, 2}, {0, 2, 4}, {1, 3}, {0, 1, 2, 3, 4}, {3}})
    CHECK(theta_from_ids(g, ids).connected == connected_oracle(g, ids));
  CHECK_THROWS(theta_from_ids(g, {7}));
  CHECK_THROWS(theta_from_words(g, {{2}}));
}

TEST_CASE("exports") {
  const auto g = explored(a2_root(3), GraphMode::Unlabelled);
  const auto dot = export_dot(g);
  CHECK(dot.rfind("graph exchange {", 0) == 0);
  std::size_t nodes = 0, edges = 0, pos = 0;
  while ((pos = dot.find("[label=", pos)) != std::string::npos) {
    const auto line_start = dot.rfind('\n', pos);
    (dot.substr(line_start, pos - line_start).find("--") != std::string::npos ? edges : nodes)++;
    ++pos;
  }
  CHECK(nodes == 5);
  CHECK(edges == 5);
  CHECK(export_dot(g) == dot);

  const auto j = nlohmann::json::parse(export_json(g));
  CHECK(j["mode"] == "unlabelled");
  CHECK(j["vertices"].size() == 5);
  CHECK(j["edges"].size() == 5);
  std::set<int> labels;
  for (const auto& e : j["edges"]) labels.insert(e["label"].get<int>());
  CHECK(labels == std::set<int>{1, 2});
  CHECK(j["vertices"][0]["path"].empty());
  CHECK(j["vertices"][0]["frame"][0] == "x1");
}

TEST_CASE("edges are involutive and deduplication is sound") {
  for (auto mode : {GraphMode::Labelled, GraphMode::Unlabelled})
    for (const auto& root : {a2_root(3), b2_root(5)}) {
      const auto g = explored(root, mode);
      for (const auto& e : g.edges()) {
        const auto back = g.find(mutate_seed(g.vertices()[e.v], e.k));
        const auto fwd = g.find(mutate_seed(g.vertices()[e.u], e.k));
        // In unlabelled mode an edge may be stored with a permuted direction at v.
        if (mode == GraphMode::Labelled) {
          REQUIRE(back);
          CHECK(*back == e.u);
        }
        REQUIRE(fwd);
        CHECK(*fwd == e.v);
      }
      for (std::size_t v = 0; v < g.vertices().size(); ++v)
        for (int k : root.idx.ex) {
          const auto t = mutate_seed(g.vertices()[v], k);
          const auto w = g.find(t);
          REQUIRE(w);
          CHECK(frame_multiset(t) == frame_multiset(g.vertices()[*w]));
        }
      for (std::size_t a = 0; a < g.vertices().size(); ++a)
        for (std::size_t b = a + 1; b < g.vertices().size(); ++b)
          CHECK(seed_key(g.vertices()[a], mode == GraphMode::Labelled) !=
                seed_key(g.vertices()[b], mode == GraphMode::Labelled));
    }
}

TEST_CASE("exploration resumes") {
  ExchangeGraph g(a2_root(3), GraphMode::Labelled);
  g.explore(3);
  CHECK(g.truncated());
  CHECK(g.vertices().size() == 3);
  g.explore(6);
  CHECK(g.vertices().size() == 6);
  g.explore();
  const auto direct = explored(a2_root(3), GraphMode::Labelled);
  REQUIRE(g.vertices().size() == direct.vertices().size());
  for (std::size_t i = 0; i < direct.vertices().size(); ++i)
    CHECK(seed_key(g.vertices()[i], true) == seed_key(direct.vertices()[i], true));
  CHECK(g.edges().size() == direct.edges().size());
}

TEST_CASE("B2 graph and classical shadow") {
  for (long ell : {3L, 5L}) {
    const auto root = b2_root(ell);
    CHECK(is_cycle(explored(root, GraphMode::Unlabelled), 6));
    const auto q = explored(root, GraphMode::Labelled);
    ClassicalExchangeGraph c(make_classical_root(root.btilde, root.idx), GraphMode::Labelled);
    c.explore();
    CHECK(q.vertices().size() == c.vertices().size());
    const auto rep = shadow_isomorphism(q, c);
    CHECK(rep.isomorphic);
    CHECK(rep.shadows_match);
  }
  const auto a = a2_root(3);
  ClassicalExchangeGraph c(make_classical_root(a.btilde, a.idx), GraphMode::Labelled);
  c.explore();
  const auto rep = shadow_isomorphism(explored(a, GraphMode::Labelled), c);
  CHECK(rep.isomorphic);
  CHECK(rep.shadows_match);
}

TEST_CASE("graph mode names") {
  CHECK(parse_graph_mode("labelled") == GraphMode::Labelled);
  CHECK(parse_graph_mode("unlabelled") == GraphMode::Unlabelled);
  CHECK_THROWS(parse_graph_mode("both"));
}
