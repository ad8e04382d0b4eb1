#include "rootqca/graph.hpp"

#include <json.hpp>
#include <queue>
#include <sstream>

namespace rootqca {

GraphMode parse_graph_mode(const std::string& s) {
  if (s == "labelled" || s == "labeled") return GraphMode::Labelled;
  if (s == "unlabelled" || s == "unlabeled") return GraphMode::Unlabelled;
  throw std::invalid_argument("graph mode must be 'labelled' or 'unlabelled', got '" + s + "'");
}

std::string to_string(GraphMode m) { return m == GraphMode::Labelled ? "labelled" : "unlabelled"; }

template <class SeedT>
ExchangeGraphT<SeedT>::ExchangeGraphT(SeedT root, GraphMode mode) : mode_(mode) {
  insert(std::move(root));
}

template <class SeedT>
int ExchangeGraphT<SeedT>::insert(SeedT s) {
  const int id = static_cast<int>(vertices_.size());
  index_.emplace(seed_key(s, mode_ == GraphMode::Labelled), id);
  vertices_.push_back(std::move(s));
  frontier_.emplace_back(id, 0);
  return id;
}

template <class SeedT>
void ExchangeGraphT<SeedT>::explore(std::size_t max_seeds) {
  const bool labelled = mode_ == GraphMode::Labelled;
  while (!frontier_.empty()) {
    auto& [u, pos] = frontier_.front();
    const std::vector<int> ex = vertices_[u].idx.ex;
    for (; pos < ex.size(); ++pos) {
      const int k = ex[pos];
      SeedT next = mutate_seed(vertices_[u], k);
      const std::string key = seed_key(next, labelled);
      int v;
      auto it = index_.find(key);
      if (it != index_.end()) {
        v = it->second;
      } else {
        if (vertices_.size() >= max_seeds) return;
        v = insert(std::move(next));  // deque::push_back keeps references valid
      }
      adj_[{u, k}] = v;
      const auto pair = std::minmax(u, v);
      if (!edge_index_.count(pair)) {
        edge_index_.emplace(pair, static_cast<int>(edges_.size()));
        edges_.push_back(GraphEdge{u, v, k});
      }
    }
    frontier_.pop_front();
  }
}

template <class SeedT>
std::optional<int> ExchangeGraphT<SeedT>::find(const SeedT& s) const {
  auto it = index_.find(seed_key(s, mode_ == GraphMode::Labelled));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

template <class SeedT>
std::optional<int> ExchangeGraphT<SeedT>::neighbor(int u, int k) const {
  auto it = adj_.find({u, k});
  if (it == adj_.end()) return std::nullopt;
  return it->second;
}

template <class SeedT>
int ExchangeGraphT<SeedT>::resolve_word(const MutationWord& word) const {
  for (int k : word)
    if (!root().idx.is_exchangeable(k))
      throw std::invalid_argument("selector: index " + std::to_string(k + 1) + " is not exchangeable");
  auto v = find(mutate_along(root(), word));
  if (!v) throw std::invalid_argument("selector: mutation word does not reach an explored seed");
  return *v;
}

template <class SeedT>
std::vector<std::vector<int>> ExchangeGraphT<SeedT>::adjacency() const {
  std::vector<std::vector<int>> adj(vertices_.size());
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    if (e.u != e.v) adj[e.v].push_back(e.u);
  }
  return adj;
}

template class ExchangeGraphT<Seed>;
template class ExchangeGraphT<ClassicalSeed>;

// ---------------------------------------------------------------- theta

bool induced_connected(const ExchangeGraph& g, const std::vector<int>& ids) {
  if (ids.empty()) return true;
  std::vector<char> in(g.vertices().size(), 0), seen(g.vertices().size(), 0);
  for (int v : ids) in[v] = 1;
  const auto adj = g.adjacency();
  std::queue<int> q;
  q.push(ids.front());
  seen[ids.front()] = 1;
  std::size_t count = 0;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    ++count;
    for (int w : adj[u])
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
  }
  std::size_t distinct = 0;
  for (char c : in) distinct += c;
  return count == distinct;
}

ThetaSet theta_from_ids(const ExchangeGraph& g, const std::vector<int>& ids) {
  ThetaSet t;
  std::vector<char> used(g.vertices().size(), 0);
  for (int v : ids) {
    if (v < 0 || v >= static_cast<int>(g.vertices().size()))
      throw std::invalid_argument("selector: vertex id " + std::to_string(v) + " is not in the graph");
    if (!used[v]++) t.vertices.push_back(v);
  }
  t.connected = induced_connected(g, t.vertices);
  return t;
}

ThetaSet theta_from_words(const ExchangeGraph& g, const std::vector<MutationWord>& words) {
  std::vector<int> ids;
  for (const auto& w : words) ids.push_back(g.resolve_word(w));
  return theta_from_ids(g, ids);
}

ThetaSet theta_all(const ExchangeGraph& g) {
  std::vector<int> ids(g.vertices().size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  return theta_from_ids(g, ids);
}

// ---------------------------------------------------------------- export

namespace {

std::string path_string(const MutationWord& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i] + 1;
  os << ']';
  return os.str();
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const ExchangeGraph& g) {
  std::ostringstream os;
  os << "graph exchange {\n";
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    const auto& s = g.vertices()[i];
    std::string label = dot_escape("v" + std::to_string(i) + " " + path_string(s.path));
    for (const auto& f : frame_strings(s)) label += "\\n" + dot_escape(f);
    os << "  v" << i << " [label=\"" << label << "\"];\n";
  }
  for (const auto& e : g.edges()) os << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.k + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string export_json(const ExchangeGraph& g) {
  nlohmann::json j;
  j["mode"] = to_string(g.mode());
  j["truncated"] = g.truncated();
  j["vertices"] = nlohmann::json::array();
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    const auto& s = g.vertices()[i];
    nlohmann::json path = nlohmann::json::array();
    for (int k : s.path) path.push_back(k + 1);
    j["vertices"].push_back({{"id", i}, {"path", path}, {"frame", frame_strings(s)}});
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({{"source", e.u}, {"target", e.v}, {"label", e.k + 1}});
  return j.dump(2);
}

// ---------------------------------------------------------------- shadow

IsomorphismReport shadow_isomorphism(const ExchangeGraph& quantum, const ClassicalExchangeGraph& classical) {
  IsomorphismReport rep;
  if (quantum.mode() != GraphMode::Labelled || classical.mode() != GraphMode::Labelled) {
    rep.detail = "both graphs must be labelled";
    return rep;
  }
  const std::size_t n = quantum.vertices().size();
  if (n != classical.vertices().size()) {
    rep.detail = "vertex counts differ: " + std::to_string(n) + " vs " + std::to_string(classical.vertices().size());
    return rep;
  }
  if (quantum.edges().size() != classical.edges().size()) {
    rep.detail = "edge counts differ";
    return rep;
  }
  std::vector<int> map(n, -1), inv(n, -1);
  map[0] = 0;
  inv[0] = 0;
  std::queue<int> q;
  q.push(0);
  const auto& ex = quantum.root().idx.ex;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int k : ex) {
      auto qv = quantum.neighbor(u, k);
      auto cv = classical.neighbor(map[u], k);
      if (qv.has_value() != cv.has_value()) {
        rep.detail = "direction " + std::to_string(k + 1) + " explored on one side only at vertex " + std::to_string(u);
        return rep;
      }
      if (!qv) continue;
      if (map[*qv] < 0 && inv[*cv] < 0) {
        map[*qv] = *cv;
        inv[*cv] = *qv;
        q.push(*qv);
      } else if (map[*qv] != *cv) {
        rep.detail = "labelled adjacency is not preserved at vertex " + std::to_string(u);
        return rep;
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (map[v] < 0) {
      rep.detail = "vertex " + std::to_string(v) + " unreachable from the root";
      return rep;
    }
  rep.isomorphic = true;
  const QuantumTorus& ring = *classical.root().ring;
  for (std::size_t v = 0; v < n; ++v) {
    auto sh = ell_power_shadow(quantum.vertices()[v], ring);
    if (!sh || *sh != classical.vertices()[map[v]].frame) {
      rep.detail = "l-th power shadow differs from the classical cluster at vertex " + std::to_string(v);
      return rep;
    }
  }
  rep.shadows_match = true;
  rep.detail = "ok";
  return rep;
}

}  // namespace rootqca
