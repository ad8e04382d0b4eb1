#pragma once

// Breadth-first exploration of exchange graphs.

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rootqca/seed.hpp"

namespace rootqca {

enum class GraphMode { Labelled, Unlabelled };

GraphMode parse_graph_mode(const std::string& s);
std::string to_string(GraphMode m);

struct GraphEdge {
  int u = 0;
  int v = 0;
  int k = 0;  // mutation index, 0-based
};

inline constexpr std::size_t kDefaultMaxSeeds = 10000;

template <class SeedT>
class ExchangeGraphT {
 public:
  ExchangeGraphT(SeedT root, GraphMode mode);

  /// Expands until the frontier is empty or `max_seeds` vertices exist.
  /// Calling again with a larger bound resumes where the last call stopped.
  void explore(std::size_t max_seeds = kDefaultMaxSeeds);

  GraphMode mode() const { return mode_; }
  const std::vector<SeedT>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  bool truncated() const { return !frontier_.empty(); }
  const SeedT& root() const { return vertices_.front(); }

  std::optional<int> find(const SeedT& s) const;
  /// Neighbour of vertex u in direction k, when that direction was expanded.
  std::optional<int> neighbor(int u, int k) const;
  /// Vertex reached from the root by the word; throws if it is not in the graph.
  int resolve_word(const MutationWord& word) const;
  /// Vertices adjacent in the edge list.
  std::vector<std::vector<int>> adjacency() const;

 private:
  int insert(SeedT s);

  GraphMode mode_;
  std::vector<SeedT> vertices_;
  std::vector<GraphEdge> edges_;
  std::unordered_map<std::string, int> index_;
  std::map<std::pair<int, int>, int> edge_index_;
  std::map<std::pair<int, int>, int> adj_;
  std::deque<std::pair<int, std::size_t>> frontier_;
};

using ExchangeGraph = ExchangeGraphT<Seed>;
using ClassicalExchangeGraph = ExchangeGraphT<ClassicalSeed>;

extern template class ExchangeGraphT<Seed>;
extern template class ExchangeGraphT<ClassicalSeed>;

struct ThetaSet {
  std::vector<int> vertices;
  bool connected = true;
};

/// Selectors: mutation words from the root. An empty word is the root.
ThetaSet theta_from_words(const ExchangeGraph& g, const std::vector<MutationWord>& words);
ThetaSet theta_from_ids(const ExchangeGraph& g, const std::vector<int>& ids);
ThetaSet theta_all(const ExchangeGraph& g);
bool induced_connected(const ExchangeGraph& g, const std::vector<int>& ids);

std::string export_dot(const ExchangeGraph& g);
std::string export_json(const ExchangeGraph& g);

struct IsomorphismReport {
  bool isomorphic = false;
  bool shadows_match = false;
  std::string detail;
};
/// Label-preserving isomorphism between labelled quantum and classical graphs,
/// sending the root to the root, with frame l-th power shadows equal to the
/// classical clusters.
IsomorphismReport shadow_isomorphism(const ExchangeGraph& quantum, const ClassicalExchangeGraph& classical);

}  // namespace rootqca
