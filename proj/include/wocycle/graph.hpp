#pragma once

// Overlap transition graph: one edge per object word, vertices are the
// length-s prefixes and suffixes. Euler tours of this graph spell the cycles.

#include <string>
#include <unordered_map>
#include <vector>

#include "core.hpp"
#include "union_find.hpp"

namespace wocycle {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : w)
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

/// Directed multigraph for one family and one overlap size s. For every edge,
/// tail = prefix_s(object) and head = suffix_s(object); parallel edges are
/// kept distinct by carrying the full object word. Vertices are interned into
/// dense indices so tour extraction can consume edges in O(1).
struct TransitionGraph {
  std::string family;  // descriptor tag, informational
  int overlap = 0;     // s
  int object_length = 0;

  struct Edge {
    int tail;
    int head;
    Word object;
  };

  std::vector<Word> vertex_words;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out_edges;  // per vertex, sorted by object word
  std::vector<int> in_degree;

  std::size_t vertex_count() const { return vertex_words.size(); }
  std::size_t edge_count() const { return edges.size(); }

  int degree(int v) const {
    return static_cast<int>(out_edges[static_cast<std::size_t>(v)].size()) +
           in_degree[static_cast<std::size_t>(v)];
  }

  /// Index of the lexicographically smallest vertex word.
  int min_vertex() const {
    int best = 0;
    for (std::size_t i = 1; i < vertex_words.size(); ++i)
      if (vertex_words[i] < vertex_words[static_cast<std::size_t>(best)])
        best = static_cast<int>(i);
    return best;
  }
};

inline TransitionGraph build_graph(std::vector<Word> words, int overlap,
                                   std::string family_tag = {}) {
  if (words.empty())
    throw domain_error(errc::empty_family, "cannot build a graph over an empty family");
  const int length = static_cast<int>(words.front().size());
  for (const auto& w : words)
    if (static_cast<int>(w.size()) != length)
      throw domain_error(errc::parameter, "family words must share one length");
  if (overlap < 1 || overlap > length - 1)
    throw domain_error(errc::overlap_out_of_range,
                       "overlap must be in 1.." + std::to_string(length - 1) +
                           " for words of length " + std::to_string(length));

  TransitionGraph g;
  g.family = std::move(family_tag);
  g.overlap = overlap;
  g.object_length = length;

  std::unordered_map<Word, int, WordHash> index;
  auto intern = [&](Word w) {
    auto [it, inserted] = index.try_emplace(std::move(w), static_cast<int>(g.vertex_words.size()));
    if (inserted) g.vertex_words.push_back(it->first);
    return it->second;
  };

  g.edges.reserve(words.size());
  for (auto& w : words) {
    const int tail = intern(take_prefix(w, static_cast<std::size_t>(overlap)));
    const int head = intern(take_suffix(w, static_cast<std::size_t>(overlap)));
    g.edges.push_back({tail, head, std::move(w)});
  }
  words.clear();
  words.shrink_to_fit();

  g.out_edges.resize(g.vertex_words.size());
  g.in_degree.assign(g.vertex_words.size(), 0);
  for (std::size_t id = 0; id < g.edges.size(); ++id) {
    g.out_edges[static_cast<std::size_t>(g.edges[id].tail)].push_back(static_cast<int>(id));
    ++g.in_degree[static_cast<std::size_t>(g.edges[id].head)];
  }
  for (auto& out : g.out_edges)
    std::sort(out.begin(), out.end(), [&](int a, int b) {
      return g.edges[static_cast<std::size_t>(a)].object <
             g.edges[static_cast<std::size_t>(b)].object;
    });
  return g;
}

struct BalanceReport {
  bool balanced = true;
  int vertex = -1;  // first violating vertex, by index
  int in_degree = 0;
  int out_degree = 0;
};

inline BalanceReport check_balance(const TransitionGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const int out = static_cast<int>(g.out_edges[v].size());
    if (out != g.in_degree[v])
      return {false, static_cast<int>(v), g.in_degree[v], out};
  }
  return {};
}

/// Partition of all vertices into weakly connected components. Components are
/// ordered by their smallest vertex index, vertices within ascending.
inline std::vector<std::vector<int>> weak_components(const TransitionGraph& g) {
  UnionFind uf(static_cast<int>(g.vertex_count()));
  for (const auto& e : g.edges) uf.unite(e.tail, e.head);
  std::unordered_map<int, std::size_t> slot;
  std::vector<std::vector<int>> comps;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const int root = uf.find(static_cast<int>(v));
    auto [it, inserted] = slot.try_emplace(root, comps.size());
    if (inserted) comps.emplace_back();
    comps[it->second].push_back(static_cast<int>(v));
  }
  return comps;
}

struct GraphSummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  bool balanced = false;
};

inline GraphSummary summarize(const TransitionGraph& g) {
  return {g.vertex_count(), g.edge_count(), weak_components(g).size(),
          check_balance(g).balanced};
}

/// DOT rendering: vertex labels are space-separated symbols, edge labels the
/// object words. Vertices and edges are emitted in lexicographic order.
inline std::string export_dot(const TransitionGraph& g) {
  std::vector<int> vorder(g.vertex_count());
  std::iota(vorder.begin(), vorder.end(), 0);
  std::sort(vorder.begin(), vorder.end(), [&](int a, int b) {
    return g.vertex_words[static_cast<std::size_t>(a)] <
           g.vertex_words[static_cast<std::size_t>(b)];
  });
  std::vector<int> eorder(g.edge_count());
  std::iota(eorder.begin(), eorder.end(), 0);
  std::sort(eorder.begin(), eorder.end(), [&](int a, int b) {
    return g.edges[static_cast<std::size_t>(a)].object <
           g.edges[static_cast<std::size_t>(b)].object;
  });

  std::string out = "digraph transition {\n";
  for (int v : vorder)
    out += "  \"" + word_to_string(g.vertex_words[static_cast<std::size_t>(v)]) + "\";\n";
  for (int id : eorder) {
    const auto& e = g.edges[static_cast<std::size_t>(id)];
    out += "  \"" + word_to_string(g.vertex_words[static_cast<std::size_t>(e.tail)]) +
           "\" -> \"" + word_to_string(g.vertex_words[static_cast<std::size_t>(e.head)]) +
           "\" [label=\"" + word_to_string(e.object) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace wocycle
