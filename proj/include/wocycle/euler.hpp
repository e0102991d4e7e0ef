#pragma once

// Euler tour extraction (iterative Hierholzer) and cycle spelling: a tour of
// the transition graph concatenated block by block is the finished cycle.

#include <optional>

#include "families.hpp"
#include "graph.hpp"

namespace wocycle {

/// Spelled cyclic symbol sequence plus how it was produced. Reading windows
/// of object_length symbols at offsets j*(L-s), wrapping around, yields every
/// family word exactly once.
struct CycleResult {
  Word symbols;
  std::string family;  // descriptor
  int overlap = 0;     // s
  int object_length = 0;
  std::size_t object_count = 0;
};

struct BalanceDiagnosis {
  Word vertex;
  int in_degree = 0;
  int out_degree = 0;
};

struct ConnectivityDiagnosis {
  std::size_t components = 0;
  std::vector<std::size_t> sizes;          // per component, in discovery order
  std::vector<Word> representatives;       // lexicographically smallest vertex each
};

/// No Euler tour exists: the graph is unbalanced or not weakly connected.
/// The second case is a legitimate outcome (some families genuinely have no
/// cycle at the requested overlap), so the diagnosis is carried along.
class cycle_error : public std::runtime_error {
 public:
  enum class reason { not_balanced, not_connected };

  cycle_error(std::string what, BalanceDiagnosis d)
      : std::runtime_error(std::move(what)), why_(reason::not_balanced), balance_(std::move(d)) {}
  cycle_error(std::string what, ConnectivityDiagnosis d)
      : std::runtime_error(std::move(what)), why_(reason::not_connected),
        connectivity_(std::move(d)) {}

  reason why() const noexcept { return why_; }
  const std::optional<BalanceDiagnosis>& balance() const noexcept { return balance_; }
  const std::optional<ConnectivityDiagnosis>& connectivity() const noexcept {
    return connectivity_;
  }

 private:
  reason why_;
  std::optional<BalanceDiagnosis> balance_;
  std::optional<ConnectivityDiagnosis> connectivity_;
};

/// Closed tour using every edge exactly once, as an edge-index sequence.
/// Starts at the lexicographically smallest vertex and consumes out-edges in
/// lexicographic object order, so identical graphs give identical tours.
/// Isolated vertices are ignored by the connectivity check.
inline std::vector<int> euler_tour(const TransitionGraph& g) {
  const BalanceReport bal = check_balance(g);
  if (!bal.balanced) {
    const Word& v = g.vertex_words[static_cast<std::size_t>(bal.vertex)];
    throw cycle_error("graph is not balanced at vertex " + word_to_string(v) +
                          " (in " + std::to_string(bal.in_degree) + ", out " +
                          std::to_string(bal.out_degree) + ")",
                      BalanceDiagnosis{v, bal.in_degree, bal.out_degree});
  }

  auto comps = weak_components(g);
  std::vector<const std::vector<int>*> active;
  for (const auto& comp : comps) {
    bool carries_edges = false;
    for (int v : comp)
      if (g.degree(v) > 0) {
        carries_edges = true;
        break;
      }
    if (carries_edges) active.push_back(&comp);
  }
  if (active.size() != 1) {
    ConnectivityDiagnosis diag;
    diag.components = active.size();
    for (const auto* comp : active) {
      diag.sizes.push_back(comp->size());
      const Word* best = &g.vertex_words[static_cast<std::size_t>(comp->front())];
      for (int v : *comp) {
        const Word& w = g.vertex_words[static_cast<std::size_t>(v)];
        if (w < *best) best = &w;
      }
      diag.representatives.push_back(*best);
    }
    throw cycle_error("graph is not weakly connected: " + std::to_string(active.size()) +
                          " components carry edges",
                      diag);
  }

  int start = -1;
  for (int v : *active.front()) {
    if (g.degree(v) == 0) continue;
    if (start < 0 || g.vertex_words[static_cast<std::size_t>(v)] <
                         g.vertex_words[static_cast<std::size_t>(start)])
      start = v;
  }

  // Hierholzer with an explicit stack; subtours splice in as the stack
  // unwinds. Edges pop in reverse tour order.
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  std::vector<std::pair<int, int>> stack;  // (vertex, edge that led here)
  stack.reserve(g.edge_count() + 1);
  stack.emplace_back(start, -1);
  std::vector<int> tour;
  tour.reserve(g.edge_count());
  while (!stack.empty()) {
    const int v = stack.back().first;
    auto& cur = cursor[static_cast<std::size_t>(v)];
    const auto& out = g.out_edges[static_cast<std::size_t>(v)];
    if (cur < out.size()) {
      const int id = out[cur++];
      stack.emplace_back(g.edges[static_cast<std::size_t>(id)].head, id);
    } else {
      if (stack.back().second >= 0) tour.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  std::reverse(tour.begin(), tour.end());
  if (tour.size() != g.edge_count())
    throw std::logic_error("euler tour did not cover every edge");
  return tour;
}

/// Concatenates, per tour edge, the first L-s symbols of its object word.
inline CycleResult spell(const std::vector<int>& tour, const TransitionGraph& g) {
  const int d = g.object_length - g.overlap;
  CycleResult c;
  c.family = g.family;
  c.overlap = g.overlap;
  c.object_length = g.object_length;
  c.object_count = tour.size();
  c.symbols.reserve(tour.size() * static_cast<std::size_t>(d));
  for (int id : tour) {
    const Word& w = g.edges[static_cast<std::size_t>(id)].object;
    c.symbols.insert(c.symbols.end(), w.begin(), w.begin() + d);
  }
  return c;
}

namespace detail {

// Length-1 words admit no positive overlap; their "cycle" is the sorted
// concatenation, each word a window at consecutive offsets.
inline CycleResult concatenate_words(const std::vector<Word>& words, const Family& f) {
  CycleResult c;
  c.family = f.descriptor();
  c.overlap = 0;
  c.object_length = 1;
  c.object_count = words.size();
  for (const auto& w : words) c.symbols.push_back(w.front());
  return c;
}

}  // namespace detail

/// s-overlap cycle over the family's own words: build + euler_tour + spell.
inline CycleResult generate_ocycle(const Family& f, int overlap) {
  auto g = build_graph(enumerate(f), overlap, f.descriptor());
  return spell(euler_tour(g), g);
}

/// The full-overlap cycle for a family. Full-word and prefix-notation kinds
/// use s = word length - 1 directly; multiset permutations switch to their
/// prefix words first (the dropped letter is forced, so the prefixes carry
/// the whole family and their graph is the one that can be connected).
inline CycleResult generate_ucycle(const Family& f) {
  std::vector<Word> words;
  if (f.kind == FamilyKind::multiset_perms && f.ms.size() >= 2)
    words = prefix_words(f);
  else
    words = enumerate(f);
  const int length = static_cast<int>(words.front().size());
  if (length == 1) return detail::concatenate_words(words, f);
  auto g = build_graph(std::move(words), length - 1, f.descriptor());
  return spell(euler_tour(g), g);
}

/// Rotates the cycle in place to the lexicographically least rotation among
/// those that keep object windows aligned (multiples of L-s). Two candidate
/// start blocks race; a mismatch at relative block k eliminates k+1 starts.
inline void rotate_to_canonical(CycleResult& c) {
  const int d = c.object_length - c.overlap;
  const std::size_t m = c.object_count;
  if (m <= 1 || d <= 0) return;
  Word& s = c.symbols;
  const std::size_t len = s.size();

  auto compare_blocks = [&](std::size_t a, std::size_t b) {
    for (int t = 0; t < d; ++t) {
      const int x = s[(a * static_cast<std::size_t>(d) + static_cast<std::size_t>(t)) % len];
      const int y = s[(b * static_cast<std::size_t>(d) + static_cast<std::size_t>(t)) % len];
      if (x != y) return x < y ? -1 : 1;
    }
    return 0;
  };

  std::size_t i = 0, j = 1, k = 0;
  while (i < m && j < m && k < m) {
    const int cmp = compare_blocks(i + k, j + k);
    if (cmp == 0) {
      ++k;
      continue;
    }
    if (cmp > 0)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  const std::size_t best = std::min(i, j) * static_cast<std::size_t>(d);
  std::rotate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(best), s.end());
}

}  // namespace wocycle
