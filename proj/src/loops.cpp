#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "ratkit/automaton.hpp"

namespace ratkit {

namespace {

using Mask = std::uint64_t;

struct Graph {
  std::size_t n = 0;
  std::vector<Mask> succ;
  std::vector<Mask> pred;

  bool has_loop(std::size_t p) const { return (succ[p] >> p) & 1u; }
};

Graph graph_of(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  if (n > 64) throw Error(ErrorKind::TooLarge, std::to_string(n) + " states");
  Graph g;
  g.n = n;
  g.succ.assign(n, 0);
  g.pred.assign(n, 0);
  for (auto [p, q] : arcs) {
    g.succ[p] |= Mask{1} << q;
    g.pred[q] |= Mask{1} << p;
  }
  return g;
}

Mask closure(const std::vector<Mask>& adj, std::size_t p, Mask within) {
  Mask seen = Mask{1} << p, frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (std::size_t q = 0; q < adj.size(); ++q)
      if ((frontier >> q) & 1u) next |= adj[q];
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Strongly connected components of the subgraph induced by `within`, listed
// by smallest state.
std::vector<Mask> components(const Graph& g, Mask within) {
  std::vector<Mask> out;
  Mask left = within;
  while (left) {
    std::size_t p = static_cast<std::size_t>(__builtin_ctzll(left));
    Mask scc = closure(g.succ, p, within) & closure(g.pred, p, within);
    out.push_back(scc);
    left &= ~scc;
  }
  return out;
}

bool is_ball(const Graph& g, Mask scc) {
  if (__builtin_popcountll(scc) >= 2) return true;
  std::size_t p = static_cast<std::size_t>(__builtin_ctzll(scc));
  return g.has_loop(p);
}

// What is known about the loop complexity of an induced subgraph.
struct Bounds {
  int above = -1;                                // complexity > above
  int at_most = std::numeric_limits<int>::max();  // complexity <= at_most
};

// Whether the subgraph induced by `within` has loop complexity at most k. A
// ball needs a state whose removal leaves complexity at most k - 1; states
// with many arcs inside the ball are tried first.
bool complexity_at_most(const Graph& g, Mask within, int k,
                        std::unordered_map<Mask, Bounds>& memo) {
  Bounds& known = memo[within];
  if (known.at_most <= k) return true;
  if (known.above >= k) return false;
  bool result = true;
  auto sccs = components(g, within);
  if (sccs.size() == 1 && is_ball(g, within)) {
    result = false;
    if (k > 0) {
      std::vector<std::pair<int, std::size_t>> candidates;
      for (std::size_t s = 0; s < g.n; ++s)
        if ((within >> s) & 1u)
          candidates.emplace_back(-__builtin_popcountll((g.succ[s] | g.pred[s]) & within), s);
      std::sort(candidates.begin(), candidates.end());
      for (const auto& [degree, s] : candidates)
        if (complexity_at_most(g, within & ~(Mask{1} << s), k - 1, memo)) {
          result = true;
          break;
        }
    }
  } else {
    for (Mask scc : sccs)
      if (is_ball(g, scc) && !complexity_at_most(g, scc, k, memo)) {
        result = false;
        break;
      }
  }
  Bounds& update = memo[within];  // the recursion may have rehashed the map
  if (result) update.at_most = std::min(update.at_most, k);
  else update.above = std::max(update.above, k);
  return result;
}

int complexity(const Graph& g, Mask within) {
  std::unordered_map<Mask, Bounds> memo;
  int k = 0;
  while (!complexity_at_most(g, within, k, memo)) ++k;
  return k;
}

Mask all_states(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

int index_of(const Graph& g, const IndexedGraph& ig, const std::vector<std::size_t>& rank,
             Mask within) {
  if (!within) return 0;
  auto inside = [&](std::size_t p) { return ((within >> p) & 1u) != 0; };
  auto sccs = components(g, within);
  if (sccs.size() == 1 && is_ball(g, within)) {
    std::size_t top = g.n;
    for (std::size_t p = 0; p < g.n; ++p)
      if (inside(p) && (top == g.n || rank[p] > rank[top])) top = p;
    int adjacent = 0;
    for (const auto& e : ig.edges)
      if (inside(e.src) && inside(e.dst) && (e.src == top || e.dst == top))
        adjacent = std::max(adjacent, e.index);
    return 1 + std::max(adjacent, index_of(g, ig, rank, within & ~(Mask{1} << top)));
  }
  std::vector<std::size_t> component(g.n, 0);
  std::vector<bool> in_ball(sccs.size(), false);
  int result = 0;
  for (std::size_t i = 0; i < sccs.size(); ++i) {
    for (std::size_t p = 0; p < g.n; ++p)
      if ((sccs[i] >> p) & 1u) component[p] = i;
    in_ball[i] = is_ball(g, sccs[i]);
    if (in_ball[i]) result = std::max(result, index_of(g, ig, rank, sccs[i]));
  }
  for (const auto& e : ig.edges) {
    if (!inside(e.src) || !inside(e.dst)) continue;
    bool within_ball = component[e.src] == component[e.dst] && in_ball[component[e.src]];
    if (!within_ball) result = std::max(result, e.index);
  }
  return result;
}

std::vector<std::pair<std::size_t, std::size_t>> arcs_of(const Automaton& a) {
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (const auto& [k, w] : a.edges()) arcs.emplace_back(k.src, k.dst);
  return arcs;
}

}  // namespace

int loop_complexity(const Automaton& a, std::size_t bound) {
  if (a.size() > bound)
    throw Error(ErrorKind::TooLarge, std::to_string(a.size()) + " states exceed the bound " +
                                         std::to_string(bound));
  Graph g = graph_of(a.size(), arcs_of(a));
  return complexity(g, all_states(a.size()));
}

int loop_index(const IndexedGraph& ig, const Order& order) {
  if (!is_order(order, ig.size)) throw Error(ErrorKind::FormatError, "not an order on the states");
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (const auto& e : ig.edges) arcs.emplace_back(e.src, e.dst);
  Graph g = graph_of(ig.size, arcs);
  std::vector<std::size_t> rank(ig.size);
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  return index_of(g, ig, rank, all_states(ig.size));
}

int loop_index(const Automaton& a, const Order& order) {
  IndexedGraph ig;
  ig.size = a.size();
  for (const auto& [k, w] : a.edges()) ig.edges.push_back(IndexedEdge{k.src, k.dst, 0});
  return loop_index(ig, order);
}

}  // namespace ratkit
