#include "bnfix/digraph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "bnfix/errors.hpp"

namespace bnfix {

Digraph::Digraph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
  out_.resize(static_cast<std::size_t>(n) + 1);
  in_.resize(static_cast<std::size_t>(n) + 1);
}

void Digraph::check_vertex(int v) const {
  if (v < 1 || v > n_)
    throw std::invalid_argument("Digraph: vertex " + std::to_string(v) +
                                " out of range [1," + std::to_string(n_) + "]");
}

bool Digraph::add_arc(int from, int to) {
  check_vertex(from);
  check_vertex(to);
  auto& o = out_[static_cast<std::size_t>(from)];
  const auto pos = std::lower_bound(o.begin(), o.end(), to);
  if (pos != o.end() && *pos == to) return false;
  o.insert(pos, to);
  auto& i = in_[static_cast<std::size_t>(to)];
  i.insert(std::lower_bound(i.begin(), i.end(), from), from);
  ++m_;
  return true;
}

bool Digraph::has_arc(int from, int to) const {
  check_vertex(from);
  check_vertex(to);
  const auto& o = out_[static_cast<std::size_t>(from)];
  return std::binary_search(o.begin(), o.end(), to);
}

const std::vector<int>& Digraph::out_neighbors(int v) const {
  check_vertex(v);
  return out_[static_cast<std::size_t>(v)];
}

const std::vector<int>& Digraph::in_neighbors(int v) const {
  check_vertex(v);
  return in_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int v = 1; v <= n_; ++v)
    for (int w : out_[static_cast<std::size_t>(v)]) out.emplace_back(v, w);
  return out;
}

std::vector<std::vector<int>> strong_components(const Digraph& g) {
  const int n = g.vertex_count();
  std::vector<int> index(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> low(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int next_index = 1;

  std::vector<std::pair<int, std::size_t>> frames;
  for (int root = 1; root <= n; ++root) {
    if (index[static_cast<std::size_t>(root)]) continue;
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = next_index++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;
    frames.emplace_back(root, 0);
    while (!frames.empty()) {
      const int v = frames.back().first;
      const auto& succ = g.out_neighbors(v);
      if (frames.back().second < succ.size()) {
        const int w = succ[frames.back().second++];
        if (!index[static_cast<std::size_t>(w)]) {
          index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = next_index++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(v)] =
              std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
      frames.pop_back();
      if (!frames.empty()) {
        const int parent = frames.back().first;
        low[static_cast<std::size_t>(parent)] =
            std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
      }
    }
  }
  // Tarjan emits components in reverse topological order.
  std::reverse(comps.begin(), comps.end());
  return comps;
}

namespace {

// Longest-cycle search over simple paths. Cycles are counted through their
// minimum allowed vertex, so each DFS only walks vertices >= the start.
struct CycleSearch {
  const Digraph& g;
  std::vector<char> on_path;
  int start = 0;
  int best = 0;
  int stop_above;  // abort as soon as a cycle longer than this is found; -1 never

  explicit CycleSearch(const Digraph& g_, int stop_above_ = -1)
      : g(g_), on_path(static_cast<std::size_t>(g_.vertex_count()) + 1, 0),
        stop_above(stop_above_) {}

  bool aborted() const { return stop_above >= 0 && best > stop_above; }

  void dfs(int v, int depth) {
    for (int w : g.out_neighbors(v)) {
      if (w == start) {
        best = std::max(best, depth);
        if (aborted()) return;
      } else if (w > start && !on_path[static_cast<std::size_t>(w)]) {
        on_path[static_cast<std::size_t>(w)] = 1;
        dfs(w, depth + 1);
        on_path[static_cast<std::size_t>(w)] = 0;
        if (aborted()) return;
      }
    }
  }

  int run() {
    const int n = g.vertex_count();
    for (start = 1; start <= n; ++start) {
      if (best >= n - start + 1) break;  // no longer cycle can avoid 1..start-1
      on_path[static_cast<std::size_t>(start)] = 1;
      dfs(start, 1);
      on_path[static_cast<std::size_t>(start)] = 0;
      if (aborted() || best == n) break;
    }
    return best;
  }
};

Digraph without_vertices(const Digraph& g, const std::vector<int>& removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (int v : removed) gone[static_cast<std::size_t>(v)] = 1;
  Digraph h(g.vertex_count());
  for (const auto& [u, v] : g.arcs())
    if (!gone[static_cast<std::size_t>(u)] && !gone[static_cast<std::size_t>(v)])
      h.add_arc(u, v);
  return h;
}

}  // namespace

int circumference(const Digraph& g, bool force) {
  if (g.vertex_count() > kExactCycleSearchLimit && !force)
    throw infeasible_error("circumference: exhaustive cycle search is bounded at 12 vertices");
  CycleSearch search(g);
  return search.run();
}

bool circumference_at_most(const Digraph& g, int l) {
  CycleSearch search(g, l);
  search.run();
  return search.best <= l;
}

std::vector<int> min_l_feedback_set(const Digraph& g, int l, bool force) {
  const int n = g.vertex_count();
  if (n > kExactCycleSearchLimit && !force)
    throw infeasible_error("min_l_feedback_set: subset search is bounded at 12 vertices");
  if (l < 0) throw std::invalid_argument("min_l_feedback_set: l must be >= 0");
  if (circumference_at_most(g, l)) return {};
  // subsets by increasing cardinality, each cardinality in lexicographic
  // order, so the first hit is the lexicographically smallest minimum set
  std::vector<int> pick;
  for (int size = 1; size <= n; ++size) {
    pick.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      if (circumference_at_most(without_vertices(g, pick), l)) return pick;
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (size - 1 - i)) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return {};  // unreachable: removing every vertex leaves no cycle
}

bool is_symmetric(const Digraph& g) {
  for (const auto& [u, v] : g.arcs())
    if (u != v && !g.has_arc(v, u)) return false;
  return true;
}

TreeInfo tree_info(const Digraph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw precondition_error("tree_info: empty graph");
  for (int v = 1; v <= n; ++v)
    if (!g.has_arc(v, v))
      throw precondition_error("tree_info: vertex " + std::to_string(v) + " has no loop");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  int edges = 0;
  for (const auto& [u, v] : g.arcs()) {
    if (u == v) continue;
    if (!g.has_arc(v, u))
      throw precondition_error("tree_info: arc " + std::to_string(u) + "->" +
                               std::to_string(v) + " has no reverse");
    if (u < v) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
      ++edges;
    }
  }
  if (edges != n - 1)
    throw precondition_error("tree_info: underlying graph is not a tree");
  // connectivity
  std::vector<int> dist(static_cast<std::size_t>(n) + 1, -1);
  auto bfs = [&](int root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(root)] = 0;
    q.push(root);
    int seen = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          q.push(w);
          ++seen;
        }
    }
    return seen;
  };
  if (bfs(1) != n)
    throw precondition_error("tree_info: underlying graph is not a tree (disconnected)");

  TreeInfo info;
  if (n <= 2) {
    // Degenerate convention: the smallest vertex is the root and is never a
    // leaf, so n=1 has no leaves and n=2 has exactly one.
    info.root = 1;
    info.non_leaves = {1};
    for (int v = 2; v <= n; ++v) info.leaves.push_back(v);
    return info;
  }
  int root = 0;
  for (int v = 1; v <= n; ++v)
    if (adj[static_cast<std::size_t>(v)].size() >= 2) {
      root = v;
      break;
    }
  bfs(root);
  info.root = root;
  std::vector<std::pair<int, int>> order;  // (distance, label)
  for (int v = 1; v <= n; ++v) {
    if (adj[static_cast<std::size_t>(v)].size() >= 2)
      order.emplace_back(dist[static_cast<std::size_t>(v)], v);
    else
      info.leaves.push_back(v);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [d, v] : order) info.non_leaves.push_back(v);
  return info;
}

}  // namespace bnfix
