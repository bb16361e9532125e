#include "bnfix/synth.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "bnfix/errors.hpp"
#include "bnfix/words.hpp"

namespace bnfix {

BooleanNetwork conjunctive_network(const Digraph& g) {
  const int n = g.vertex_count();
  return BooleanNetwork::from_components(n, [&](int i, std::uint32_t x) {
    for (int j : g.in_neighbors(i))
      if (!((x >> (n - j)) & 1u)) return false;
    return true;
  });
}

Word greedy_fix_word(const std::vector<BooleanNetwork>& family) {
  Word out;
  for (std::size_t m = 0; m < family.size(); ++m) {
    const BooleanNetwork& f = family[m];
    if (!is_fixable(f))
      throw not_fixable_error("greedy_fix_word: family member " +
                              std::to_string(m + 1) + " is not fixable");
    const int n = f.n();
    const std::uint32_t rows = f.state_count();
    Word wf;
    std::vector<std::uint32_t> prev_state(rows);
    std::vector<int> prev_letter(rows);
    std::vector<char> seen(rows);
    for (std::uint32_t x = 0; x < rows; ++x) {
      const std::uint32_t y = apply_word(f, wf, x);
      if (f.is_fixed_point(y)) continue;
      // shortest asynchronous path from y to any fixed point
      std::fill(seen.begin(), seen.end(), 0);
      std::queue<std::uint32_t> queue;
      seen[y] = 1;
      queue.push(y);
      std::uint32_t hit = y;
      while (!queue.empty()) {
        const std::uint32_t u = queue.front();
        queue.pop();
        if (f.is_fixed_point(u)) {
          hit = u;
          break;
        }
        for (int i = 1; i <= n; ++i) {
          const std::uint32_t v = f.apply_letter(i, u);
          if (v != u && !seen[v]) {
            seen[v] = 1;
            prev_state[v] = u;
            prev_letter[v] = i;
            queue.push(v);
          }
        }
      }
      Word path;
      for (std::uint32_t u = hit; u != y; u = prev_state[u])
        path.push_back(prev_letter[u]);
      wf.insert(wf.end(), path.rbegin(), path.rend());
    }
    out.insert(out.end(), wf.begin(), wf.end());
  }
  return out;
}

Word acyclic_instance_word(const BooleanNetwork& f) {
  if (!is_async_acyclic(f))
    throw precondition_error("acyclic_instance_word: asynchronous graph has a cycle");
  const int n = f.n();
  const std::uint32_t rows = f.state_count();

  std::vector<char> fixed(rows);
  std::uint32_t fixed_count = 0;
  for (std::uint32_t x = 0; x < rows; ++x)
    if ((fixed[x] = f.is_fixed_point(x) ? 1 : 0)) ++fixed_count;

  // Topological sort of the non-fixed states (smallest index first among the
  // ready ones), then the fixed points; every asynchronous arc goes strictly
  // forward in this order.
  std::vector<std::uint32_t> indegree(rows, 0);
  for (std::uint32_t x = 0; x < rows; ++x) {
    if (fixed[x]) continue;
    for (int i = 1; i <= n; ++i) {
      const std::uint32_t y = f.apply_letter(i, x);
      if (y != x && !fixed[y]) ++indegree[y];
    }
  }
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
  for (std::uint32_t x = 0; x < rows; ++x)
    if (!fixed[x] && indegree[x] == 0) ready.push(x);
  std::vector<std::uint32_t> order;
  order.reserve(rows);
  while (!ready.empty()) {
    const std::uint32_t x = ready.top();
    ready.pop();
    order.push_back(x);
    for (int i = 1; i <= n; ++i) {
      const std::uint32_t y = f.apply_letter(i, x);
      if (y != x && !fixed[y] && --indegree[y] == 0) ready.push(y);
    }
  }
  for (std::uint32_t x = 0; x < rows; ++x)
    if (fixed[x]) order.push_back(x);

  std::vector<std::uint32_t> position(rows);
  for (std::uint32_t p = 0; p < rows; ++p) position[order[p]] = p;

  Word w;
  const std::uint32_t moves = rows - fixed_count;
  w.reserve(moves);
  for (std::uint32_t p = 0; p < moves; ++p) {
    const std::uint32_t x = order[p];
    for (int i = 1; i <= n; ++i) {
      const std::uint32_t y = f.apply_letter(i, x);
      if (y != x && position[y] > p) {
        w.push_back(i);
        break;
      }
    }
  }
  return w;
}

Word tree_word(const Digraph& g) {
  const TreeInfo info = tree_info(g);
  const auto& v = info.non_leaves;
  Word w;
  for (std::size_t p = v.size(); p-- > 1;) w.push_back(v[p]);
  w.push_back(v[0]);
  for (std::size_t p = 1; p < v.size(); ++p) w.push_back(v[p]);
  for (int leaf : info.leaves) w.push_back(leaf);
  return w;
}

namespace {

// Sandwich word over *all* vertices of a loop-full tree, ordered by distance
// from the root (ties by label): u_n ... u_2 u_1 u_2 ... u_n, length 2n - 1.
// Unlike tree_word, this fixes every monotone network on the tree even when
// components are constant, which is what a strong component needs once its
// upstream inputs are frozen; a constant leaf can flip a neighbor after the
// single leaf update that tree_word grants it.
Word tree_sandwich_word(const Digraph& g) {
  const TreeInfo info = tree_info(g);
  const int n = g.vertex_count();
  std::vector<int> dist(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> queue{info.root};
  dist[static_cast<std::size_t>(info.root)] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (int w : g.out_neighbors(queue[h]))
      if (w != queue[h] && dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(queue[h])] + 1;
        queue.push_back(w);
      }
  std::vector<std::pair<int, int>> order;
  for (int v = 1; v <= n; ++v) order.emplace_back(dist[static_cast<std::size_t>(v)], v);
  std::sort(order.begin(), order.end());
  Word w;
  for (std::size_t p = order.size(); p-- > 1;) w.push_back(order[p].second);
  w.push_back(order[0].second);
  for (std::size_t p = 1; p < order.size(); ++p) w.push_back(order[p].second);
  return w;
}

}  // namespace

Word feedback_word(const Digraph& g, bool force) {
  const int n = g.vertex_count();
  const std::vector<int> fvs = min_l_feedback_set(g, 2, force);
  const int tau = static_cast<int>(fvs.size());
  const int alpha = n - tau;

  // Relabel so the feedback set becomes {alpha+1, ..., n}; the remaining
  // vertices keep their relative order as 1..alpha.
  std::vector<int> to_new(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> to_old(static_cast<std::size_t>(n) + 1, 0);
  {
    std::vector<char> in_fvs(static_cast<std::size_t>(n) + 1, 0);
    for (int v : fvs) in_fvs[static_cast<std::size_t>(v)] = 1;
    int low = 0, high = alpha;
    for (int v = 1; v <= n; ++v)
      to_new[static_cast<std::size_t>(v)] =
          in_fvs[static_cast<std::size_t>(v)] ? ++high : ++low;
    for (int v = 1; v <= n; ++v)
      to_old[static_cast<std::size_t>(to_new[static_cast<std::size_t>(v)])] = v;
  }

  Word w;  // in relabeled letters
  if (alpha > 0) {
    Digraph rest(alpha);
    for (const auto& [u, v] : g.arcs()) {
      const int a = to_new[static_cast<std::size_t>(u)];
      const int b = to_new[static_cast<std::size_t>(v)];
      if (a <= alpha && b <= alpha) rest.add_arc(a, b);
    }
    for (const auto& comp : strong_components(rest)) {
      // Circumference <= 2 after the removal, so each strong component's
      // underlying graph is a tree; its loop-full symmetric closure is what
      // the tree construction needs. The sandwich word (2 n_i - 1 letters)
      // rather than the shorter tree word: once earlier components are
      // frozen, a member may look constant on some leaves of this tree.
      const int size = static_cast<int>(comp.size());
      Digraph closure(size);
      for (int p = 1; p <= size; ++p) closure.add_arc(p, p);
      for (int p = 1; p <= size; ++p)
        for (int q = p + 1; q <= size; ++q) {
          const int u = comp[static_cast<std::size_t>(p - 1)];
          const int v = comp[static_cast<std::size_t>(q - 1)];
          if (rest.has_arc(u, v) || rest.has_arc(v, u)) {
            closure.add_arc(p, q);
            closure.add_arc(q, p);
          }
        }
      for (int letter : tree_sandwich_word(closure))
        w.push_back(comp[static_cast<std::size_t>(letter - 1)]);
    }
  }
  for (int k = 1; k <= tau; ++k) {
    w.push_back(alpha + k);
    const Word universal = zigzag_universal(alpha + k, 0);
    w.insert(w.end(), universal.begin(), universal.end());
  }
  for (int& letter : w) letter = to_old[static_cast<std::size_t>(letter)];
  return w;
}

Word symmetric_conjunctive_word(int n) {
  if (n < 1)
    throw std::invalid_argument("symmetric_conjunctive_word: n must be >= 1");
  Word w;
  w.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w.push_back(i);
  // k = 2 degenerates below n = 3; clamping keeps the suffix universal for
  // the lengths that actually occur.
  const Word universal = zigzag_universal(n, std::min(2, n - 1));
  w.insert(w.end(), universal.begin(), universal.end());
  return w;
}

}  // namespace bnfix
