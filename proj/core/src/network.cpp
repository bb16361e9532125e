#include "bnfix/network.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "bnfix/errors.hpp"

namespace bnfix {

BooleanNetwork::BooleanNetwork(
    int n, const std::vector<std::vector<std::uint8_t>>& tables)
    : n_(n) {
  if (n < 1 || n > kMaxComponents)
    throw std::invalid_argument("BooleanNetwork: component count out of range");
  if (tables.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("BooleanNetwork: expected one table per component");
  const std::size_t rows = std::size_t{1} << n;
  tables_.resize(static_cast<std::size_t>(n) * rows);
  for (int i = 0; i < n; ++i) {
    if (tables[static_cast<std::size_t>(i)].size() != rows)
      throw std::invalid_argument("BooleanNetwork: table has wrong row count");
    for (std::size_t x = 0; x < rows; ++x)
      tables_[(static_cast<std::size_t>(i) << n) | x] =
          tables[static_cast<std::size_t>(i)][x] ? 1 : 0;
  }
}

BooleanNetwork BooleanNetwork::from_components(
    int n, const std::function<bool(int, std::uint32_t)>& fi) {
  BooleanNetwork f = identity(n);
  const std::uint32_t rows = 1u << n;
  for (int i = 1; i <= n; ++i)
    for (std::uint32_t x = 0; x < rows; ++x)
      f.table_entry(i, x) = fi(i, x) ? 1 : 0;
  return f;
}

BooleanNetwork BooleanNetwork::identity(int n) {
  if (n < 1 || n > kMaxComponents)
    throw std::invalid_argument("BooleanNetwork: component count out of range");
  BooleanNetwork f;
  f.n_ = n;
  const std::uint32_t rows = 1u << n;
  f.tables_.resize(static_cast<std::size_t>(n) << n);
  for (int i = 1; i <= n; ++i)
    for (std::uint32_t x = 0; x < rows; ++x)
      f.table_entry(i, x) = static_cast<std::uint8_t>((x >> (n - i)) & 1u);
  return f;
}

std::uint32_t BooleanNetwork::image(std::uint32_t x) const {
  std::uint32_t y = 0;
  for (int i = 1; i <= n_; ++i)
    y = y << 1 | static_cast<std::uint32_t>(component(i, x));
  return y;
}

bool BooleanNetwork::is_fixed_point(std::uint32_t x) const {
  for (int i = 1; i <= n_; ++i)
    if (component(i, x) != (((x >> (n_ - i)) & 1u) != 0)) return false;
  return true;
}

std::uint32_t apply_word(const BooleanNetwork& f, const Word& w,
                         std::uint32_t x) {
  for (int a : w) x = f.apply_letter(a, x);
  return x;
}

State apply_word(const BooleanNetwork& f, const Word& w, const State& x) {
  if (x.n() != f.n())
    throw std::invalid_argument("apply_word: state length does not match network");
  return State(f.n(), apply_word(f, w, x.index()));
}

std::vector<State> fixed_points(const BooleanNetwork& f) {
  std::vector<State> out;
  const std::uint32_t rows = f.state_count();
  for (std::uint32_t x = 0; x < rows; ++x)
    if (f.is_fixed_point(x)) out.emplace_back(f.n(), x);
  return out;
}

Digraph interaction_graph(const BooleanNetwork& f) {
  const int n = f.n();
  Digraph g(n);
  const std::uint32_t rows = f.state_count();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const std::uint32_t bit = 1u << (n - j);
      for (std::uint32_t x = 0; x < rows; ++x) {
        if (x & bit) continue;
        if (f.component(i, x) != f.component(i, x | bit)) {
          g.add_arc(j, i);
          break;
        }
      }
    }
  }
  return g;
}

Digraph async_graph(const BooleanNetwork& f, bool force) {
  const int n = f.n();
  if (n > kAsyncGraphLimit && !force)
    throw infeasible_error("async_graph: 2^n vertices exceed the materialization bound (n <= 20)");
  const std::uint32_t rows = f.state_count();
  Digraph g(static_cast<int>(rows));
  for (std::uint32_t x = 0; x < rows; ++x)
    for (int i = 1; i <= n; ++i) {
      const std::uint32_t y = f.apply_letter(i, x);
      if (y != x) g.add_arc(static_cast<int>(x) + 1, static_cast<int>(y) + 1);
    }
  return g;
}

std::uint64_t async_arc_count(const BooleanNetwork& f) {
  const int n = f.n();
  const std::uint32_t rows = f.state_count();
  std::uint64_t m = 0;
  for (std::uint32_t x = 0; x < rows; ++x)
    for (int i = 1; i <= n; ++i)
      if (f.apply_letter(i, x) != x) ++m;
  return m;
}

bool fixes(const BooleanNetwork& f, const Word& w) {
  const std::uint32_t rows = f.state_count();
  for (std::uint32_t x = 0; x < rows; ++x)
    if (!f.is_fixed_point(apply_word(f, w, x))) return false;
  return true;
}

bool is_fixable(const BooleanNetwork& f) {
  const int n = f.n();
  const std::uint32_t rows = f.state_count();
  std::vector<char> reaches(rows, 0);
  std::queue<std::uint32_t> queue;
  for (std::uint32_t x = 0; x < rows; ++x)
    if (f.is_fixed_point(x)) {
      reaches[x] = 1;
      queue.push(x);
    }
  std::uint32_t marked = static_cast<std::uint32_t>(queue.size());
  while (!queue.empty()) {
    const std::uint32_t y = queue.front();
    queue.pop();
    for (int i = 1; i <= n; ++i) {
      const std::uint32_t x = y ^ (1u << (n - i));
      if (!reaches[x] && f.apply_letter(i, x) == y) {
        reaches[x] = 1;
        ++marked;
        queue.push(x);
      }
    }
  }
  return marked == rows;
}

bool is_monotone(const BooleanNetwork& f) {
  const int n = f.n();
  const std::uint32_t rows = f.state_count();
  for (std::uint32_t x = 0; x < rows; ++x)
    for (int j = 1; j <= n; ++j) {
      const std::uint32_t bit = 1u << (n - j);
      if (x & bit) continue;
      for (int i = 1; i <= n; ++i)
        if (f.component(i, x) && !f.component(i, x | bit)) return false;
    }
  return true;
}

bool is_async_acyclic(const BooleanNetwork& f, bool force) {
  const int n = f.n();
  if (n > kAsyncGraphLimit && !force)
    throw infeasible_error("is_async_acyclic: 2^n states exceed the bound (n <= 20)");
  const std::uint32_t rows = f.state_count();
  // iterative three-color DFS
  std::vector<std::uint8_t> color(rows, 0);  // 0 new, 1 open, 2 done
  std::vector<std::pair<std::uint32_t, int>> stack;
  for (std::uint32_t s = 0; s < rows; ++s) {
    if (color[s]) continue;
    color[s] = 1;
    stack.emplace_back(s, 1);
    while (!stack.empty()) {
      auto& [x, next_letter] = stack.back();
      if (next_letter > n) {
        color[x] = 2;
        stack.pop_back();
        continue;
      }
      const int i = next_letter++;
      const std::uint32_t y = f.apply_letter(i, x);
      if (y == x) continue;
      if (color[y] == 1) return false;
      if (color[y] == 0) {
        color[y] = 1;
        stack.emplace_back(y, 1);
      }
    }
  }
  return true;
}

}  // namespace bnfix
