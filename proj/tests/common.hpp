#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "bnfix/digraph.hpp"
#include "bnfix/network.hpp"
#include "bnfix/state.hpp"

namespace bnfix::testing {

// The worked 3-component example: one fixed point 000, fixing length 4,
// fixed by 1231. Kept as a raw table so tests never depend on the parser
// or the network construction helpers they are checking.
inline constexpr std::array<std::pair<const char*, const char*>, 8> kFig1Rows = {{
    {"000", "000"},
    {"001", "000"},
    {"010", "001"},
    {"011", "001"},
    {"100", "010"},
    {"101", "000"},
    {"110", "010"},
    {"111", "100"},
}};

inline const char* kFig1Formulas =
    "f1 = x1 & x2 & x3\n"
    "f2 = x1 & !x3\n"
    "f3 = x2 & !x1\n";

inline BooleanNetwork fig1_network() {
  std::vector<std::vector<std::uint8_t>> tables(3, std::vector<std::uint8_t>(8));
  for (std::size_t r = 0; r < kFig1Rows.size(); ++r)
    for (int i = 0; i < 3; ++i)
      tables[static_cast<std::size_t>(i)][r] =
          static_cast<std::uint8_t>(kFig1Rows[r].second[i] - '0');
  return BooleanNetwork(3, tables);
}

// Independent single-letter action straight off the frozen table rows.
inline std::string fig1_step(const std::string& state, int letter) {
  if (letter < 1 || letter > 3) return state;
  for (const auto& [x, fx] : kFig1Rows)
    if (state == x) {
      std::string next = state;
      next[static_cast<std::size_t>(letter - 1)] = fx[letter - 1];
      return next;
    }
  return state;
}

inline Digraph loopfull_path(int n) {
  Digraph g(n);
  for (int v = 1; v <= n; ++v) g.add_arc(v, v);
  for (int v = 1; v < n; ++v) {
    g.add_arc(v, v + 1);
    g.add_arc(v + 1, v);
  }
  return g;
}

inline Digraph loopfull_star(int n) {  // center 1
  Digraph g(n);
  for (int v = 1; v <= n; ++v) g.add_arc(v, v);
  for (int v = 2; v <= n; ++v) {
    g.add_arc(1, v);
    g.add_arc(v, 1);
  }
  return g;
}

inline Digraph directed_cycle(int n, bool loops) {
  Digraph g(n);
  if (loops)
    for (int v = 1; v <= n; ++v) g.add_arc(v, v);
  for (int v = 1; v <= n; ++v) g.add_arc(v, v % n + 1);
  return g;
}

inline Digraph symmetric_complete(int n, bool loops) {
  Digraph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j || loops) g.add_arc(i, j);
  return g;
}

// All labeled trees on n vertices as loop-full symmetric digraphs, via
// Pruefer sequences (n^(n-2) of them for n >= 2 by Cayley's formula).
inline std::vector<Digraph> loopfull_trees(int n) {
  std::vector<Digraph> out;
  auto loopfull = [&](int size) {
    Digraph g(size);
    for (int v = 1; v <= size; ++v) g.add_arc(v, v);
    return g;
  };
  if (n == 1) {
    out.push_back(loopfull(1));
    return out;
  }
  if (n == 2) {
    Digraph g = loopfull(2);
    g.add_arc(1, 2);
    g.add_arc(2, 1);
    out.push_back(g);
    return out;
  }
  std::vector<int> code(static_cast<std::size_t>(n - 2), 1);
  while (true) {
    Digraph g = loopfull(n);
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (int v : code) ++degree[static_cast<std::size_t>(v)];
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    for (int v : code) {
      int leaf = 0;
      for (int u = 1; u <= n; ++u)
        if (degree[static_cast<std::size_t>(u)] == 1 && !used[static_cast<std::size_t>(u)]) {
          leaf = u;
          break;
        }
      g.add_arc(leaf, v);
      g.add_arc(v, leaf);
      used[static_cast<std::size_t>(leaf)] = 1;
      --degree[static_cast<std::size_t>(v)];
    }
    int a = 0, b = 0;
    for (int u = 1; u <= n; ++u)
      if (!used[static_cast<std::size_t>(u)]) {
        if (!a)
          a = u;
        else
          b = u;
      }
    g.add_arc(a, b);
    g.add_arc(b, a);
    out.push_back(g);
    int i = n - 3;
    while (i >= 0 && code[static_cast<std::size_t>(i)] == n) {
      code[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++code[static_cast<std::size_t>(i)];
  }
  return out;
}

inline std::string data_path(const std::string& name) {
  return std::string(BNFIX_TEST_DATA_DIR) + "/" + name;
}

}  // namespace bnfix::testing
