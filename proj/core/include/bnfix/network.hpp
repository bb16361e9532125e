#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bnfix/digraph.hpp"
#include "bnfix/state.hpp"

namespace bnfix {

class NetworkFamily;

// Materializing the asynchronous state graph (or walking all of it) is
// bounded at this many components unless forced.
constexpr int kAsyncGraphLimit = 20;

// An n-component Boolean network f: {0,1}^n -> {0,1}^n stored as one truth
// table per component. Tables are indexed by State::index() (component 1 is
// the most significant bit).
class BooleanNetwork {
 public:
  // tables[i-1] lists f_i over all 2^n states in index order, entries 0/1.
  BooleanNetwork(int n, const std::vector<std::vector<std::uint8_t>>& tables);

  // Builds the table of each component by evaluating fi(i, x) on all states.
  static BooleanNetwork from_components(
      int n, const std::function<bool(int, std::uint32_t)>& fi);

  static BooleanNetwork identity(int n);

  int n() const { return n_; }
  std::uint32_t state_count() const { return 1u << n_; }

  // f_i evaluated at state index x.
  bool component(int i, std::uint32_t x) const {
    return tables_[(static_cast<std::size_t>(i - 1) << n_) | x] != 0;
  }

  // f(x) as a state index.
  std::uint32_t image(std::uint32_t x) const;

  // Action of a single letter: updates component i if i is in [n], otherwise
  // returns x unchanged.
  std::uint32_t apply_letter(int i, std::uint32_t x) const {
    if (i < 1 || i > n_) return x;
    const std::uint32_t m = 1u << (n_ - i);
    return component(i, x) ? (x | m) : (x & ~m);
  }

  bool is_fixed_point(std::uint32_t x) const;

  friend bool operator==(const BooleanNetwork&, const BooleanNetwork&) =
      default;

 private:
  friend class NetworkFamily;  // in-place table rewrites while enumerating

  BooleanNetwork() = default;

  std::uint8_t& table_entry(int i, std::uint32_t x) {
    return tables_[(static_cast<std::size_t>(i - 1) << n_) | x];
  }

  int n_;
  std::vector<std::uint8_t> tables_;  // flat, component-major
};

// f^w(x): letters of w act left to right.
std::uint32_t apply_word(const BooleanNetwork& f, const Word& w,
                         std::uint32_t x);
State apply_word(const BooleanNetwork& f, const Word& w, const State& x);

// All fixed points of f, ascending by state index.
std::vector<State> fixed_points(const BooleanNetwork& f);

// Interaction graph G(f) on [n]: arc j -> i iff f_i depends on component j.
Digraph interaction_graph(const BooleanNetwork& f);

// Asynchronous graph of f, materialized on 2^n vertices; vertex x+1
// corresponds to state index x. Arc x -> y iff y = f^i(x) != x for some i.
Digraph async_graph(const BooleanNetwork& f, bool force = false);

// Number of arcs of the asynchronous graph without materializing it.
std::uint64_t async_arc_count(const BooleanNetwork& f);

// w fixes f: f^w(x) is a fixed point for every state x.
bool fixes(const BooleanNetwork& f, const Word& w);

// Every state reaches a fixed point in the asynchronous graph (backward
// reachability from the fixed points).
bool is_fixable(const BooleanNetwork& f);

// f preserves the componentwise order. Checked on covering pairs only,
// which is equivalent to checking all comparable pairs.
bool is_monotone(const BooleanNetwork& f);

// The asynchronous graph has no directed cycle.
bool is_async_acyclic(const BooleanNetwork& f, bool force = false);

}  // namespace bnfix
