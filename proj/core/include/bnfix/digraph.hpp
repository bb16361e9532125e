#pragma once

#include <utility>
#include <vector>

namespace bnfix {

// Exhaustive cycle searches (circumference, feedback sets) are bounded here
// unless the caller forces them.
constexpr int kExactCycleSearchLimit = 12;

// Directed graph on vertices 1..n. Loops allowed, no parallel arcs.
class Digraph {
 public:
  explicit Digraph(int n);

  int vertex_count() const { return n_; }
  int arc_count() const { return m_; }

  // Returns false if the arc was already present.
  bool add_arc(int from, int to);
  bool has_arc(int from, int to) const;

  const std::vector<int>& out_neighbors(int v) const;
  const std::vector<int>& in_neighbors(int v) const;

  // All arcs sorted by (from, to).
  std::vector<std::pair<int, int>> arcs() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(int v) const;

  int n_;
  int m_ = 0;
  std::vector<std::vector<int>> out_;  // sorted neighbor lists, 1-based
  std::vector<std::vector<int>> in_;
};

// Strongly connected components in topological order: every arc between two
// distinct components goes from an earlier to a later one. Each component is
// sorted ascending.
std::vector<std::vector<int>> strong_components(const Digraph& g);

// Length of a longest directed cycle (a loop is a cycle of length 1);
// 0 if the graph is acyclic. Exhaustive search, bounded by
// kExactCycleSearchLimit vertices unless forced.
int circumference(const Digraph& g, bool force = false);

// True iff no directed cycle is longer than l. Stops at the first witness,
// so it is much cheaper than computing the exact circumference.
bool circumference_at_most(const Digraph& g, int l);

// A minimum-cardinality vertex set I such that removing I leaves
// circumference at most l. Ties are broken by the lexicographically smallest
// (ascending) vertex set.
std::vector<int> min_l_feedback_set(const Digraph& g, int l,
                                    bool force = false);

// Every non-loop arc has its reverse; loops are unconstrained.
bool is_symmetric(const Digraph& g);

struct TreeInfo {
  int root;
  std::vector<int> non_leaves;  // root first, then by (distance, label)
  std::vector<int> leaves;      // ascending
};

// Accepts exactly the loop-full symmetric trees: every vertex has a loop and
// the non-loop arcs are the two orientations of a spanning tree's edges.
// Throws precondition_error with the reason otherwise. For n <= 2 the root
// is vertex 1 and the root is never counted as a leaf, so a single vertex
// has no leaves and a single edge has one.
TreeInfo tree_info(const Digraph& g);

}  // namespace bnfix
