#pragma once

#include <vector>

#include "bnfix/digraph.hpp"
#include "bnfix/network.hpp"

namespace bnfix {

// The conjunctive network on G: f_i is the AND of the in-neighbors of i,
// constant 1 when i has none.
BooleanNetwork conjunctive_network(const Digraph& g);

// Generic fixer: for each member, walks the states in index order and
// appends the letters of a shortest asynchronous path from the current image
// of the state to a fixed point. The concatenation fixes every member and
// has length at most 4^n per member. Throws not_fixable_error naming the
// first unfixable member.
Word greedy_fix_word(const std::vector<BooleanNetwork>& family);

// Fixing word of length 2^n - r (r = number of fixed points) for a single
// asynchronous-acyclic network, built along a topological sort of the
// asynchronous graph that places the fixed points last. Position p
// contributes the smallest letter moving the p-th state strictly forward.
Word acyclic_instance_word(const BooleanNetwork& f);

// The non-leaves v_1..v_N in tree_info order played as v_N..v_2,v_1,v_2..v_N,
// then the leaves ascending; length 2n - L - 1 for the loop-full tree G.
// Fixes every monotone network whose interaction graph is a labeled subgraph
// of G and whose leaf components are non-constant. A constant leaf can undo
// its neighbor after the single update this word grants the leaf, and then
// no word of this length fixes the family; that boundary is pinned by tests.
Word tree_word(const Digraph& g);

// Fixing word for every monotone network on G of length at most
// tau_2(G) n^2 + 3n. Removes a minimum 2-feedback set I, fixes the strong
// components of G - I in topological order via tree words on their loop-full
// symmetric closures, then appends each feedback vertex followed by a
// universal word over the components handled so far. The result is reported
// in the original vertex labels.
Word feedback_word(const Digraph& g, bool force = false);

// Fixing word for every conjunctive network on a symmetric digraph over [n]:
// 1,2,...,n followed by an (n,k)-universal zigzag with k = min(2, n-1).
// Length n + (n-1)(n-2) + 1 for n >= 3.
Word symmetric_conjunctive_word(int n);

}  // namespace bnfix
