#pragma once

#include "bnfix/state.hpp"

namespace bnfix {

constexpr int kUniversalCheckLimit = 8;   // is_k_universal enumeration
constexpr int kPathUniversalCheckLimit = 4;  // cube-path enumeration
constexpr int kGrayWordLimit = 20;
constexpr int kPathUniversalWordLimit = 12;

// A path of the n-cube: pairwise distinct states with consecutive Hamming
// distance exactly one. The induced word lists the flipped components; it
// has no consecutive repetitions and at most 2^n - 1 letters.
class CubePath {
 public:
  explicit CubePath(std::vector<State> states);  // throws invalid_argument

  int n() const { return states_.front().n(); }
  const std::vector<State>& states() const { return states_; }
  Word induced_word() const;

 private:
  std::vector<State> states_;
};

// u embeds into w as a subsequence.
bool is_subword(const Word& u, const Word& w);

// w contains every repetition-free word of length n-k over [n] as a subword
// (k = 0 is the classical "contains every permutation"). Enumerates the
// n!/k! target words with pruning; bounded at n <= 8 unless forced.
bool is_k_universal(const Word& w, int n, int k, bool force = false);

// The zigzag word: 1, then max(0, n-k) alternating runs 2,3,...,n and
// n-1,...,1. Has length (n-1)(n-k)+1 and is (n,k)-universal. k >= n is
// accepted and degenerates to the single-letter word 1.
Word zigzag_universal(int n, int k);

// w is induced by a path of the n-cube. Uses the parity criterion: every
// window of w must contain some letter an odd number of times, equivalently
// all prefix parity vectors are distinct. Letters outside [n] make the
// answer false.
bool is_path_word(const Word& w, int n);

// Word induced by the reflected Gray-code Hamiltonian path of the n-cube:
// w^1 = 1 and w^t = w^{t-1}, t, reverse(w^{t-1}). Length 2^n - 1; the most
// frequent letter occurs exactly 2^{n-1} times.
Word gray_word(int n);

// 1 followed by 2^n - 1 alternating runs, length (n-1)(2^n - 1) + 1.
// Contains every word of length <= 2^n - 1 without consecutive repetitions,
// hence every n-path-word.
Word path_universal_word(int n);

// w contains every n-path-word as a subword. Enumerates the cube paths
// starting from the all-zero state (translating a path does not change the
// induced word) with the greedy embedding pointer carried down and pruned on
// first failure. Bounded at n <= 4 unless forced.
bool is_path_universal(const Word& w, int n, bool force = false);

}  // namespace bnfix
