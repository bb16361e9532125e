#include "bnfix/words.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "bnfix/errors.hpp"

namespace bnfix {

CubePath::CubePath(std::vector<State> states) : states_(std::move(states)) {
  if (states_.empty())
    throw std::invalid_argument("CubePath: a path visits at least one state");
  const int n = states_.front().n();
  std::vector<std::uint32_t> seen;
  seen.reserve(states_.size());
  for (std::size_t p = 0; p < states_.size(); ++p) {
    if (states_[p].n() != n)
      throw std::invalid_argument("CubePath: mixed state lengths");
    seen.push_back(states_[p].index());
    if (p == 0) continue;
    const std::uint32_t diff = states_[p - 1].index() ^ states_[p].index();
    if (diff == 0 || (diff & (diff - 1)) != 0)
      throw std::invalid_argument("CubePath: consecutive states must differ in exactly one component");
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("CubePath: repeated state");
}

Word CubePath::induced_word() const {
  const int n = this->n();
  Word w;
  w.reserve(states_.size() - 1);
  for (std::size_t p = 1; p < states_.size(); ++p) {
    const std::uint32_t diff = states_[p - 1].index() ^ states_[p].index();
    int bit = 0;
    while (!((diff >> bit) & 1u)) ++bit;
    w.push_back(n - bit);
  }
  return w;
}

bool is_subword(const Word& u, const Word& w) {
  std::size_t i = 0;
  for (int a : w) {
    if (i == u.size()) break;
    if (u[i] == a) ++i;
  }
  return i == u.size();
}

namespace {

// next[p * n + (a-1)] = smallest position >= p where letter a occurs, or
// w.size() if none. The greedy leftmost embedding is canonical: a word is a
// subword iff the greedy match succeeds, and greedy prefixes extend
// incrementally, which is what the enumeration searches below rely on.
std::vector<std::size_t> next_occurrence_table(const Word& w, int n) {
  const std::size_t len = w.size();
  std::vector<std::size_t> next((len + 1) * static_cast<std::size_t>(n), len);
  for (std::size_t p = len; p-- > 0;) {
    for (int a = 0; a < n; ++a)
      next[p * static_cast<std::size_t>(n) + static_cast<std::size_t>(a)] =
          next[(p + 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(a)];
    if (w[p] >= 1 && w[p] <= n)
      next[p * static_cast<std::size_t>(n) + static_cast<std::size_t>(w[p] - 1)] = p;
  }
  return next;
}

}  // namespace

bool is_k_universal(const Word& w, int n, int k, bool force) {
  if (n < 1) throw std::invalid_argument("is_k_universal: n must be >= 1");
  if (k < 0) throw std::invalid_argument("is_k_universal: k must be >= 0");
  if (k >= n) return true;  // only the empty word needs to embed
  if (n > kUniversalCheckLimit && !force)
    throw infeasible_error("is_k_universal: enumeration of n!/k! words is bounded at n <= 8");
  const int target_len = n - k;
  const std::size_t len = w.size();
  const auto next = next_occurrence_table(w, n);

  // Depth-first enumeration of the repetition-free target words, carrying
  // the greedy embedding position; a missing occurrence anywhere proves that
  // some target word does not embed.
  std::uint32_t used = 0;
  auto rec = [&](auto&& self, std::size_t pos, int depth) -> bool {
    if (depth == target_len) return true;
    for (int a = 1; a <= n; ++a) {
      if (used & (1u << (a - 1))) continue;
      const std::size_t q =
          next[pos * static_cast<std::size_t>(n) + static_cast<std::size_t>(a - 1)];
      if (q == len) return false;
      used |= 1u << (a - 1);
      const bool ok = self(self, q + 1, depth + 1);
      used &= ~(1u << (a - 1));
      if (!ok) return false;
    }
    return true;
  };
  return rec(rec, 0, 0);
}

Word zigzag_universal(int n, int k) {
  if (n < 1) throw std::invalid_argument("zigzag_universal: n must be >= 1");
  if (k < 0) throw std::invalid_argument("zigzag_universal: k must be >= 0");
  Word w{1};
  const int runs = std::max(0, n - k);
  for (int r = 1; r <= runs; ++r) {
    if (r % 2 == 1)
      for (int a = 2; a <= n; ++a) w.push_back(a);
    else
      for (int a = n - 1; a >= 1; --a) w.push_back(a);
  }
  return w;
}

bool is_path_word(const Word& w, int n) {
  if (n < 1 || n > 64)
    throw std::invalid_argument("is_path_word: n out of range");
  // A window contains every letter an even number of times iff the parity
  // vectors at its two ends coincide, so the criterion reduces to all
  // prefix parities being distinct.
  std::vector<std::uint64_t> prefix;
  prefix.reserve(w.size() + 1);
  std::uint64_t parity = 0;
  prefix.push_back(parity);
  for (int a : w) {
    if (a < 1 || a > n) return false;
    parity ^= std::uint64_t{1} << (a - 1);
    prefix.push_back(parity);
  }
  std::sort(prefix.begin(), prefix.end());
  return std::adjacent_find(prefix.begin(), prefix.end()) == prefix.end();
}

Word gray_word(int n) {
  if (n < 1 || n > kGrayWordLimit)
    throw infeasible_error("gray_word: n out of range [1,20]");
  Word w{1};
  for (int t = 2; t <= n; ++t) {
    const std::size_t half = w.size();
    w.push_back(t);
    for (std::size_t i = half; i-- > 0;) w.push_back(w[i]);
  }
  return w;
}

Word path_universal_word(int n) {
  if (n < 1 || n > kPathUniversalWordLimit)
    throw infeasible_error("path_universal_word: n out of range [1,12]");
  Word w{1};
  const std::uint32_t runs = (1u << n) - 1;
  for (std::uint32_t r = 1; r <= runs; ++r) {
    if (r % 2 == 1)
      for (int a = 2; a <= n; ++a) w.push_back(a);
    else
      for (int a = n - 1; a >= 1; --a) w.push_back(a);
  }
  return w;
}

bool is_path_universal(const Word& w, int n, bool force) {
  if (n < 1) throw std::invalid_argument("is_path_universal: n must be >= 1");
  if (n > kPathUniversalCheckLimit && !force)
    throw infeasible_error("is_path_universal: cube-path enumeration is bounded at n <= 4");
  const std::size_t len = w.size();
  const auto next = next_occurrence_table(w, n);
  // Translating a path by xor maps paths to paths with the same induced
  // word, so paths starting at the all-zero state induce every n-path-word.
  auto rec = [&](auto&& self, std::uint32_t state, std::uint64_t visited,
                 std::size_t pos) -> bool {
    for (int i = 1; i <= n; ++i) {
      const std::uint32_t to = state ^ (1u << (n - i));
      if (visited & (std::uint64_t{1} << to)) continue;
      const std::size_t q =
          next[pos * static_cast<std::size_t>(n) + static_cast<std::size_t>(i - 1)];
      if (q == len) return false;
      if (!self(self, to, visited | (std::uint64_t{1} << to), q + 1))
        return false;
    }
    return true;
  };
  if (n > 6) throw infeasible_error("is_path_universal: state sets above n=6 are not supported");
  return rec(rec, 0, 1, 0);
}

}  // namespace bnfix
