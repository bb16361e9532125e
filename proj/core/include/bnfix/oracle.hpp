#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "bnfix/digraph.hpp"
#include "bnfix/network.hpp"

namespace bnfix {

constexpr int kConfigurationSearchLimit = 4;  // min_fixing_length
constexpr int kEnumerationLimit = 3;          // all / monotone / async-acyclic
constexpr int kConjunctiveEnumerationLimit = 4;

// The map x -> f^w(x) over all states, the canonical search node for exact
// fixing-length computation. Entry k is the image of state index k; the
// identity configuration represents the empty word.
using Configuration = std::vector<std::uint32_t>;

Configuration identity_configuration(int n);
Configuration apply_letter_to_configuration(const BooleanNetwork& f, int i,
                                            const Configuration& c);

// Exact fixing length of f, or nullopt when f is not fixable. Breadth-first
// search over configurations reachable from the identity, deduplicated by a
// canonical packed encoding; fixability is decided up front by reachability
// so the search only runs on fixable inputs.
std::optional<int> min_fixing_length(const BooleanNetwork& f,
                                     bool force = false);

// An exhaustive, duplicate-free family of n-component networks. Enumeration
// streams through a reused buffer: the reference passed to the callback is
// only valid during the call.
class NetworkFamily {
 public:
  enum class Kind { all, monotone, async_acyclic, monotone_on, conjunctive_symmetric };

  static NetworkFamily all(int n, bool force = false);
  static NetworkFamily monotone(int n, bool force = false);
  static NetworkFamily async_acyclic(int n, bool force = false);
  // Monotone networks whose interaction graph is a labeled subgraph of g.
  // Every in-degree of g must be at most 4 (Dedekind growth). Components
  // listed in nonconstant additionally exclude the two constant functions;
  // the tree-length bound holds exactly for the family whose leaf components
  // are non-constant, so that is the variant its exact tests quantify over.
  static NetworkFamily monotone_on(const Digraph& g,
                                   const std::vector<int>& nonconstant = {});
  // Conjunctive networks on all 2^(n + C(n,2)) symmetric digraphs over [n].
  static NetworkFamily conjunctive_symmetric(int n, bool force = false);

  Kind kind() const { return kind_; }
  int n() const { return n_; }

  void for_each(const std::function<void(const BooleanNetwork&)>& fn) const;
  std::uint64_t count() const;  // enumerates for async_acyclic
  std::vector<BooleanNetwork> materialize(std::size_t limit = 2000000) const;

 private:
  NetworkFamily(Kind kind, int n) : kind_(kind), n_(n) {}

  Kind kind_;
  int n_;
  std::vector<Digraph> graph_;    // at most one; avoids optional<Digraph>
  std::vector<int> nonconstant_;  // monotone_on components barred from constants
};

// Least L such that some word of length L over [n] fixes every member;
// nullopt when no word within the budget does. Iterative deepening over
// words; when prune_repeats is set, words with equal consecutive letters are
// skipped (sound for asynchronous-acyclic families, where f^ii = f^i).
std::optional<int> family_min_fixing_length(
    const std::vector<BooleanNetwork>& family, int n, int budget,
    bool prune_repeats = false);
std::optional<int> family_min_fixing_length(const NetworkFamily& family,
                                            int budget);

// Exact lambda_k(n): minimum length of an (n,k)-universal word, 0 for
// k >= n. Iterative deepening over canonical repeat-free words.
int min_universal_length(int n, int k, bool force = false);

// Exact Lambda(n): minimum length of an n-path-universal word.
int min_path_universal_length(int n, bool force = false);

// Fraction of fixable n-component networks, as an exact reduced rational.
struct Rational {
  std::uint64_t num;
  std::uint64_t den;
  friend bool operator==(const Rational&, const Rational&) = default;
};
Rational fixable_fraction(int n, bool force = false);

// Seeded sampler over the monotone networks whose interaction graph is a
// labeled subgraph of g (random tables closed under the order, not uniform).
BooleanNetwork sample_monotone_on(const Digraph& g, std::mt19937& rng);

}  // namespace bnfix
