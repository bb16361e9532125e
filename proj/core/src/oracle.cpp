#include "bnfix/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <unordered_set>

#include "bnfix/errors.hpp"
#include "bnfix/words.hpp"

namespace bnfix {

Configuration identity_configuration(int n) {
  Configuration c(std::size_t{1} << n);
  std::iota(c.begin(), c.end(), 0u);
  return c;
}

Configuration apply_letter_to_configuration(const BooleanNetwork& f, int i,
                                            const Configuration& c) {
  Configuration out(c.size());
  for (std::size_t x = 0; x < c.size(); ++x)
    out[x] = f.apply_letter(i, c[x]);
  return out;
}

namespace {

// For n <= 4 a configuration packs into one 64-bit word: 2^n entries of 4
// bits each. The packed value is the canonical encoding used to deduplicate
// the breadth-first search.
std::optional<int> min_fixing_length_packed(const BooleanNetwork& f) {
  const int n = f.n();
  const std::uint32_t rows = f.state_count();
  std::array<std::array<std::uint8_t, 16>, 4> step{};
  for (int i = 1; i <= n; ++i)
    for (std::uint32_t x = 0; x < rows; ++x)
      step[static_cast<std::size_t>(i - 1)][x] =
          static_cast<std::uint8_t>(f.apply_letter(i, x));
  std::uint32_t fixed_mask = 0;
  for (std::uint32_t x = 0; x < rows; ++x)
    if (f.is_fixed_point(x)) fixed_mask |= 1u << x;

  auto advance = [&](std::uint64_t c, int i) {
    std::uint64_t r = 0;
    for (std::uint32_t x = 0; x < rows; ++x)
      r |= std::uint64_t{step[static_cast<std::size_t>(i)][(c >> (4 * x)) & 15u]}
           << (4 * x);
    return r;
  };
  auto all_fixed = [&](std::uint64_t c) {
    for (std::uint32_t x = 0; x < rows; ++x)
      if (!((fixed_mask >> ((c >> (4 * x)) & 15u)) & 1u)) return false;
    return true;
  };

  std::uint64_t id = 0;
  for (std::uint32_t x = 0; x < rows; ++x) id |= std::uint64_t{x} << (4 * x);
  if (all_fixed(id)) return 0;

  std::unordered_set<std::uint64_t> seen{id};
  std::vector<std::uint64_t> frontier{id};
  std::vector<std::uint64_t> next;
  for (int depth = 1; !frontier.empty(); ++depth) {
    next.clear();
    for (const std::uint64_t c : frontier)
      for (int i = 0; i < n; ++i) {
        const std::uint64_t d = advance(c, i);
        if (!seen.insert(d).second) continue;
        if (all_fixed(d)) return depth;
        next.push_back(d);
      }
    frontier.swap(next);
  }
  return std::nullopt;
}

std::optional<int> min_fixing_length_generic(const BooleanNetwork& f) {
  const int n = f.n();
  const std::uint32_t rows = f.state_count();
  std::vector<char> fixed(rows);
  for (std::uint32_t x = 0; x < rows; ++x) fixed[x] = f.is_fixed_point(x) ? 1 : 0;

  auto all_fixed = [&](const Configuration& c) {
    for (const std::uint32_t y : c)
      if (!fixed[y]) return false;
    return true;
  };
  auto key_of = [&](const Configuration& c) {
    return std::string(reinterpret_cast<const char*>(c.data()),
                       c.size() * sizeof(std::uint32_t));
  };

  Configuration id = identity_configuration(n);
  if (all_fixed(id)) return 0;
  std::unordered_set<std::string> seen{key_of(id)};
  std::vector<Configuration> frontier{std::move(id)};
  std::vector<Configuration> next;
  for (int depth = 1; !frontier.empty(); ++depth) {
    next.clear();
    for (const Configuration& c : frontier)
      for (int i = 1; i <= n; ++i) {
        Configuration d = apply_letter_to_configuration(f, i, c);
        if (!seen.insert(key_of(d)).second) continue;
        if (all_fixed(d)) return depth;
        next.push_back(std::move(d));
      }
    frontier.swap(next);
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> min_fixing_length(const BooleanNetwork& f, bool force) {
  if (f.n() > kConfigurationSearchLimit && !force)
    throw infeasible_error("min_fixing_length: configuration search is bounded at n <= 4");
  // Reachability settles fixability cheaply; the configuration search would
  // otherwise have to exhaust its whole reachable set to say "not fixable".
  if (!is_fixable(f)) return std::nullopt;
  if (f.n() <= 4) return min_fixing_length_packed(f);
  return min_fixing_length_generic(f);
}

// ---------------------------------------------------------------------------
// family enumeration

namespace {

// All monotone functions of d inputs, as 2^d-bit masks. Sizes 2, 3, 6, 20,
// 168 for d = 0..4; beyond that the Dedekind numbers outgrow a table scan.
std::vector<std::uint32_t> compute_monotone_functions(int d) {
  const std::uint32_t entries = 1u << d;
  std::vector<std::uint32_t> out;
  const std::uint64_t total = std::uint64_t{1} << entries;
  for (std::uint64_t m = 0; m < total; ++m) {
    bool monotone = true;
    for (std::uint32_t x = 0; x < entries && monotone; ++x)
      for (int b = 0; b < d; ++b) {
        if ((x >> b) & 1u) continue;
        if (((m >> x) & 1u) > ((m >> (x | (1u << b))) & 1u)) {
          monotone = false;
          break;
        }
      }
    if (monotone) out.push_back(static_cast<std::uint32_t>(m));
  }
  return out;
}

const std::vector<std::uint32_t>& monotone_functions(int d) {
  static const std::array<std::vector<std::uint32_t>, 5> cache = {
      compute_monotone_functions(0), compute_monotone_functions(1),
      compute_monotone_functions(2), compute_monotone_functions(3),
      compute_monotone_functions(4)};
  if (d < 0 || d > 4)
    throw infeasible_error("monotone function tables are available for arity <= 4");
  return cache[static_cast<std::size_t>(d)];
}

// Index of state x within the subcube spanned by deps (ascending component
// labels); bit b of the result is the value of component deps[b].
std::uint32_t project(std::uint32_t x, const std::vector<int>& deps, int n) {
  std::uint32_t g = 0;
  for (std::size_t b = 0; b < deps.size(); ++b)
    g |= ((x >> (n - deps[b])) & 1u) << b;
  return g;
}

Digraph complete_loopfull(int n) {
  Digraph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) g.add_arc(i, j);
  return g;
}

// Per-component candidate function tables for a monotone-on family: all
// monotone functions over the in-neighborhood, minus the two constants for
// components required to be non-constant.
std::vector<std::vector<std::uint32_t>> monotone_choices(
    const Digraph& g, const std::vector<int>& nonconstant) {
  const int n = g.vertex_count();
  std::vector<char> barred(static_cast<std::size_t>(n) + 1, 0);
  for (int v : nonconstant) barred[static_cast<std::size_t>(v)] = 1;
  std::vector<std::vector<std::uint32_t>> out;
  for (int i = 1; i <= n; ++i) {
    const int d = static_cast<int>(g.in_neighbors(i).size());
    std::vector<std::uint32_t> masks = monotone_functions(d);
    if (barred[static_cast<std::size_t>(i)]) {
      const std::uint32_t full =
          static_cast<std::uint32_t>((std::uint64_t{1} << (1u << d)) - 1);
      std::erase_if(masks, [&](std::uint32_t m) { return m == 0 || m == full; });
    }
    out.push_back(std::move(masks));
  }
  return out;
}

}  // namespace

NetworkFamily NetworkFamily::all(int n, bool force) {
  if (n < 1) throw std::invalid_argument("NetworkFamily: n must be >= 1");
  if (n > kEnumerationLimit && !force)
    throw infeasible_error("NetworkFamily::all: 2^(n 2^n) networks is bounded at n <= 3");
  return NetworkFamily(Kind::all, n);
}

NetworkFamily NetworkFamily::monotone(int n, bool force) {
  if (n < 1) throw std::invalid_argument("NetworkFamily: n must be >= 1");
  if (n > kEnumerationLimit && !force)
    throw infeasible_error("NetworkFamily::monotone: enumeration is bounded at n <= 3");
  if (n > 4)
    throw infeasible_error("NetworkFamily::monotone: needs monotone tables of arity <= 4");
  return NetworkFamily(Kind::monotone, n);
}

NetworkFamily NetworkFamily::async_acyclic(int n, bool force) {
  if (n < 1) throw std::invalid_argument("NetworkFamily: n must be >= 1");
  if (n > kEnumerationLimit && !force)
    throw infeasible_error("NetworkFamily::async_acyclic: enumeration is bounded at n <= 3");
  return NetworkFamily(Kind::async_acyclic, n);
}

NetworkFamily NetworkFamily::monotone_on(const Digraph& g,
                                         const std::vector<int>& nonconstant) {
  const int n = g.vertex_count();
  if (n < 1 || n > kMaxComponents)
    throw std::invalid_argument("NetworkFamily: vertex count out of range");
  for (int v = 1; v <= n; ++v)
    if (g.in_neighbors(v).size() > 4)
      throw infeasible_error("NetworkFamily::monotone_on: in-degree above 4 at vertex " +
                             std::to_string(v));
  for (int v : nonconstant)
    if (v < 1 || v > n)
      throw std::invalid_argument("NetworkFamily::monotone_on: vertex out of range");
  NetworkFamily fam(Kind::monotone_on, n);
  fam.graph_.push_back(g);
  fam.nonconstant_ = nonconstant;
  return fam;
}

NetworkFamily NetworkFamily::conjunctive_symmetric(int n, bool force) {
  if (n < 1) throw std::invalid_argument("NetworkFamily: n must be >= 1");
  if (n > kConjunctiveEnumerationLimit && !force)
    throw infeasible_error("NetworkFamily::conjunctive_symmetric: bounded at n <= 4");
  if (n > 10)
    throw infeasible_error("NetworkFamily::conjunctive_symmetric: 2^(n+C(n,2)) is too large");
  return NetworkFamily(Kind::conjunctive_symmetric, n);
}

void NetworkFamily::for_each(
    const std::function<void(const BooleanNetwork&)>& fn) const {
  const int n = n_;
  const std::uint32_t rows = 1u << n;
  switch (kind_) {
    case Kind::all:
    case Kind::async_acyclic: {
      BooleanNetwork scratch = BooleanNetwork::identity(n);
      std::vector<std::uint64_t> mask(static_cast<std::size_t>(n), 0);
      auto refresh = [&](int i) {
        for (std::uint32_t x = 0; x < rows; ++x)
          scratch.table_entry(i + 1, x) =
              static_cast<std::uint8_t>((mask[static_cast<std::size_t>(i)] >> x) & 1u);
      };
      for (int i = 0; i < n; ++i) refresh(i);
      const std::uint64_t per = std::uint64_t{1} << rows;
      const bool filter = kind_ == Kind::async_acyclic;
      while (true) {
        if (!filter || is_async_acyclic(scratch)) fn(scratch);
        int i = n - 1;
        while (i >= 0 && mask[static_cast<std::size_t>(i)] + 1 == per) {
          mask[static_cast<std::size_t>(i)] = 0;
          refresh(i);
          --i;
        }
        if (i < 0) break;
        ++mask[static_cast<std::size_t>(i)];
        refresh(i);
      }
      return;
    }
    case Kind::monotone:
    case Kind::monotone_on: {
      const Digraph g =
          kind_ == Kind::monotone ? complete_loopfull(n) : graph_.front();
      const auto lists = monotone_choices(g, nonconstant_);
      for (const auto& list : lists)
        if (list.empty()) return;  // a component with no admissible function
      std::vector<std::vector<std::uint32_t>> proj;  // per component, per state
      for (int i = 1; i <= n; ++i) {
        auto& p = proj.emplace_back(rows);
        for (std::uint32_t x = 0; x < rows; ++x)
          p[x] = project(x, g.in_neighbors(i), n);
      }
      BooleanNetwork scratch = BooleanNetwork::identity(n);
      std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
      auto refresh = [&](int i) {
        const std::uint32_t m =
            lists[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
        for (std::uint32_t x = 0; x < rows; ++x)
          scratch.table_entry(i + 1, x) = static_cast<std::uint8_t>(
              (m >> proj[static_cast<std::size_t>(i)][x]) & 1u);
      };
      for (int i = 0; i < n; ++i) refresh(i);
      while (true) {
        fn(scratch);
        int i = n - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] + 1 ==
                             lists[static_cast<std::size_t>(i)].size()) {
          idx[static_cast<std::size_t>(i)] = 0;
          refresh(i);
          --i;
        }
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        refresh(i);
      }
      return;
    }
    case Kind::conjunctive_symmetric: {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
      // component mask of a state: bit j-1 is the value of component j
      std::vector<std::uint32_t> cmask(rows);
      for (std::uint32_t x = 0; x < rows; ++x)
        for (int j = 1; j <= n; ++j)
          cmask[x] |= ((x >> (n - j)) & 1u) << (j - 1);
      BooleanNetwork scratch = BooleanNetwork::identity(n);
      const std::uint64_t loop_total = std::uint64_t{1} << n;
      const std::uint64_t edge_total = std::uint64_t{1} << pairs.size();
      for (std::uint64_t lm = 0; lm < loop_total; ++lm)
        for (std::uint64_t em = 0; em < edge_total; ++em) {
          std::array<std::uint32_t, kMaxComponents> nb{};
          for (int i = 1; i <= n; ++i)
            if ((lm >> (i - 1)) & 1u)
              nb[static_cast<std::size_t>(i - 1)] |= 1u << (i - 1);
          for (std::size_t e = 0; e < pairs.size(); ++e)
            if ((em >> e) & 1u) {
              nb[static_cast<std::size_t>(pairs[e].first - 1)] |=
                  1u << (pairs[e].second - 1);
              nb[static_cast<std::size_t>(pairs[e].second - 1)] |=
                  1u << (pairs[e].first - 1);
            }
          for (int i = 1; i <= n; ++i) {
            const std::uint32_t need = nb[static_cast<std::size_t>(i - 1)];
            for (std::uint32_t x = 0; x < rows; ++x)
              scratch.table_entry(i, x) =
                  static_cast<std::uint8_t>((cmask[x] & need) == need);
          }
          fn(scratch);
        }
      return;
    }
  }
}

std::uint64_t NetworkFamily::count() const {
  const int n = n_;
  switch (kind_) {
    case Kind::all: {
      const std::uint64_t bits = static_cast<std::uint64_t>(n) << n;
      if (bits >= 64) throw infeasible_error("NetworkFamily::count: overflow");
      return std::uint64_t{1} << bits;
    }
    case Kind::monotone: {
      std::uint64_t c = 1;
      for (int i = 0; i < n; ++i) c *= monotone_functions(n).size();
      return c;
    }
    case Kind::monotone_on: {
      std::uint64_t c = 1;
      for (const auto& list : monotone_choices(graph_.front(), nonconstant_))
        c *= list.size();
      return c;
    }
    case Kind::conjunctive_symmetric:
      return std::uint64_t{1} << (n + n * (n - 1) / 2);
    case Kind::async_acyclic: {
      std::uint64_t c = 0;
      for_each([&](const BooleanNetwork&) { ++c; });
      return c;
    }
  }
  return 0;
}

std::vector<BooleanNetwork> NetworkFamily::materialize(std::size_t limit) const {
  std::vector<BooleanNetwork> out;
  for_each([&](const BooleanNetwork& f) {
    if (out.size() >= limit)
      throw infeasible_error("NetworkFamily::materialize: family exceeds limit");
    out.push_back(f);
  });
  return out;
}

// ---------------------------------------------------------------------------
// exact minimum lengths

namespace {

// Words of a fixed length generated depth-first in lexicographic order,
// without consecutive repetitions and with first occurrences in increasing
// order (sound for letter-permutation-closed predicates; a minimum-length
// witness can always be normalized to this shape).
template <typename Pred>
bool exists_canonical_word(int n, int length, Word& w, int pos, int max_used,
                           const Pred& pred) {
  if (pos == length) return pred(w);
  const int top = std::min(n, max_used + 1);
  for (int a = 1; a <= top; ++a) {
    if (pos > 0 && w[static_cast<std::size_t>(pos - 1)] == a) continue;
    w[static_cast<std::size_t>(pos)] = a;
    if (exists_canonical_word(n, length, w, pos + 1, std::max(max_used, a), pred))
      return true;
  }
  return false;
}

template <typename Pred>
int deepening_search(int n, int upper, const Pred& pred, const char* what) {
  for (int length = 0; length <= upper; ++length) {
    Word w(static_cast<std::size_t>(length));
    if (exists_canonical_word(n, length, w, 0, 0, pred)) return length;
  }
  throw std::logic_error(std::string(what) + ": no witness within the proven upper bound");
}

}  // namespace

int min_universal_length(int n, int k, bool force) {
  if (n < 1) throw std::invalid_argument("min_universal_length: n must be >= 1");
  if (k < 0) throw std::invalid_argument("min_universal_length: k must be >= 0");
  if (k >= n) return 0;
  if (n > kConfigurationSearchLimit && !force)
    throw infeasible_error("min_universal_length: word search is bounded at n <= 4");
  const int upper = (n - 1) * (n - k) + 1;  // zigzag witness
  return deepening_search(
      n, upper, [&](const Word& w) { return is_k_universal(w, n, k, force); },
      "min_universal_length");
}

int min_path_universal_length(int n, bool force) {
  if (n < 1) throw std::invalid_argument("min_path_universal_length: n must be >= 1");
  if (n > kEnumerationLimit && !force)
    throw infeasible_error("min_path_universal_length: word search is bounded at n <= 3");
  const int upper = (n - 1) * ((1 << n) - 1) + 1;  // alternating-runs witness
  return deepening_search(
      n, upper, [&](const Word& w) { return is_path_universal(w, n, force); },
      "min_path_universal_length");
}

std::optional<int> family_min_fixing_length(
    const std::vector<BooleanNetwork>& family, int n, int budget,
    bool prune_repeats) {
  if (n < 1) throw std::invalid_argument("family_min_fixing_length: n must be >= 1");
  if (budget < 0) throw std::invalid_argument("family_min_fixing_length: negative budget");
  for (const auto& f : family)
    if (f.n() != n)
      throw std::invalid_argument("family_min_fixing_length: member arity mismatch");

  // Members that recently rejected a word are tried first; most candidate
  // words die on the same few members.
  std::vector<const BooleanNetwork*> order;
  order.reserve(family.size());
  for (const auto& f : family) order.push_back(&f);
  auto fixes_all = [&](const Word& w) {
    for (std::size_t t = 0; t < order.size(); ++t) {
      if (!fixes(*order[t], w)) {
        std::rotate(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(t),
                    order.begin() + static_cast<std::ptrdiff_t>(t) + 1);
        return false;
      }
    }
    return true;
  };

  Word w;
  auto search = [&](auto&& self, int pos, int length) -> bool {
    if (pos == length) return fixes_all(w);
    for (int a = 1; a <= n; ++a) {
      if (prune_repeats && pos > 0 && w[static_cast<std::size_t>(pos - 1)] == a)
        continue;
      w[static_cast<std::size_t>(pos)] = a;
      if (self(self, pos + 1, length)) return true;
    }
    return false;
  };
  for (int length = 0; length <= budget; ++length) {
    w.assign(static_cast<std::size_t>(length), 0);
    if (search(search, 0, length)) return length;
  }
  return std::nullopt;
}

std::optional<int> family_min_fixing_length(const NetworkFamily& family,
                                            int budget) {
  const auto members = family.materialize();
  return family_min_fixing_length(
      members, family.n(), budget,
      family.kind() == NetworkFamily::Kind::async_acyclic);
}

Rational fixable_fraction(int n, bool force) {
  NetworkFamily family = NetworkFamily::all(n, force);
  std::uint64_t fixable = 0, total = 0;
  family.for_each([&](const BooleanNetwork& f) {
    ++total;
    if (is_fixable(f)) ++fixable;
  });
  const std::uint64_t g = std::gcd(fixable, total);
  return Rational{fixable / g, total / g};
}

BooleanNetwork sample_monotone_on(const Digraph& g, std::mt19937& rng) {
  const int n = g.vertex_count();
  if (n < 1 || n > kMaxComponents)
    throw std::invalid_argument("sample_monotone_on: vertex count out of range");
  const std::uint32_t rows = 1u << n;
  std::vector<std::vector<std::uint8_t>> tables;
  for (int i = 1; i <= n; ++i) {
    const std::vector<int>& deps = g.in_neighbors(i);
    const int d = static_cast<int>(deps.size());
    if (d > 16) throw infeasible_error("sample_monotone_on: in-degree above 16");
    const std::uint32_t entries = 1u << d;
    std::vector<std::uint8_t> local(entries);
    const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    std::bernoulli_distribution bit(density);
    for (std::uint32_t x = 0; x < entries; ++x) local[x] = bit(rng) ? 1 : 0;
    // Close the random table under the order, upward or downward.
    if (std::bernoulli_distribution(0.5)(rng)) {
      for (int b = 0; b < d; ++b)
        for (std::uint32_t x = 0; x < entries; ++x)
          if ((x >> b) & 1u) local[x] |= local[x ^ (1u << b)];
    } else {
      for (int b = 0; b < d; ++b)
        for (std::uint32_t x = 0; x < entries; ++x)
          if (!((x >> b) & 1u)) local[x] &= local[x | (1u << b)];
    }
    auto& table = tables.emplace_back(rows);
    for (std::uint32_t x = 0; x < rows; ++x)
      table[x] = local[project(x, deps, n)];
  }
  return BooleanNetwork(n, tables);
}

}  // namespace bnfix
