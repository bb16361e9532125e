#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bnfix {

// A word over the positive integers. Letters in [n] update a component;
// larger letters act as the identity.
using Word = std::vector<int>;

// Largest supported component count. Exhaustive oracles are only practical
// far below this; see the per-operation limits.
constexpr int kMaxComponents = 24;

// One global state of an n-component network. Component 1 is the leftmost
// character of the textual form and the most significant bit of index(), so
// the index order matches the usual "000", "001", ..., "111" row order.
class State {
 public:
  State(int n, std::uint32_t index) : n_(n), bits_(index) {
    if (n < 1 || n > kMaxComponents)
      throw std::invalid_argument("State: component count out of range");
    if (n < 32 && index >> n)
      throw std::invalid_argument("State: index out of range for n");
  }

  static State from_string(const std::string& bits) {
    if (bits.empty() || bits.size() > kMaxComponents)
      throw std::invalid_argument("State: expected 1..24 binary digits");
    std::uint32_t v = 0;
    for (char c : bits) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("State: invalid character in bit string");
      v = v << 1 | std::uint32_t(c - '0');
    }
    return State(static_cast<int>(bits.size()), v);
  }

  int n() const { return n_; }
  std::uint32_t index() const { return bits_; }

  // Value of component i, 1 <= i <= n.
  bool get(int i) const { return (bits_ >> (n_ - i)) & 1u; }

  State with(int i, bool value) const {
    const std::uint32_t m = 1u << (n_ - i);
    return State(n_, value ? (bits_ | m) : (bits_ & ~m));
  }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 1; i <= n_; ++i)
      if (get(i)) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
  }

  friend bool operator==(const State&, const State&) = default;

 private:
  int n_;
  std::uint32_t bits_;
};

// Componentwise partial order on states of equal length.
inline bool state_leq(const State& x, const State& y) {
  if (x.n() != y.n())
    throw std::invalid_argument("state_leq: mismatched lengths");
  return (x.index() & ~y.index()) == 0;
}

}  // namespace bnfix
