#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace extlevel {

class IndexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::uint64_t binomial(int n, int k);

/// An m-subset of [n] = {1..n}, stored as a bitmask (bit v-1 for value v).
class WeightIndex {
 public:
  WeightIndex() = default;
  WeightIndex(int n, const std::vector<int>& elems);
  static WeightIndex from_mask(int n, std::uint32_t mask);
  /// "135" (digits, n <= 9) or "1,3,5".
  static WeightIndex parse(int n, std::string_view text);

  int n() const { return n_; }
  int size() const;
  std::uint32_t mask() const { return mask_; }
  std::vector<int> elems() const;
  bool contains(int v) const { return v >= 1 && v <= n_ && (mask_ >> (v - 1)) & 1u; }

  WeightIndex with(int v) const;
  WeightIndex without(int v) const;

  /// Digit string for n <= 9, comma-separated otherwise.
  std::string label() const;

  bool operator==(const WeightIndex& o) const { return n_ == o.n_ && mask_ == o.mask_; }
  /// Orders by size, then lexicographically on the sorted element lists.
  std::strong_ordering operator<=>(const WeightIndex& o) const;

 private:
  int n_ = 0;
  std::uint32_t mask_ = 0;
};

struct WeightPair {
  WeightIndex I;
  WeightIndex J;
  bool diagonal() const { return I == J; }
  bool operator==(const WeightPair&) const = default;
  auto operator<=>(const WeightPair& o) const {
    if (auto c = I <=> o.I; c != 0) return c;
    return J <=> o.J;
  }
};

/// 0-based position of I among the C(n,m) m-subsets in lex order.
std::uint64_t lex_rank(const WeightIndex& I);
WeightIndex lex_unrank(int n, int m, std::uint64_t rank);
/// All m-subsets of [n] in lex order.
std::vector<WeightIndex> enumerate_indices(int n, int m);
/// All m-subsets of the given ground set (sorted values), lex order.
std::vector<WeightIndex> enumerate_subsets(int n, const std::vector<int>& ground, int m);

/// Sign of the permutation sorting seq ascending. Throws on repeated entries.
int perm_sign(const std::vector<int>& seq);
/// (-1)^{#{l in L : l < i}}: the sign picked up moving e_i into place in e_L.
int insert_sign(const WeightIndex& L, int i);
int height(const WeightIndex& I, const WeightIndex& J);

}  // namespace extlevel
