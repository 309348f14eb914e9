#include "extlevel/index.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace extlevel {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * std::uint64_t(n - k + i) / std::uint64_t(i);
  return r;
}

WeightIndex::WeightIndex(int n, const std::vector<int>& elems) : n_(n) {
  if (n < 1 || n > 32) throw IndexError("index dimension must be in [1, 32]");
  for (int v : elems) {
    if (v < 1 || v > n) throw IndexError("index entry " + std::to_string(v) + " outside [1.." + std::to_string(n) + "]");
    std::uint32_t bit = 1u << (v - 1);
    if (mask_ & bit) throw IndexError("repeated index entry " + std::to_string(v));
    mask_ |= bit;
  }
}

WeightIndex WeightIndex::from_mask(int n, std::uint32_t mask) {
  if (n < 1 || n > 32) throw IndexError("index dimension must be in [1, 32]");
  if (n < 32 && (mask >> n) != 0) throw IndexError("mask has entries outside [1..n]");
  WeightIndex w;
  w.n_ = n;
  w.mask_ = mask;
  return w;
}

WeightIndex WeightIndex::parse(int n, std::string_view text) {
  std::vector<int> v;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      auto tok = text.substr(start, end - start);
      while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
      while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw IndexError("bad index text '" + std::string(text) + "'");
      v.push_back(std::stoi(std::string(tok)));
      start = end + 1;
    }
  } else {
    if (n > 9) throw IndexError("digit-string indices need n <= 9; use commas");
    if (text.empty()) throw IndexError("empty index text");
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw IndexError("bad index text '" + std::string(text) + "'");
      v.push_back(c - '0');
    }
  }
  if (!std::is_sorted(v.begin(), v.end()))
    throw IndexError("index entries must be increasing: '" + std::string(text) + "'");
  return WeightIndex(n, v);
}

int WeightIndex::size() const { return std::popcount(mask_); }

std::vector<int> WeightIndex::elems() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

WeightIndex WeightIndex::with(int v) const {
  if (v < 1 || v > n_) throw IndexError("value outside [1..n]");
  if (contains(v)) throw IndexError("value already in index");
  return from_mask(n_, mask_ | (1u << (v - 1)));
}

WeightIndex WeightIndex::without(int v) const {
  if (!contains(v)) throw IndexError("value not in index");
  return from_mask(n_, mask_ & ~(1u << (v - 1)));
}

std::string WeightIndex::label() const {
  std::string s;
  for (int v : elems()) {
    if (n_ <= 9) {
      s += char('0' + v);
    } else {
      if (!s.empty()) s += ',';
      s += std::to_string(v);
    }
  }
  return s;
}

std::strong_ordering WeightIndex::operator<=>(const WeightIndex& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  if (auto c = size() <=> o.size(); c != 0) return c;
  // Equal sizes: the first differing value decides, and the set holding the
  // smaller one comes first.
  std::uint32_t diff = mask_ ^ o.mask_;
  if (!diff) return std::strong_ordering::equal;
  std::uint32_t low = diff & (~diff + 1);
  return (mask_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::uint64_t lex_rank(const WeightIndex& I) {
  const int n = I.n();
  const auto e = I.elems();
  const int m = int(e.size());
  std::uint64_t r = 0;
  int prev = 0;
  for (int t = 0; t < m; ++t) {
    for (int v = prev + 1; v < e[t]; ++v) r += binomial(n - v, m - t - 1);
    prev = e[t];
  }
  return r;
}

WeightIndex lex_unrank(int n, int m, std::uint64_t rank) {
  if (m < 0 || m > n) throw IndexError("bad (n, m)");
  if (rank >= binomial(n, m)) throw IndexError("rank out of range");
  std::vector<int> e;
  int v = 1;
  for (int t = 0; t < m; ++t) {
    for (;; ++v) {
      std::uint64_t block = binomial(n - v, m - t - 1);
      if (rank < block) break;
      rank -= block;
    }
    e.push_back(v++);
  }
  return WeightIndex(n, e);
}

std::vector<WeightIndex> enumerate_subsets(int n, const std::vector<int>& ground, int m) {
  std::vector<WeightIndex> out;
  const int g = int(ground.size());
  if (m < 0 || m > g) return out;
  std::vector<int> pos(m);
  for (int t = 0; t < m; ++t) pos[t] = t;
  std::vector<int> cur(m);
  for (;;) {
    for (int t = 0; t < m; ++t) cur[t] = ground[pos[t]];
    out.emplace_back(n, cur);
    int t = m - 1;
    while (t >= 0 && pos[t] == g - m + t) --t;
    if (t < 0) break;
    ++pos[t];
    for (int u = t + 1; u < m; ++u) pos[u] = pos[u - 1] + 1;
  }
  return out;
}

std::vector<WeightIndex> enumerate_indices(int n, int m) {
  std::vector<int> ground(n);
  for (int v = 0; v < n; ++v) ground[v] = v + 1;
  return enumerate_subsets(n, ground, m);
}

int perm_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] == seq[b]) throw IndexError("perm_sign: repeated entry " + std::to_string(seq[a]));
      if (seq[a] > seq[b]) ++inversions;
    }
  return inversions % 2 ? -1 : 1;
}

int insert_sign(const WeightIndex& L, int i) {
  if (L.contains(i)) throw IndexError("insert_sign: value already in L");
  if (i < 1 || i > L.n()) throw IndexError("insert_sign: value outside [1..n]");
  std::uint32_t below = i == 1 ? 0u : (L.mask() & ((1u << (i - 1)) - 1));
  return std::popcount(below) % 2 ? -1 : 1;
}

int height(const WeightIndex& I, const WeightIndex& J) {
  if (I.n() != J.n() || I.size() != J.size()) throw IndexError("height: shape mismatch");
  return std::popcount(I.mask() & J.mask());
}

}  // namespace extlevel
