#include <doctest.h>

#include <algorithm>

#include "extlevel/index.hpp"

using namespace extlevel;

namespace {

// All m-subsets of [n] in lex order, by recursion on sorted element lists.
void subsets(int n, int m, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n; ++v) {
    cur.push_back(v);
    subsets(n, m, v + 1, cur, out);
    cur.pop_back();
  }
}

int inversions(const std::vector<int>& s) {
  int c = 0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) c += s[a] > s[b];
  return c;
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(12, 4) == 495);
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(3, 4) == 0);
}

TEST_CASE("lex enumeration, rank and unrank against recursion") {
  for (int n = 1; n <= 9; ++n)
    for (int m = 1; m <= n; ++m) {
      std::vector<std::vector<int>> ref;
      std::vector<int> cur;
      subsets(n, m, 1, cur, ref);
      auto got = enumerate_indices(n, m);
      REQUIRE(got.size() == ref.size());
      for (std::size_t r = 0; r < ref.size(); ++r) {
        CHECK(got[r].elems() == ref[r]);
        CHECK(lex_rank(got[r]) == r);
        CHECK(lex_unrank(n, m, r) == got[r]);
        if (r) CHECK(got[r - 1] < got[r]);
      }
    }
  CHECK(lex_rank(WeightIndex::parse(6, "456")) == 19);
  CHECK(lex_rank(WeightIndex::parse(5, "12")) == 0);
}

TEST_CASE("parse and label") {
  auto I = WeightIndex::parse(5, "135");
  CHECK(I.elems() == std::vector<int>{1, 3, 5});
  CHECK(I.label() == "135");
  CHECK(WeightIndex::parse(12, "1,2,10,12").label() == "1,2,10,12");
  CHECK(WeightIndex::parse(5, "1,3") == WeightIndex::parse(5, "13"));
  CHECK_THROWS_AS(WeightIndex::parse(5, "31"), IndexError);
  CHECK_THROWS_AS(WeightIndex::parse(5, "16"), IndexError);
  CHECK_THROWS_AS(WeightIndex::parse(5, "113"), IndexError);
  CHECK_THROWS_AS(WeightIndex::parse(12, "123"), IndexError);
  CHECK_THROWS_AS(WeightIndex::parse(5, "1a"), IndexError);
  CHECK(I.with(2).label() == "1235");
  CHECK(I.without(3).label() == "15");
  CHECK(I.contains(3));
  CHECK_FALSE(I.contains(4));
}

TEST_CASE("perm_sign is the parity of inversions") {
  std::vector<int> p{1, 2, 3, 4, 5};
  do {
    CHECK(perm_sign(p) == (inversions(p) % 2 ? -1 : 1));
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK_THROWS_AS(perm_sign({1, 2, 2}), IndexError);
}

TEST_CASE("insert_sign counts smaller elements") {
  for (auto& L : enumerate_indices(7, 3))
    for (int i = 1; i <= 7; ++i) {
      if (L.contains(i)) continue;
      auto e = L.elems();
      long smaller = std::count_if(e.begin(), e.end(), [&](int l) { return l < i; });
      CHECK(insert_sign(L, i) == (smaller % 2 ? -1 : 1));
      // moving e_i to the front of e_L picks up the same sign as sorting (i, L)
      std::vector<int> seq{i};
      seq.insert(seq.end(), e.begin(), e.end());
      CHECK(insert_sign(L, i) == perm_sign(seq));
    }
}

TEST_CASE("height and subsets of a ground set") {
  CHECK(height(WeightIndex::parse(6, "123"), WeightIndex::parse(6, "134")) == 2);
  CHECK(height(WeightIndex::parse(6, "12"), WeightIndex::parse(6, "34")) == 0);
  auto s = enumerate_subsets(6, {2, 4, 6}, 2);
  REQUIRE(s.size() == 3);
  CHECK(s[0].label() == "24");
  CHECK(s[2].label() == "46");
}
