#include "bruhat/weyl.hpp"

#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace bruhat;

namespace {

WeylElt W(const DatumPtr& d, const std::string& word) { return WeylElt::from_word(d, parse_word(word, d->rank())); }

}  // namespace

TEST_CASE("words") {
  CHECK(parse_word("", 2).empty());
  CHECK(parse_word("e", 2).empty());
  CHECK(parse_word("1,2,1", 2) == Word{0, 1, 0});
  CHECK(format_word({0, 1, 0}) == "1,2,1");
  CHECK(format_word({}) == "e");
  CHECK_THROWS_AS(parse_word("3", 2), Error);
  CHECK_THROWS_AS(parse_word("1,,2", 2), Error);
  CHECK_THROWS_AS(parse_word("x", 2), Error);
}

TEST_CASE("group laws") {
  auto a2 = RootDatum::of_type("A2");
  auto e = WeylElt::identity(a2);
  auto s1 = W(a2, "1");
  auto s2 = W(a2, "2");
  CHECK(e * s1 == s1);
  CHECK(s1 * s1 == e);
  CHECK_FALSE(s1 * s2 == s2 * s1);
  CHECK(s1 * s2 * s1 == s2 * s1 * s2);
  for (const auto& w : enumerate(a2)) {
    CHECK(w.inverse().inverse() == w);
    CHECK(w * w.inverse() == e);
  }
  auto other = RootDatum::of_type("B2");
  CHECK_THROWS_AS(s1 * WeylElt::simple(other, 0), Error);
}

TEST_CASE("action on roots") {
  auto a2 = RootDatum::of_type("A2");
  Root a1({1, 0}), a2r({0, 1});
  CHECK(W(a2, "1").act(a2r) == Root({1, 1}));
  // s1 s2 (alpha2) = s1(-alpha2) = -(alpha1 + alpha2)
  CHECK(W(a2, "1,2").act(a2r) == a2->reflect(0, a2->reflect(1, a2r)));
  CHECK(W(a2, "1,2").act(a2r) == Root({-1, -1}));
  CHECK_THROWS_AS(W(a2, "1").act(Root({1, -1})), Error);
}

TEST_CASE("length and reduced words agree with the permutation model") {
  for (int n : {1, 2, 3}) {
    auto d = RootDatum::of_type("A" + std::to_string(n));
    auto elems = enumerate(d);
    std::size_t fact = 1;
    for (int k = 2; k <= n + 1; ++k) fact *= k;
    CHECK(elems.size() == fact);
    std::set<std::vector<int>> perms;
    for (const auto& w : elems) {
      auto word = w.reduced_word();
      auto p = oracle::permutation_of(word, n);
      perms.insert(p);
      CHECK(oracle::inversions(p) == w.length());
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(WeylElt::from_word(d, word) == w);
      CHECK(is_reduced(d, word));
      CHECK(w.inverse().length() == w.length());
    }
    CHECK(perms.size() == fact);
  }
}

TEST_CASE("group orders") {
  std::vector<std::pair<const char*, std::size_t>> orders{{"A1", 2}, {"A1xA1", 4}, {"B2", 8},
                                                          {"G2", 12}, {"B3", 48}, {"C3", 48}};
  for (auto [t, n] : orders) CHECK(enumerate(RootDatum::of_type(t)).size() == n);
}

TEST_CASE("reduced_word is the lexicographically smallest reduced word") {
  auto a2 = RootDatum::of_type("A2");
  CHECK(longest_element(a2).reduced_word() == Word{0, 1, 0});
  CHECK(WeylElt::identity(a2).reduced_word().empty());
  auto a1a1 = RootDatum::of_type("A1xA1");
  CHECK(W(a1a1, "2,1").reduced_word() == Word{0, 1});
  for (const char* t : {"B2", "G2", "A3", "B3"}) {
    auto d = RootDatum::of_type(t);
    for (const auto& w : enumerate(d)) {
      auto all = all_reduced_words(w);
      REQUIRE_FALSE(all.empty());
      CHECK(w.reduced_word() == *std::min_element(all.begin(), all.end()));
      for (const auto& word : all) CHECK(WeylElt::from_word(d, word) == w);
    }
  }
}

TEST_CASE("is_reduced agrees with minimal length") {
  auto b2 = RootDatum::of_type("B2");
  CHECK(is_reduced(b2, {}));
  CHECK(is_reduced(b2, {0, 1, 0, 1}));
  CHECK_FALSE(is_reduced(b2, {0, 1, 0, 1, 0}));
  CHECK_FALSE(is_reduced(b2, {0, 0}));
  // every word of length <= 5
  for (int len = 0; len <= 5; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      Word w;
      for (int k = 0; k < len; ++k) w.push_back((mask >> k) & 1);
      CHECK(is_reduced(b2, w) == (WeylElt::from_word(b2, w).length() == len));
    }
  }
}

TEST_CASE("descent direction") {
  auto a2 = RootDatum::of_type("A2");
  CHECK(descent_direction(WeylElt::identity(a2), Root({1, 1})) == Direction::Up);
  CHECK(descent_direction(W(a2, "1"), Root({1, 0})) == Direction::Down);
  CHECK(descent_direction(W(a2, "1"), Root({0, 1})) == Direction::Up);
  CHECK_THROWS_AS(descent_direction(W(a2, "1"), Root({-1, 0})), Error);
  for (const char* t : {"B2", "A3"}) {
    auto d = RootDatum::of_type(t);
    for (const auto& w : enumerate(d))
      for (int i = 0; i < d->rank(); ++i)
        CHECK((descent_direction(w, d->simple_root(i)) == Direction::Up) ==
              (w.times_simple(i).length() == w.length() + 1));
  }
}

TEST_CASE("Bruhat order: spot values") {
  auto a2 = RootDatum::of_type("A2");
  CHECK(bruhat_leq_subword(WeylElt::identity(a2), W(a2, "1,2")));
  CHECK_FALSE(bruhat_leq_subword(W(a2, "1"), W(a2, "2")));
  CHECK(bruhat_leq_subword(W(a2, "2"), W(a2, "1,2")));
  CHECK(bruhat_leq(W(a2, "1"), W(a2, "2,1")));
  CHECK_FALSE(bruhat_leq(W(a2, "1,2"), W(a2, "2,1")));
  CHECK(bruhat_leq(W(a2, "1,2"), W(a2, "1,2")));
}

TEST_CASE("Bruhat order matches the tableau criterion in type A") {
  for (int n : {2, 3}) {
    auto d = RootDatum::of_type("A" + std::to_string(n));
    auto elems = enumerate(d);
    for (const auto& u : elems)
      for (const auto& v : elems) {
        bool expect = oracle::tableau_leq(oracle::permutation_of(u.reduced_word(), n),
                                          oracle::permutation_of(v.reduced_word(), n));
        CHECK(bruhat_leq(u, v) == expect);
        CHECK(bruhat_leq_subword(u, v) == expect);
      }
  }
}

TEST_CASE("subword test does not depend on the reduced word chosen") {
  for (const char* t : {"A2", "B2"}) {
    auto d = RootDatum::of_type(t);
    auto elems = enumerate(d);
    for (const auto& v : elems)
      for (const auto& word : all_reduced_words(v))
        for (const auto& u : elems) CHECK(bruhat_leq_subword(u, v, word) == bruhat_leq_subword(u, v));
  }
}

TEST_CASE("Bruhat order is a partial order compatible with inversion") {
  auto d = RootDatum::of_type("G2");
  auto elems = enumerate(d);
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a][b] = bruhat_leq(elems[a], elems[b]);
  for (int a = 0; a < n; ++a) {
    CHECK(leq[a][a]);
    for (int b = 0; b < n; ++b) {
      if (a != b && leq[a][b]) CHECK_FALSE(leq[b][a]);
      CHECK(leq[a][b] == bruhat_leq(elems[a].inverse(), elems[b].inverse()));
      for (int c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c]) CHECK(leq[a][c]);
    }
  }
}

TEST_CASE("exchange: spot values and brute force") {
  auto a1 = RootDatum::of_type("A1");
  CHECK(exchange(a1, {0}, 0) == 0);
  auto a2 = RootDatum::of_type("A2");
  CHECK(exchange(a2, {0, 1, 0}, 0) == 2);
  CHECK(exchange(a2, {0, 1}, 1) == 1);
  try {
    exchange(a2, {0, 0}, 0);
    FAIL("expected NotReduced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotReduced);
  }
  try {
    exchange(a2, {0}, 1);
    FAIL("expected NotADescent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotADescent);
  }
  for (const char* t : {"B2", "G2", "A3"}) {
    auto d = RootDatum::of_type(t);
    for (const auto& w : enumerate(d)) {
      for (const auto& word : all_reduced_words(w)) {
        for (int a = 0; a < d->rank(); ++a) {
          if (!w.images()[a].is_negative()) continue;
          int j = exchange(d, word, a);
          Word cut = word;
          cut.erase(cut.begin() + j);
          CHECK(WeylElt::from_word(d, cut) == w.times_simple(a));
          CHECK(is_reduced(d, cut));
          cut.push_back(a);
          CHECK(WeylElt::from_word(d, cut) == w);
          CHECK(is_reduced(d, cut));
        }
      }
    }
  }
}

TEST_CASE("reflections in non-simple roots") {
  for (const char* t : {"A3", "B3", "G2"}) {
    auto d = RootDatum::of_type(t);
    for (const Root& b : d->positive_roots()) {
      WeylElt s = reflection(d, b);
      CHECK(s * s == WeylElt::identity(d));
      CHECK(s.act(b) == -b);
      CHECK(s.length() % 2 == 1);
      CHECK(reflection(d, -b) == s);
      // fixes the hyperplane: sum over roots of the reflection formula
      for (const Root& g : d->positive_roots()) {
        Root img = s.act(g);
        Root diff = g - img;
        // g - s_b(g) is an integer multiple of b
        int k = 0;
        for (int i = 0; i < d->rank(); ++i)
          if (b.coords[i] != 0) {
            k = diff.coords[i] / b.coords[i];
            break;
          }
        CHECK(diff == b.scaled(k));
      }
    }
  }
}

TEST_CASE("longest elements and twist") {
  auto b3 = RootDatum::of_type("B3");
  CHECK(longest_element(b3).length() == 9);
  CHECK(longest_element(b3, ParabolicSubset::of({0, 1})).length() == 3);
  CHECK(longest_element(b3, ParabolicSubset{}).is_identity());
  auto a2f = RootDatum::of_type("A2", Isogeny::SimplyConnected, {1, 0});
  CHECK(twist(W(a2f, "1")) == W(a2f, "2"));
  CHECK(twist(W(a2f, "1,2")) == W(a2f, "2,1"));
  for (const auto& w : enumerate(a2f)) CHECK(twist(twist(w)) == w);
}
