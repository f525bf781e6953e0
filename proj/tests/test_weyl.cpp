#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "kmcells/weyl.hpp"
#include "oracles.hpp"

using namespace kmcells;

namespace {

oracle::Matrix dense(const IntMatrix& m) {
  oracle::Matrix out(m.size(), std::vector<std::int64_t>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) out[i][j] = m(i, j);
  return out;
}

oracle::Matrix oracle_word(const oracle::Matrix& cartan, const std::vector<int>& word) {
  oracle::Matrix m = oracle::identity(cartan.size());
  for (int i : word) m = oracle::product(m, oracle::reflection(cartan, i));
  return m;
}

std::vector<int> random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> pick(0, rank - 1);
  std::vector<int> w(len);
  for (auto& x : w) x = pick(rng);
  return w;
}

bool is_palindrome(const std::vector<std::uint64_t>& v) {
  return std::equal(v.begin(), v.end(), v.rbegin());
}

}  // namespace

TEST_CASE("simple reflections") {
  const Gcm a2 = build_named("A2");
  const auto s1 = simple_reflection(a2, 0);
  CHECK(std::vector<std::int64_t>(s1.image(0).begin(), s1.image(0).end()) == std::vector<std::int64_t>{-1, 0});
  CHECK(std::vector<std::int64_t>(s1.image(1).begin(), s1.image(1).end()) == std::vector<std::int64_t>{1, 1});
  CHECK(s1.length() == 1);

  const auto a1 = simple_reflection(build_named("A1"), 0);
  CHECK(a1.matrix()(0, 0) == -1);

  const Gcm e9 = build_named("E9");
  const auto s9 = simple_reflection(e9, 8);
  for (int j = 0; j < 7; ++j) {
    for (int r = 0; r < 9; ++r) CHECK(s9.matrix()(r, j) == (r == j ? 1 : 0));
  }
  CHECK(s9.matrix()(7, 7) == 1);
  CHECK(s9.matrix()(8, 7) == 1);
  CHECK_THROWS_AS(simple_reflection(a2, 2), IndexOutOfRange);
}

TEST_CASE("multiply and inverse") {
  const Gcm a2 = build_named("A2");
  const auto s1 = simple_reflection(a2, 0);
  const auto s2 = simple_reflection(a2, 1);
  const auto e = multiply(s1, s1);
  CHECK(e.is_identity());
  CHECK(e.length() == 0);

  const auto r = multiply(s1, s2);
  CHECK(r.length() == 2);
  CHECK_FALSE(r.is_identity());
  CHECK_FALSE(multiply(r, r).is_identity());
  CHECK(multiply(multiply(r, r), r).is_identity());
  CHECK(inverse(r) == multiply(s2, s1));
  CHECK(multiply(r, inverse(r)).is_identity());

  CHECK_THROWS_AS(multiply(s1, simple_reflection(build_named("A3"), 0)), InvalidArgument);
}

TEST_CASE("root_sign") {
  const std::vector<std::int64_t> pos{1, 1}, neg{0, -1}, mixed{1, -1};
  CHECK(root_sign(pos) == RootSign::Positive);
  CHECK(root_sign(neg) == RootSign::Negative);
  CHECK_THROWS_AS(root_sign(mixed), MixedSignError);
  const std::vector<std::int64_t> zero{0, 0};
  CHECK_THROWS_AS(root_sign(zero), MixedSignError);
}

TEST_CASE("canonical_word examples") {
  const Gcm a2 = build_named("A2");
  CHECK(canonical_word(identity_element(a2)).word.empty());
  const std::vector<int> w212{1, 0, 1};
  const auto longest = element_from_word(a2, w212);
  CHECK(longest.word() == std::vector<int>{0, 1, 0});
  CHECK(longest.length() == 3);
  const std::vector<int> w11{0, 0};
  CHECK(element_from_word(a2, w11).length() == 0);

  // s2 s1 s3 in A3: reduced words are [2,1,3] and [2,3,1]; lex-least wins.
  const std::vector<int> w213{1, 0, 2};
  CHECK(element_from_word(build_named("A3"), w213).word() == std::vector<int>{1, 0, 2});
}

TEST_CASE("canonical word is the lex-least reduced word (brute force)") {
  for (const char* name : {"A2", "A3"}) {
    const Gcm g = build_named(name);
    const auto cartan = g.entries();
    // Every word up to the longest length, in lexicographic order per length.
    std::map<oracle::Matrix, std::vector<int>> first;
    std::vector<std::vector<int>> words{{}};
    for (int len = 0; len <= 6; ++len) {
      std::sort(words.begin(), words.end());
      for (const auto& w : words) first.emplace(oracle_word(cartan, w), w);
      std::vector<std::vector<int>> next;
      for (const auto& w : words)
        for (int i = 0; i < g.rank(); ++i) {
          auto x = w;
          x.push_back(i);
          next.push_back(x);
        }
      words = std::move(next);
    }
    const auto levels = enumerate_by_length(g, 6);
    std::size_t count = 0;
    for (const auto& level : levels.by_length)
      for (const auto& w : level) {
        ++count;
        CHECK(w.word() == first.at(dense(w.matrix())));
      }
    CHECK(count == first.size());
  }
}

TEST_CASE("enumerate_by_length examples") {
  CHECK(enumerate_by_length(build_named("A2"), 3).sizes() == std::vector<std::uint64_t>{1, 2, 2, 1});
  CHECK(enumerate_by_length(build_named("A1"), 5).sizes() == std::vector<std::uint64_t>{1, 1, 0, 0, 0, 0});

  const Gcm e10 = build_named("E10");
  const auto cartan = e10.entries();
  std::set<oracle::Matrix> pairs;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      if (i != j) pairs.insert(oracle_word(cartan, {i, j}));
  const auto sizes = enumerate_by_length(e10, 2).sizes();
  CHECK(sizes == std::vector<std::uint64_t>{1, 10, pairs.size()});
  CHECK(sizes[2] == 54);
}

TEST_CASE("BFS words agree with canonical_word and element_from_word") {
  for (const char* name : {"A3", "D4", "E9"}) {
    const Gcm g = build_named(name);
    const auto levels = enumerate_by_length(g, 5);
    for (int len = 0; len <= 5; ++len)
      for (const auto& w : levels.by_length[len]) {
        CHECK(w.length() == len);
        const auto cw = canonical_word(w);
        CHECK(cw.word == w.word());
        CHECK(element_from_word(g, w.word()).matrix() == w.matrix());
      }
    for (const auto& level : levels.by_length)
      CHECK(std::is_sorted(level.begin(), level.end(),
                           [](const WeylElement& a, const WeylElement& b) { return a.word() < b.word(); }));
  }
}

TEST_CASE("growth series against the degree product") {
  CHECK(growth_series(build_named("A3"), 6) == oracle::degree_product({2, 3, 4}, 6));
  CHECK(growth_series(build_named("A3"), 6) == std::vector<std::uint64_t>{1, 3, 5, 6, 5, 3, 1});
  const auto d4 = growth_series(build_named("D4"), 12);
  CHECK(d4 == oracle::degree_product({2, 4, 4, 6}, 12));
  std::uint64_t total = 0;
  for (auto c : d4) total += c;
  CHECK(total == 192);
  CHECK(growth_series(build_named("E6"), 8) == oracle::degree_product({2, 5, 6, 8, 9, 12}, 8));
  CHECK(growth_series(build_named("E8"), 10) == oracle::degree_product({2, 8, 12, 14, 18, 20, 24, 30}, 10));
}

TEST_CASE("finite growth series are palindromic") {
  CHECK(is_palindrome(growth_series(build_named("A1"), 1)));
  CHECK(is_palindrome(growth_series(build_named("A2"), 3)));
  CHECK(is_palindrome(growth_series(build_named("A3"), 6)));
  CHECK(is_palindrome(growth_series(build_named("A4"), 10)));
  CHECK(is_palindrome(growth_series(build_named("D4"), 12)));
}

TEST_CASE("BFS agrees with naive all-words enumeration for rank <= 3") {
  const std::vector<Gcm::Entries> cases{
      {{2}},
      {{2, -1}, {-1, 2}},
      {{2, -2}, {-2, 2}},
      {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}},
      {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}},
      {{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}},
      {{2, -3, 0}, {-1, 2, -1}, {0, -1, 2}},
  };
  for (const auto& c : cases) {
    const Gcm g = validate(c);
    CAPTURE(to_gcm_text(g));
    CHECK(growth_series(g, 6) == oracle::all_words_growth(c, 6));
  }
}

TEST_CASE("is_minimal_rep") {
  const Gcm a2 = build_named("A2");
  CHECK(is_minimal_rep(identity_element(a2), NodeSubset{0, 1}));
  CHECK(is_minimal_rep(identity_element(a2), NodeSubset{}));
  CHECK_FALSE(is_minimal_rep(simple_reflection(a2, 1), NodeSubset{1}));
  CHECK(is_minimal_rep(simple_reflection(a2, 0), NodeSubset{1}));

  // Brute force: w is minimal iff no w s_j with j in J is shorter.
  for (const auto& level : enumerate_by_length(a2, 3).by_length)
    for (const auto& w : level) {
      const bool brute = multiply(w, simple_reflection(a2, 1)).length() > w.length();
      CHECK(is_minimal_rep(w, NodeSubset{1}) == brute);
    }
}

TEST_CASE("minimal coset representatives") {
  const Gcm a2 = build_named("A2");
  const auto reps = minimal_coset_reps(a2, NodeSubset{1}, 3);
  CHECK(reps.sizes() == std::vector<std::uint64_t>{1, 1, 1, 0});
  CHECK(reps.by_length[1][0].word() == std::vector<int>{0});
  CHECK(reps.by_length[2][0].word() == std::vector<int>{1, 0});

  const Gcm a8 = build_named("A8");
  CHECK(minimal_coset_reps(a8, NodeSubset::range(0, 6), 8).sizes() == std::vector<std::uint64_t>(9, 1));
  CHECK(minimal_coset_reps(a8, NodeSubset::range(0, 7), 5).sizes() ==
        std::vector<std::uint64_t>{1, 0, 0, 0, 0, 0});

  // Filtering the full group agrees with the coset BFS.
  const Gcm d4 = build_named("D4");
  const NodeSubset J{0, 1};
  const auto all = enumerate_by_length(d4, 12);
  const auto cos = minimal_coset_reps(d4, J, 12);
  for (int len = 0; len <= 12; ++len) {
    std::vector<std::vector<int>> filtered;
    for (const auto& w : all.by_length[len])
      if (is_minimal_rep(w, J)) filtered.push_back(w.word());
    std::vector<std::vector<int>> got;
    for (const auto& w : cos.by_length[len]) got.push_back(w.word());
    CHECK(got == filtered);
  }
}

TEST_CASE("coset counts against the weight orbit") {
  const Gcm e9 = build_named("E9");
  const auto sizes = minimal_coset_reps(e9, NodeSubset::range(0, 7), 9).sizes();
  CHECK(sizes == oracle::weight_orbit_levels(e9.entries(), {0, 1, 2, 3, 4, 5, 6, 7}, 9));
  const Gcm e6 = build_named("E6");
  CHECK(minimal_coset_reps(e6, NodeSubset{0, 2, 3, 4}, 8).sizes() ==
        oracle::weight_orbit_levels(e6.entries(), {0, 2, 3, 4}, 8));
}

TEST_CASE("length-additive factorization growth(W) = growth(W^J) growth(W_J)") {
  struct Case {
    const char* name;
    NodeSubset J;
  };
  for (const auto& c : {Case{"A2", NodeSubset{0}}, Case{"A3", NodeSubset{0, 1}},
                        Case{"E9", NodeSubset::range(0, 7)}, Case{"D4", NodeSubset{1}}}) {
    CAPTURE(c.name);
    const Gcm g = build_named(c.name);
    const int depth = 6;
    const auto whole = growth_series(g, depth);
    const auto quotient = minimal_coset_reps(g, c.J, depth).sizes();
    const auto para = growth_series(subdiagram(g, c.J), depth);
    CHECK(whole == oracle::series_product(quotient, para, depth));
  }
}

TEST_CASE("random words: oracle matrices, lengths, inverses, parity, signs") {
  std::mt19937 rng(20260915);
  for (const char* name : {"A4", "D5", "E9", "E10"}) {
    const Gcm g = build_named(name);
    const auto cartan = g.entries();
    for (int trial = 0; trial < 40; ++trial) {
      const auto word = random_word(rng, g.rank(), 1 + trial % 9);
      const auto w = element_from_word(g, word);
      CHECK(dense(w.matrix()) == oracle_word(cartan, word));
      CHECK(w.length() <= static_cast<int>(word.size()));
      CHECK((static_cast<int>(word.size()) - w.length()) % 2 == 0);
      CHECK(determinant(w.matrix()) == (w.length() % 2 == 0 ? 1 : -1));
      CHECK(inverse(w).length() == w.length());
      CHECK(multiply(w, inverse(w)).is_identity());
      CHECK(element_from_word(g, w.word()) == w);
      int descents = 0;
      for (int i = 0; i < g.rank(); ++i) {
        CHECK_NOTHROW(root_sign(w.image(i)));
        if (w.has_right_descent(i)) {
          ++descents;
          CHECK(multiply(w, simple_reflection(g, i)).length() == w.length() - 1);
        } else {
          CHECK(multiply(w, simple_reflection(g, i)).length() == w.length() + 1);
        }
      }
      CHECK((descents == 0) == w.is_identity());
    }
  }
}

TEST_CASE("sign dichotomy over whole enumerations") {
  for (const char* name : {"A3", "D4", "E9"}) {
    const Gcm g = build_named(name);
    for (const auto& level : enumerate_by_length(g, 6).by_length)
      for (const auto& w : level) {
        for (int i = 0; i < g.rank(); ++i) CHECK_NOTHROW(root_sign(w.image(i)));
        CHECK(determinant(w.matrix()) == (w.length() % 2 == 0 ? 1 : -1));
      }
  }
}

TEST_CASE("budget exhaustion reports depth") {
  EnumerationLimits limits;
  limits.max_elements = 100;
  try {
    enumerate_by_length(build_named("E9"), 9, limits);
    FAIL("expected budget exhaustion");
  } catch (const BudgetExceeded& e) {
    CHECK(e.depth_reached() == 2);  // 1 + 9 + 44 levels fit, length 3 does not
    CHECK(e.kind() == "BudgetExceeded");
  }
}

TEST_CASE("overflow is detected, not wrapped") {
  // Strongly hyperbolic rank 2: root coordinates grow exponentially.
  const Gcm g = validate({{2, -1000000}, {-1000000, 2}});
  std::vector<int> word;
  for (int k = 0; k < 12; ++k) word.push_back(k % 2);
  CHECK_THROWS_AS(element_from_word(g, word), OverflowError);
}
