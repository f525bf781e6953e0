#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "kmcells/flag.hpp"
#include "oracles.hpp"

using namespace kmcells;

namespace {

using Counts = std::vector<std::uint64_t>;

CellTable table_with(Counts counts) {
  CellTable t;
  t.counts = std::move(counts);
  t.source.max_dim = t.max_dim();
  return t;
}

}  // namespace

TEST_CASE("cell_table examples") {
  CHECK(cell_table(build_named("A2"), NodeSubset{1}, 2).counts == Counts{1, 1, 1});
  CHECK(cell_table(build_named("A8"), NodeSubset::range(0, 6), 8).counts == Counts(9, 1));
  for (const char* name : {"A1", "A4", "D5", "E10"}) {
    const Gcm g = build_named(name);
    CHECK(cell_table(g, NodeSubset{}, 1).counts == Counts{1, static_cast<std::uint64_t>(g.rank())});
  }
  const auto t = cell_table(build_named("E9"), NodeSubset::range(0, 7), 8);
  CHECK(t.source.gcm_name == "E9");
  CHECK(t.source.J == NodeSubset::range(0, 7));
  // Node 9 starts every word; node 1 is first reached in dimension 8.
  CHECK(t.support.nodes == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(t.support.first_dim.back() == 1);
  CHECK(t.support.first_dim.front() == 8);
  CHECK(truncate(t, 7).support.nodes == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("cell counts against the weight orbit") {
  struct Case {
    const char* name;
    int outside;
  };
  for (const auto& c : {Case{"E9", 8}, Case{"E10", 9}, Case{"E11", 10}, Case{"A8", 7}, Case{"A9", 8}}) {
    CAPTURE(c.name);
    const Gcm g = build_named(c.name);
    std::set<int> J;
    for (int i = 0; i < c.outside; ++i) J.insert(i);
    const auto t = cell_table(g, NodeSubset::range(0, c.outside - 1), 8);
    CHECK(t.counts == oracle::weight_orbit_levels(g.entries(), J, 8));
  }
}

TEST_CASE("parabolic index: cell counts of finite G/P sum to |W| / |W_J|") {
  struct Case {
    const char* name;
    NodeSubset J;
    int top;
    std::uint64_t index;
  };
  for (const auto& c : {Case{"A2", NodeSubset{0}, 3, 3}, Case{"A3", NodeSubset{1}, 6, 12},
                        Case{"A3", NodeSubset{0, 2}, 6, 6}, Case{"D4", NodeSubset{0, 2, 3}, 12, 24},
                        Case{"D4", NodeSubset{}, 12, 192}}) {
    const auto t = cell_table(build_named(c.name), c.J, c.top);
    CHECK(std::accumulate(t.counts.begin(), t.counts.end(), std::uint64_t{0}) == c.index);
  }
}

TEST_CASE("cover_cell_table") {
  const auto a = cell_table(build_named("A8"), NodeSubset::range(0, 6), 8);
  const auto two = cover_cell_table(a, 2);
  CHECK(two.counts == Counts(9, 2));
  CHECK(two.sheets == 2);
  CHECK(cover_cell_table(a, 1).counts == a.counts);
  CHECK(cover_cell_table(table_with({1, 2}), 3).counts == Counts{3, 6});
  CHECK_THROWS_AS(cover_cell_table(a, 0), InvalidArgument);
  CHECK_THROWS_AS(cover_cell_table(two, 2), InvalidArgument);
}

TEST_CASE("compare_tables") {
  const auto e9 = cell_table(build_named("E9"), NodeSubset::range(0, 7), 8);
  const auto a8 = cell_table(build_named("A8"), NodeSubset::range(0, 6), 8);
  CHECK(e9.counts == Counts{1, 1, 1, 1, 1, 1, 1, 2, 2});
  const auto r = compare_tables(e9, a8);
  CHECK(r.verdict == Verdict::DivergeAt);
  CHECK(r.dimension == 7);
  CHECK(r.detail.size() == 9);
  CHECK_FALSE(r.supports_isomorphic);

  const auto self = compare_tables(e9, e9);
  CHECK(self.verdict == Verdict::MatchThrough);
  CHECK(self.dimension == 8);
  CHECK(self.supports_isomorphic);

  const auto e10 = cell_table(build_named("E10"), NodeSubset::range(0, 8), 7);
  const auto a9 = cell_table(build_named("A9"), NodeSubset::range(0, 7), 7);
  const auto step = compare_tables(e10, a9);
  CHECK(step.verdict == Verdict::MatchThrough);
  CHECK(step.dimension == 7);
  CHECK(step.supports_isomorphic);
  CHECK(step.str() == "MatchThrough(7)");

  const auto e11 = cell_table(build_named("E11"), NodeSubset::range(0, 9), 7);
  const auto a10 = cell_table(build_named("A10"), NodeSubset::range(0, 8), 7);
  CHECK(compare_tables(e11, a10).verdict == Verdict::MatchThrough);

  CHECK_THROWS_AS(compare_tables(e9, truncate(a8, 7)), InvalidArgument);
  CHECK_THROWS_AS(compare_tables(e9, cover_cell_table(e9, 2)), InvalidArgument);
}

TEST_CASE("compare_tables is symmetric") {
  const std::vector<CellTable> tables{
      cell_table(build_named("E9"), NodeSubset::range(0, 7), 8),
      cell_table(build_named("A8"), NodeSubset::range(0, 6), 8),
      cell_table(build_named("E10"), NodeSubset::range(0, 8), 8),
      cell_table(build_named("D6"), NodeSubset::range(0, 4), 8),
  };
  for (const auto& a : tables)
    for (const auto& b : tables) {
      const auto ab = compare_tables(a, b);
      const auto ba = compare_tables(b, a);
      CHECK(ab.verdict == ba.verdict);
      CHECK(ab.dimension == ba.dimension);
      CHECK(ab.supports_isomorphic == ba.supports_isomorphic);
    }
}

TEST_CASE("truncation is monotone") {
  const auto e10 = cell_table(build_named("E10"), NodeSubset::range(0, 8), 9);
  const auto a9 = cell_table(build_named("A9"), NodeSubset::range(0, 7), 9);
  for (int d = 0; d <= 9; ++d) {
    const auto t = truncate(e10, d);
    CHECK(t.counts == Counts(e10.counts.begin(), e10.counts.begin() + d + 1));
    CHECK(t.counts == cell_table(build_named("E10"), NodeSubset::range(0, 8), d).counts);
    CHECK(t.support.nodes == cell_table(build_named("E10"), NodeSubset::range(0, 8), d).support.nodes);
  }
  // Once a comparison diverges at d it diverges at d for every longer truncation.
  int first = -1;
  for (int d = 0; d <= 9; ++d) {
    const auto r = compare_tables(truncate(e10, d), truncate(a9, d));
    if (first < 0 && r.verdict == Verdict::DivergeAt) first = r.dimension;
    if (first >= 0) {
      CHECK(r.verdict == Verdict::DivergeAt);
      CHECK(r.dimension == first);
    } else {
      CHECK(r.dimension == d);
    }
  }
  CHECK_THROWS_AS(truncate(e10, 10), InvalidArgument);
}

TEST_CASE("colored diagram isomorphism") {
  const auto path = oracle::type_a(4);
  const auto star = oracle::type_d(4);
  CHECK(diagrams_isomorphic(path, {false, false, false, true}, path, {true, false, false, false}));
  CHECK_FALSE(diagrams_isomorphic(path, {false, false, false, true}, path, {false, true, false, false}));
  CHECK_FALSE(diagrams_isomorphic(path, {false, false, false, false}, star, {false, false, false, false}));
  CHECK(diagrams_isomorphic(star, {false, false, true, false}, star, {true, false, false, false}));
  CHECK_FALSE(diagrams_isomorphic(path, {false, false, false, false}, oracle::type_a(3), {false, false, false}));
}
