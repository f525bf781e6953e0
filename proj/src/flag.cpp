#include "kmcells/flag.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace kmcells {

CellTable cell_table(const Gcm& g, const NodeSubset& J, int max_dim, EnumerationLimits limits) {
  if (max_dim < 0) throw InvalidArgument("maximum dimension must be nonnegative");
  const auto levels = minimal_coset_reps(g, J, max_dim, limits);

  CellTable t;
  t.counts = levels.sizes();
  t.source = {g.name(), J, max_dim};
  t.sheets = 1;

  std::map<int, int> first;
  for (int d = 0; d <= max_dim; ++d)
    for (const auto& w : levels.by_length[d])
      for (int i : w.word()) first.emplace(i, d);
  for (auto [u, d] : first) {
    t.support.nodes.push_back(u);
    t.support.first_dim.push_back(d);
    t.support.in_parabolic.push_back(J.contains(u));
    std::vector<std::int64_t> row;
    for (const auto& [v, unused] : first) row.push_back(g(u, v));
    t.support.induced.push_back(std::move(row));
  }
  return t;
}

CellTable cover_cell_table(const CellTable& t, int sheets) {
  if (sheets < 1) throw InvalidArgument("covering multiplicity must be at least 1");
  if (t.sheets != 1) throw InvalidArgument("table is already a covering table");
  CellTable out = t;
  for (auto& c : out.counts) c *= static_cast<std::uint64_t>(sheets);
  out.sheets = sheets;
  return out;
}

CellTable truncate(const CellTable& t, int max_dim) {
  if (max_dim < 0 || max_dim > t.max_dim())
    throw InvalidArgument("truncation outside the computed range");
  CellTable out = t;
  out.counts.resize(max_dim + 1);
  out.source.max_dim = max_dim;

  const auto& s = t.support;
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < s.nodes.size(); ++k)
    if (s.first_dim[k] <= max_dim) keep.push_back(k);
  out.support = {};
  for (auto k : keep) {
    out.support.nodes.push_back(s.nodes[k]);
    out.support.first_dim.push_back(s.first_dim[k]);
    out.support.in_parabolic.push_back(s.in_parabolic[k]);
    std::vector<std::int64_t> row;
    for (auto l : keep) row.push_back(s.induced[k][l]);
    out.support.induced.push_back(std::move(row));
  }
  return out;
}

bool diagrams_isomorphic(const std::vector<std::vector<std::int64_t>>& a,
                         const std::vector<bool>& color_a,
                         const std::vector<std::vector<std::int64_t>>& b,
                         const std::vector<bool>& color_b) {
  const std::size_t n = a.size();
  if (b.size() != n || color_a.size() != n || color_b.size() != n) return false;

  auto signature = [](const std::vector<std::vector<std::int64_t>>& m, std::size_t v) {
    std::vector<std::int64_t> s(m[v]);
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<int> map(n, -1);
  std::vector<bool> taken(n, false);

  std::function<bool(std::size_t)> extend = [&](std::size_t v) {
    if (v == n) return true;
    const auto sig = signature(a, v);
    for (std::size_t w = 0; w < n; ++w) {
      if (taken[w] || color_a[v] != color_b[w] || signature(b, w) != sig) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u)
        ok = a[v][u] == b[w][map[u]] && a[u][v] == b[map[u]][w];
      if (!ok) continue;
      map[v] = static_cast<int>(w);
      taken[w] = true;
      if (extend(v + 1)) return true;
      taken[w] = false;
    }
    map[v] = -1;
    return false;
  };
  return extend(0);
}

ComparisonResult compare_tables(const CellTable& a, const CellTable& b) {
  if (a.max_dim() != b.max_dim())
    throw InvalidArgument("tables truncated at different dimensions (" +
                          std::to_string(a.max_dim()) + " vs " + std::to_string(b.max_dim()) + ")");
  if (a.sheets != b.sheets)
    throw InvalidArgument("tables have different covering multiplicities");

  ComparisonResult r;
  r.verdict = Verdict::MatchThrough;
  r.dimension = a.max_dim();
  for (int d = 0; d <= a.max_dim(); ++d) {
    r.detail.emplace_back(a.counts[d], b.counts[d]);
    if (a.counts[d] != b.counts[d] && r.verdict == Verdict::MatchThrough) {
      r.verdict = Verdict::DivergeAt;
      r.dimension = d;
    }
  }
  r.supports_isomorphic = diagrams_isomorphic(a.support.induced, a.support.in_parabolic,
                                              b.support.induced, b.support.in_parabolic);
  return r;
}

std::string ComparisonResult::str() const {
  return (verdict == Verdict::MatchThrough ? "MatchThrough(" : "DivergeAt(") +
         std::to_string(dimension) + ")";
}

}  // namespace kmcells
