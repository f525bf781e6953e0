#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kmcells/gcm.hpp"
#include "kmcells/weyl.hpp"

namespace kmcells {

struct TableSource {
  std::string gcm_name;
  NodeSubset J;
  int max_dim = 0;
};

// Generators occurring in the words of W^J up to the truncation, together
// with the induced diagram. Nodes are indices into the source matrix.
struct CellSupport {
  std::vector<int> nodes;
  // Principal submatrix on `nodes`.
  std::vector<std::vector<std::int64_t>> induced;
  // in_parabolic[k]: whether nodes[k] belongs to J.
  std::vector<bool> in_parabolic;
  // Shortest word length in which nodes[k] occurs.
  std::vector<int> first_dim;
};

// Bruhat cells of G/P_J per dimension, or of an s-sheeted cover of it.
struct CellTable {
  std::vector<std::uint64_t> counts;
  TableSource source;
  int sheets = 1;
  CellSupport support;

  int max_dim() const { return static_cast<int>(counts.size()) - 1; }
};

CellTable cell_table(const Gcm& g, const NodeSubset& J, int max_dim,
                     EnumerationLimits limits = {});

// Lifts each cell to `sheets` cells. Requires an uncovered table.
CellTable cover_cell_table(const CellTable& t, int sheets);

// Restriction to dimensions 0..max_dim.
CellTable truncate(const CellTable& t, int max_dim);

enum class Verdict { MatchThrough, DivergeAt };

struct ComparisonResult {
  Verdict verdict = Verdict::MatchThrough;
  // D for MatchThrough(D), d for DivergeAt(d).
  int dimension = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> detail;
  // Colored isomorphism between the two supports (J-membership preserved).
  bool supports_isomorphic = false;

  std::string str() const;
};

// Throws InvalidArgument on truncation or sheet mismatch.
ComparisonResult compare_tables(const CellTable& a, const CellTable& b);

// Isomorphism of weighted diagrams preserving node colors. Brute-force
// backtracking; intended for the small supports produced here.
bool diagrams_isomorphic(const std::vector<std::vector<std::int64_t>>& a,
                         const std::vector<bool>& color_a,
                         const std::vector<std::vector<std::int64_t>>& b,
                         const std::vector<bool>& color_b);

}  // namespace kmcells
