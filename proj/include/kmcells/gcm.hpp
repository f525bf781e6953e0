#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmcells/error.hpp"

namespace kmcells {

enum class Family { A, D, E };

// A named simply-laced diagram: A_n (n >= 1), D_n (n >= 4), E_n (n >= 6).
// E_n is unbounded; E_9, E_10, ... are the Kac-Moody cases.
struct DynkinName {
  Family family = Family::A;
  int rank = 1;

  // Parses "A2", "d4", "E10". Throws ParseError / InvalidArgument.
  static DynkinName parse(std::string_view text);

  std::string str() const;
  bool operator==(const DynkinName&) const = default;
};

// Sorted, duplicate-free set of 0-based node indices.
class NodeSubset {
 public:
  NodeSubset() = default;
  NodeSubset(std::initializer_list<int> nodes);
  explicit NodeSubset(std::vector<int> nodes);

  // Nodes first..last inclusive (0-based).
  static NodeSubset range(int first, int last);
  // Parses 1-based text such as "1-8,10" into 0-based nodes. An empty string
  // (or "none") is the empty subset.
  static NodeSubset parse(std::string_view text);

  const std::vector<int>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  bool contains(int node) const;

  // 1-based compact text, e.g. "1-8,10"; "" for the empty set.
  std::string str() const;

  bool operator==(const NodeSubset&) const = default;

 private:
  std::vector<int> nodes_;
};

enum class GcmViolationKind { NonTwoDiagonal, PositiveOffDiagonal, AsymmetricZeroPattern };

struct GcmViolation {
  GcmViolationKind kind;
  int row;
  int col;
};

const char* to_string(GcmViolationKind kind);

// Lists every violated invariant of a candidate matrix.
class GcmValidationError : public Error {
 public:
  explicit GcmValidationError(std::vector<GcmViolation> violations);

  const std::vector<GcmViolation>& violations() const noexcept { return violations_; }
  bool has(GcmViolationKind kind) const;

 private:
  std::vector<GcmViolation> violations_;
};

class GeneralizedCartanMatrix {
 public:
  using Entries = std::vector<std::vector<std::int64_t>>;

  // Validates the invariants a_ii = 2, a_ij <= 0 (i != j), a_ij = 0 <=> a_ji = 0.
  // Throws GcmValidationError listing every violation, InvalidArgument when
  // the matrix is not square or labels have the wrong count.
  static GeneralizedCartanMatrix validate(const Entries& entries,
                                          std::vector<std::string> labels = {},
                                          std::string name = {});

  int rank() const noexcept { return n_; }
  std::int64_t operator()(int i, int j) const noexcept {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }
  Entries entries() const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Diagram name such as "E9", or a derived descriptor; may be empty.
  const std::string& name() const noexcept { return name_; }

  // Nodes adjacent to i (a_ij != 0, j != i), ascending.
  const std::vector<int>& neighbours(int i) const { return neighbours_[i]; }

  bool operator==(const GeneralizedCartanMatrix& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
  }

 private:
  GeneralizedCartanMatrix() = default;

  int n_ = 0;
  std::vector<std::int64_t> entries_;
  std::vector<std::string> labels_;
  std::string name_;
  std::vector<std::vector<int>> neighbours_;
};

using Gcm = GeneralizedCartanMatrix;

// Bourbaki labels for A, D and E_6..E_8; for E_n, n >= 9, node m joins node m-1.
Gcm build_named(const DynkinName& name);
Gcm build_named(std::string_view name);

Gcm validate(const Gcm::Entries& entries);

bool is_symmetric(const Gcm& g);
bool is_simply_laced(const Gcm& g);

// Positive definiteness via exact leading principal minors. Throws
// InvalidArgument for non-symmetric input.
bool is_finite_type(const Gcm& g);

// Leading principal minors det(A[0..k, 0..k]) for k = 1..n, exact (Bareiss).
std::vector<std::int64_t> leading_principal_minors(const Gcm& g);
std::int64_t determinant(const Gcm& g);

// Principal submatrix on rows/columns J, labels preserved.
Gcm subdiagram(const Gcm& g, const NodeSubset& J);

// Text format: first line n, then n rows of n integers, optionally a
// trailing "labels: a b c" line.
Gcm parse_gcm_text(std::string_view text);
std::string to_gcm_text(const Gcm& g);

}  // namespace kmcells
