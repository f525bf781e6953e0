#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmcells/error.hpp"
#include "kmcells/flag.hpp"

namespace kmcells {

enum class Countable { Yes, Unknown };

// Finitely generated abelian group Z^r + C_{m1} + ... + C_{mk}, or Unknown.
// Torsion orders are kept sorted ascending; C_1 summands are dropped.
class GroupDescriptor {
 public:
  enum class Kind { Trivial, Free, Cyclic, DirectSum, Unknown };

  GroupDescriptor() = default;  // trivial

  static GroupDescriptor trivial() { return {}; }
  static GroupDescriptor free(int rank);
  static GroupDescriptor integers() { return free(1); }
  static GroupDescriptor cyclic(std::uint64_t order);
  static GroupDescriptor direct_sum(const std::vector<GroupDescriptor>& parts);
  static GroupDescriptor unknown(Countable countable = Countable::Unknown);

  // Accepts the forms produced by str(): "1", "Z", "Z+Z", "C2", "Z+C2+C4", "?".
  static GroupDescriptor parse(std::string_view text);

  Kind kind() const noexcept;
  bool is_trivial() const noexcept { return kind() == Kind::Trivial; }
  bool is_unknown() const noexcept { return unknown_; }
  int free_rank() const noexcept { return rank_; }
  const std::vector<std::uint64_t>& torsion() const noexcept { return torsion_; }
  Countable countable() const noexcept { return countable_; }
  GroupDescriptor with_countable(Countable c) const;

  std::string str() const;

  bool operator==(const GroupDescriptor&) const = default;

 private:
  bool unknown_ = false;
  int rank_ = 0;
  std::vector<std::uint64_t> torsion_;
  Countable countable_ = Countable::Yes;
};

const char* to_string(Countable c);

// pi_k for k = 0..kmax; degree 0 is the set of path components.
struct HomotopyProfile {
  std::string space_name;
  std::vector<GroupDescriptor> groups;

  int kmax() const { return static_cast<int>(groups.size()) - 1; }
  const GroupDescriptor& at(int k) const;
  bool operator==(const HomotopyProfile&) const = default;
};

// A fibration fiber -> total -> base, admitted as an axiom with its
// justification. All three profiles share kmax.
struct FibrationRecord {
  HomotopyProfile fiber;
  HomotopyProfile total;
  HomotopyProfile base;
  std::string justification;
};

FibrationRecord make_fibration(HomotopyProfile fiber, HomotopyProfile total, HomotopyProfile base,
                               std::string justification);

class OutOfStableRange : public Error {
 public:
  OutOfStableRange(int n, int k, std::optional<GroupDescriptor> exception);
  // Stored unstable value for (n, k), if one is recorded.
  const std::optional<GroupDescriptor>& exception() const noexcept { return exception_; }

 private:
  std::optional<GroupDescriptor> exception_;
};

class UnknownEntry : public Error {
 public:
  explicit UnknownEntry(int degree);
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

// pi_k of the stable orthogonal group.
GroupDescriptor bott_pi_O(int k);

// pi_k(SO(n)) in the stable range n > k + 1 (k = 0 gives the trivial group).
// Throws OutOfStableRange otherwise.
GroupDescriptor stable_pi_SO(int n, int k);

// Recorded values of pi_k(O(n)) outside the stable range. Only
// pi_15(O(16)) = Z + Z is stored.
std::optional<GroupDescriptor> unstable_pi_O(int n, int k);

// Profiles of O(n) and SO(n) through kmax; requires n > kmax + 1.
HomotopyProfile orthogonal_profile(int n, int kmax);
HomotopyProfile special_orthogonal_profile(int n, int kmax);

// S^m through kmax < m: trivial in every tracked degree.
HomotopyProfile sphere_profile(int m, int kmax);

// pi_k(total) from the exact sequence pi_{k+1}(base) -> pi_k(fiber) ->
// pi_k(total) -> pi_k(base): the fiber's group when both flanks are trivial,
// Unknown otherwise.
GroupDescriptor sandwich_deduce(const FibrationRecord& f, int k);

Countable countability_propagate(Countable fiber, Countable base);

struct TraceLine {
  std::optional<int> degree;
  std::string result;  // descriptor text, or the step summary for non-degree lines
  std::string rule;
  std::string citation;

  // "DEGREE k: <result> BY <rule> CITING <citation>" or
  // "STEP: <result> BY <rule> CITING <citation>".
  std::string str() const;
};

struct InductionStep {
  int from_rank;  // m in E_m -> E_{m+1}
  CellTable exceptional;
  CellTable classical;
  ComparisonResult comparison;
};

// An induction step whose cell tables disagree. Carries the trace emitted up
// to and including the failed comparison.
class ComparisonFailed : public Error {
 public:
  ComparisonFailed(InductionStep step, std::vector<TraceLine> trace);
  const InductionStep& step() const noexcept { return step_; }
  const std::vector<TraceLine>& trace() const noexcept { return trace_; }

 private:
  InductionStep step_;
  std::vector<TraceLine> trace_;
};

struct EnDeduction {
  HomotopyProfile profile;
  std::vector<InductionStep> steps;
  std::vector<TraceLine> trace;
};

// Cell dimension through which each induction step must match.
inline constexpr int kEnComparisonDim = 7;
// Highest degree the E_n induction reports.
inline constexpr int kEnMaxDegree = 6;

struct EnOptions {
  int kmax = kEnMaxDegree;
  EnumerationLimits limits = {};
};

// pi_k(K(E_n)) for k <= kmax <= 6 by induction from K(E_8) = SO(16). Each
// step m -> m+1 compares E_{m+1}/E_m with A_m/A_{m-1} cells and needs a match
// through dimension 7 plus isomorphic supports; otherwise ComparisonFailed.
EnDeduction en_profile(int n, const EnOptions& options = {});

struct TowerStage {
  std::string stage_name;
  int killed_degree;
  GroupDescriptor killed_group;
  HomotopyProfile resulting_profile;
};

struct WhiteheadTower {
  std::vector<TowerStage> stages;
  // Degrees above this were not examined.
  int truncated_at = 0;
};

// Kills the lowest non-trivial degree at each stage. Throws UnknownEntry at
// the first Unknown degree met.
WhiteheadTower whitehead_tower(const HomotopyProfile& p);

std::string stage_name_for_degree(int k);

}  // namespace kmcells
