#include "kmcells/homotopy.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace kmcells {

namespace {

constexpr const char* kCiteBott =
    "Bott periodicity: pi_k(O) = C2 for k = 0,1 mod 8, Z for k = 3,7 mod 8, trivial otherwise";
constexpr const char* kCiteStable =
    "stability: pi_k(O(n)) does not depend on n once n > k+1 (fibration O(n-1) -> O(n) -> S^(n-1))";
constexpr const char* kCiteE8 = "K(E8) is SO(16), the maximal compact subgroup of split E8";
constexpr const char* kCiteCells =
    "Bruhat decomposition of G/P_J is a CW decomposition with one cell of dimension l(w) for each "
    "minimal coset representative w in W^J";
constexpr const char* kCiteSphere =
    "K(A_m)/K(A_(m-1)) = SO(m+1)/SO(m) = S^m; cell structures agreeing through dimension 7 give "
    "K(E_(m+1))/K(E_m) the homotopy of S^m in degrees <= 7 (admitted axiom)";
constexpr const char* kCiteFibration =
    "K(E_m) -> K(E_(m+1)) -> K(E_(m+1))/K(E_m) is a Hurewicz fibration (quotient by a "
    "Zariski-closed subgroup of a k_omega group), giving a long exact homotopy sequence";
constexpr const char* kCiteSandwich =
    "exactness of 1 = pi_(k+1)(base) -> pi_k(fiber) -> pi_k(total) -> pi_k(base) = 1 forces "
    "pi_k(total) = pi_k(fiber)";
constexpr const char* kCiteCountable =
    "homomorphism theorem: pi_k(total) modulo the image of pi_k(fiber) embeds in pi_k(base)";

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

// --- GroupDescriptor --------------------------------------------------------

GroupDescriptor GroupDescriptor::free(int rank) {
  if (rank < 0) throw InvalidArgument("negative free rank");
  GroupDescriptor g;
  g.rank_ = rank;
  return g;
}

GroupDescriptor GroupDescriptor::cyclic(std::uint64_t order) {
  if (order == 0) throw InvalidArgument("cyclic group of order 0; use free(1) for Z");
  GroupDescriptor g;
  if (order > 1) g.torsion_.push_back(order);
  return g;
}

GroupDescriptor GroupDescriptor::direct_sum(const std::vector<GroupDescriptor>& parts) {
  GroupDescriptor g;
  bool any_unknown = false;
  Countable countable = Countable::Yes;
  for (const auto& p : parts) {
    if (p.unknown_) {
      any_unknown = true;
      if (p.countable_ == Countable::Unknown) countable = Countable::Unknown;
      continue;
    }
    g.rank_ += p.rank_;
    g.torsion_.insert(g.torsion_.end(), p.torsion_.begin(), p.torsion_.end());
  }
  if (any_unknown) return unknown(countable);
  std::sort(g.torsion_.begin(), g.torsion_.end());
  return g;
}

GroupDescriptor GroupDescriptor::unknown(Countable countable) {
  GroupDescriptor g;
  g.unknown_ = true;
  g.countable_ = countable;
  return g;
}

GroupDescriptor GroupDescriptor::parse(std::string_view text) {
  const auto t = trim(text);
  if (t == "?") return unknown();
  if (t == "1" || t == "0" || t == "trivial") return trivial();
  std::vector<GroupDescriptor> parts;
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    tok = trim(tok);
    if (tok == "Z") {
      parts.push_back(integers());
    } else if (tok.size() > 2 && tok.rfind("Z^", 0) == 0) {
      int r = 0;
      auto [p, ec] = std::from_chars(tok.data() + 2, tok.data() + tok.size(), r);
      if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError("bad group '" + tok + "'");
      parts.push_back(free(r));
    } else if (tok.size() > 1 && tok[0] == 'C') {
      std::uint64_t m = 0;
      auto [p, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), m);
      if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError("bad group '" + tok + "'");
      parts.push_back(cyclic(m));
    } else {
      throw ParseError("bad group descriptor '" + t + "'");
    }
  }
  return direct_sum(parts);
}

GroupDescriptor::Kind GroupDescriptor::kind() const noexcept {
  if (unknown_) return Kind::Unknown;
  if (rank_ == 0 && torsion_.empty()) return Kind::Trivial;
  if (torsion_.empty()) return Kind::Free;
  if (rank_ == 0 && torsion_.size() == 1) return Kind::Cyclic;
  return Kind::DirectSum;
}

GroupDescriptor GroupDescriptor::with_countable(Countable c) const {
  GroupDescriptor g = *this;
  if (unknown_) g.countable_ = c;
  return g;
}

std::string GroupDescriptor::str() const {
  if (unknown_) return "?";
  if (rank_ == 0 && torsion_.empty()) return "1";
  std::string out;
  for (int r = 0; r < rank_; ++r) out += out.empty() ? "Z" : "+Z";
  for (auto m : torsion_) out += (out.empty() ? "C" : "+C") + std::to_string(m);
  return out;
}

const char* to_string(Countable c) { return c == Countable::Yes ? "yes" : "unknown"; }

// --- profiles ---------------------------------------------------------------

const GroupDescriptor& HomotopyProfile::at(int k) const {
  if (k < 0 || k > kmax())
    throw IndexOutOfRange("degree " + std::to_string(k) + " outside tracked range 0.." +
                          std::to_string(kmax()) + " of " + space_name);
  return groups[k];
}

FibrationRecord make_fibration(HomotopyProfile fiber, HomotopyProfile total, HomotopyProfile base,
                               std::string justification) {
  if (fiber.kmax() != total.kmax() || fiber.kmax() != base.kmax())
    throw InvalidArgument("fibration profiles must share kmax");
  if (justification.empty()) throw InvalidArgument("fibration record needs a justification");
  return {std::move(fiber), std::move(total), std::move(base), std::move(justification)};
}

OutOfStableRange::OutOfStableRange(int n, int k, std::optional<GroupDescriptor> exception)
    : Error("OutOfStableRange",
            "pi_" + std::to_string(k) + "(SO(" + std::to_string(n) + ")) is outside the stable range n > k+1" +
                (exception ? "; recorded unstable value " + exception->str() : std::string())),
      exception_(std::move(exception)) {}

UnknownEntry::UnknownEntry(int degree)
    : Error("UnknownEntry", "profile entry in degree " + std::to_string(degree) + " is unknown"),
      degree_(degree) {}

ComparisonFailed::ComparisonFailed(InductionStep step, std::vector<TraceLine> trace)
    : Error("ComparisonFailed",
            "cells of E" + std::to_string(step.from_rank + 1) + "/E" + std::to_string(step.from_rank) +
                " and A" + std::to_string(step.from_rank) + "/A" + std::to_string(step.from_rank - 1) +
                " do not match through dimension " + std::to_string(kEnComparisonDim) + ": " +
                step.comparison.str() +
                (step.comparison.supports_isomorphic ? "" : ", supports not isomorphic")),
      step_(std::move(step)),
      trace_(std::move(trace)) {}

GroupDescriptor bott_pi_O(int k) {
  if (k < 0) throw InvalidArgument("negative homotopy degree");
  switch (k % 8) {
    case 0:
    case 1: return GroupDescriptor::cyclic(2);
    case 3:
    case 7: return GroupDescriptor::integers();
    default: return GroupDescriptor::trivial();
  }
}

std::optional<GroupDescriptor> unstable_pi_O(int n, int k) {
  if (n == 16 && k == 15) return GroupDescriptor::free(2);
  return std::nullopt;
}

GroupDescriptor stable_pi_SO(int n, int k) {
  if (k < 0 || n < 1) throw InvalidArgument("need n >= 1 and k >= 0");
  if (k == 0) return GroupDescriptor::trivial();
  if (n > k + 1) return bott_pi_O(k);
  throw OutOfStableRange(n, k, unstable_pi_O(n, k));
}

HomotopyProfile special_orthogonal_profile(int n, int kmax) {
  HomotopyProfile p{"SO(" + std::to_string(n) + ")", {}};
  for (int k = 0; k <= kmax; ++k) p.groups.push_back(stable_pi_SO(n, k));
  return p;
}

HomotopyProfile orthogonal_profile(int n, int kmax) {
  HomotopyProfile p = special_orthogonal_profile(n, kmax);
  p.space_name = "O(" + std::to_string(n) + ")";
  if (kmax >= 0) p.groups[0] = GroupDescriptor::cyclic(2);
  return p;
}

HomotopyProfile sphere_profile(int m, int kmax) {
  if (m < 2) throw InvalidArgument("sphere dimension must be at least 2");
  if (kmax < 0 || kmax >= m)
    throw InvalidArgument("only degrees below " + std::to_string(m) + " are modelled for S^" +
                          std::to_string(m));
  return {"S^" + std::to_string(m), std::vector<GroupDescriptor>(kmax + 1)};
}

GroupDescriptor sandwich_deduce(const FibrationRecord& f, int k) {
  if (k < 0 || k + 1 > f.base.kmax())
    throw IndexOutOfRange("sandwich at degree " + std::to_string(k) + " needs base degrees " +
                          std::to_string(k) + " and " + std::to_string(k + 1));
  const auto& low = f.base.at(k);
  const auto& high = f.base.at(k + 1);
  if (low.is_trivial() && high.is_trivial()) return f.fiber.at(k);
  return GroupDescriptor::unknown(countability_propagate(f.fiber.at(k).countable(), low.countable()));
}

Countable countability_propagate(Countable fiber, Countable base) {
  return fiber == Countable::Yes && base == Countable::Yes ? Countable::Yes : Countable::Unknown;
}

std::string TraceLine::str() const {
  std::string head = degree ? "DEGREE " + std::to_string(*degree) : std::string("STEP");
  return head + ": " + result + " BY " + rule + " CITING \"" + citation + "\"";
}

// --- E_n induction ----------------------------------------------------------

namespace {

std::string counts_text(const CellTable& t) {
  std::string s = "[";
  for (std::size_t d = 0; d < t.counts.size(); ++d) s += (d ? "," : "") + std::to_string(t.counts[d]);
  return s + "]";
}

std::string en_name(int m) { return "K(E" + std::to_string(m) + ")"; }

}  // namespace

EnDeduction en_profile(int n, const EnOptions& options) {
  if (n < 8) throw InvalidArgument("the E_n induction starts at n = 8");
  if (options.kmax < 0 || options.kmax > kEnMaxDegree)
    throw InvalidArgument("E_n profiles are tracked only through degree " + std::to_string(kEnMaxDegree));
  const int kmax = options.kmax;

  EnDeduction out;
  auto& trace = out.trace;

  trace.push_back({std::nullopt, "K(E8) = SO(16)", "base-case", kCiteE8});
  HomotopyProfile current = special_orthogonal_profile(16, kmax);
  current.space_name = en_name(8);
  for (int k = 0; k <= kmax; ++k)
    trace.push_back({k, current.groups[k].str() + " for K(E8)", k == 0 ? "connected" : "stable-range",
                     k == 0 ? kCiteE8 : std::string(kCiteStable) + "; " + kCiteBott});

  for (int m = 8; m < n; ++m) {
    InductionStep step;
    step.from_rank = m;
    step.exceptional = cell_table(build_named(DynkinName{Family::E, m + 1}), NodeSubset::range(0, m - 1),
                                  kEnComparisonDim, options.limits);
    step.classical = cell_table(build_named(DynkinName{Family::A, m}), NodeSubset::range(0, m - 2),
                                kEnComparisonDim, options.limits);
    step.comparison = compare_tables(step.exceptional, step.classical);

    const std::string label = "E" + std::to_string(m + 1) + "/E" + std::to_string(m) + " vs A" +
                              std::to_string(m) + "/A" + std::to_string(m - 1);
    trace.push_back({std::nullopt,
                     label + " cells " + counts_text(step.exceptional) + " vs " +
                         counts_text(step.classical) + ": " + step.comparison.str() +
                         (step.comparison.supports_isomorphic ? ", supports isomorphic"
                                                              : ", supports not isomorphic"),
                     "cell-comparison", kCiteCells});
    const bool matched = step.comparison.verdict == Verdict::MatchThrough &&
                         step.comparison.dimension == kEnComparisonDim &&
                         step.comparison.supports_isomorphic;
    if (!matched) throw ComparisonFailed(std::move(step), std::move(trace));

    // The base is modelled through degree kmax + 1, which the flank at kmax needs.
    const int tracked = kmax + 1;
    HomotopyProfile base = sphere_profile(m, tracked);
    base.space_name = en_name(m + 1) + "/" + en_name(m);
    trace.push_back({std::nullopt, base.space_name + " has the homotopy of S^" + std::to_string(m) +
                                       " through degree " + std::to_string(tracked),
                     "sphere-comparison", kCiteSphere});

    HomotopyProfile fiber = current;
    fiber.groups.push_back(GroupDescriptor::unknown());
    HomotopyProfile total{en_name(m + 1), std::vector<GroupDescriptor>(tracked + 1, GroupDescriptor::unknown())};
    const auto fibration = make_fibration(fiber, total, base, kCiteFibration);
    trace.push_back({std::nullopt, fiber.space_name + " -> " + total.space_name + " -> " + base.space_name,
                     "fibration-axiom", fibration.justification});

    HomotopyProfile next{en_name(m + 1), {}};
    for (int k = 0; k <= kmax; ++k) {
      const auto g = sandwich_deduce(fibration, k);
      trace.push_back({k, g.str() + " for " + next.space_name, "sandwich", kCiteSandwich});
      trace.push_back({k, std::string("countable=") + to_string(countability_propagate(
                                                          fiber.at(k).countable(), base.at(k).countable())),
                       "countability", kCiteCountable});
      next.groups.push_back(g);
    }
    out.steps.push_back(std::move(step));
    current = std::move(next);
  }
  out.profile = std::move(current);
  return out;
}

// --- Whitehead towers -------------------------------------------------------

std::string stage_name_for_degree(int k) {
  switch (k) {
    case 0: return "connected cover";
    case 1: return "Spin-stage";
    case 3: return "String-stage";
    default: return "stage " + std::to_string(k);
  }
}

WhiteheadTower whitehead_tower(const HomotopyProfile& p) {
  WhiteheadTower tower;
  tower.truncated_at = p.kmax();
  HomotopyProfile current = p;
  for (int k = 0; k <= p.kmax(); ++k) {
    const auto& g = current.groups[k];
    if (g.is_unknown()) throw UnknownEntry(k);
    if (g.is_trivial()) continue;
    TowerStage stage;
    stage.stage_name = stage_name_for_degree(k);
    stage.killed_degree = k;
    stage.killed_group = g;
    current.groups[k] = GroupDescriptor::trivial();
    current.space_name = stage.stage_name + " of " + p.space_name;
    stage.resulting_profile = current;
    tower.stages.push_back(std::move(stage));
  }
  return tower;
}

}  // namespace kmcells
