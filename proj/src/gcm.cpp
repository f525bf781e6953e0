#include "kmcells/gcm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "checked.hpp"

namespace kmcells {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_int(std::string_view s, const char* what) {
  int value = 0;
  auto t = trim(s);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw ParseError(std::string("invalid ") + what + ": '" + t + "'");
  return value;
}

}  // namespace

// --- DynkinName -------------------------------------------------------------

DynkinName DynkinName::parse(std::string_view text) {
  auto t = trim(text);
  if (t.size() < 2) throw ParseError("invalid diagram name '" + t + "'");
  DynkinName name;
  switch (std::toupper(static_cast<unsigned char>(t[0]))) {
    case 'A': name.family = Family::A; break;
    case 'D': name.family = Family::D; break;
    case 'E': name.family = Family::E; break;
    default: throw ParseError("unsupported diagram family in '" + t + "'");
  }
  name.rank = parse_int(std::string_view(t).substr(1), "diagram rank");
  const int min_rank = name.family == Family::A ? 1 : name.family == Family::D ? 4 : 6;
  if (name.rank < min_rank)
    throw InvalidArgument("rank of " + t + " below family minimum " + std::to_string(min_rank));
  return name;
}

std::string DynkinName::str() const {
  const char letter = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
  return letter + std::to_string(rank);
}

// --- NodeSubset -------------------------------------------------------------

NodeSubset::NodeSubset(std::initializer_list<int> nodes) : NodeSubset(std::vector<int>(nodes)) {}

NodeSubset::NodeSubset(std::vector<int> nodes) : nodes_(std::move(nodes)) {
  for (int v : nodes_)
    if (v < 0) throw IndexOutOfRange("negative node index " + std::to_string(v));
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
}

NodeSubset NodeSubset::range(int first, int last) {
  std::vector<int> v;
  for (int i = first; i <= last; ++i) v.push_back(i);
  return NodeSubset(std::move(v));
}

NodeSubset NodeSubset::parse(std::string_view text) {
  auto t = trim(text);
  if (t.empty() || t == "none") return {};
  std::vector<int> nodes;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) {
      nodes.push_back(parse_int(item, "node index") - 1);
    } else {
      int lo = parse_int(std::string_view(item).substr(0, dash), "node range");
      int hi = parse_int(std::string_view(item).substr(dash + 1), "node range");
      if (hi < lo) throw ParseError("empty node range '" + trim(item) + "'");
      for (int i = lo; i <= hi; ++i) nodes.push_back(i - 1);
    }
  }
  for (int v : nodes)
    if (v < 0) throw IndexOutOfRange("node indices are 1-based");
  return NodeSubset(std::move(nodes));
}

bool NodeSubset::contains(int node) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), node);
}

std::string NodeSubset::str() const {
  std::string out;
  std::size_t i = 0;
  while (i < nodes_.size()) {
    std::size_t j = i;
    while (j + 1 < nodes_.size() && nodes_[j + 1] == nodes_[j] + 1) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(nodes_[i] + 1);
    if (j > i) out += '-' + std::to_string(nodes_[j] + 1);
    i = j + 1;
  }
  return out;
}

// --- validation -------------------------------------------------------------

const char* to_string(GcmViolationKind kind) {
  switch (kind) {
    case GcmViolationKind::NonTwoDiagonal: return "NonTwoDiagonal";
    case GcmViolationKind::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case GcmViolationKind::AsymmetricZeroPattern: return "AsymmetricZeroPattern";
  }
  return "?";
}

namespace {

std::string describe(const std::vector<GcmViolation>& violations) {
  std::string msg = "invalid generalized Cartan matrix:";
  for (const auto& v : violations) {
    msg += ' ';
    msg += to_string(v.kind);
    msg += "(" + std::to_string(v.row + 1) + "," + std::to_string(v.col + 1) + ")";
  }
  return msg;
}

}  // namespace

GcmValidationError::GcmValidationError(std::vector<GcmViolation> violations)
    : Error("InvalidGcm", describe(violations)), violations_(std::move(violations)) {}

bool GcmValidationError::has(GcmViolationKind kind) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [kind](const GcmViolation& v) { return v.kind == kind; });
}

Gcm Gcm::validate(const Entries& entries, std::vector<std::string> labels, std::string name) {
  const int n = static_cast<int>(entries.size());
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != n) throw InvalidArgument("matrix is not square");

  std::vector<GcmViolation> violations;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto a = entries[i][j];
      if (i == j) {
        if (a != 2) violations.push_back({GcmViolationKind::NonTwoDiagonal, i, j});
        continue;
      }
      if (a > 0) violations.push_back({GcmViolationKind::PositiveOffDiagonal, i, j});
      // Report each asymmetric pair once, at the position holding the zero.
      if (a == 0 && entries[j][i] != 0)
        violations.push_back({GcmViolationKind::AsymmetricZeroPattern, i, j});
    }
  }
  if (!violations.empty()) throw GcmValidationError(std::move(violations));

  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  } else if (static_cast<int>(labels.size()) != n) {
    throw InvalidArgument("expected " + std::to_string(n) + " labels, got " +
                          std::to_string(labels.size()));
  }

  Gcm g;
  g.n_ = n;
  g.entries_.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : entries) g.entries_.insert(g.entries_.end(), row.begin(), row.end());
  g.labels_ = std::move(labels);
  g.name_ = std::move(name);
  g.neighbours_.resize(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g(i, j) != 0) g.neighbours_[i].push_back(j);
  return g;
}

Gcm::Entries Gcm::entries() const {
  Entries out(n_, std::vector<std::int64_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

Gcm validate(const Gcm::Entries& entries) { return Gcm::validate(entries); }

// --- named families ---------------------------------------------------------

Gcm build_named(const DynkinName& name) {
  const int n = name.rank;
  std::vector<std::pair<int, int>> edges;  // 1-based
  switch (name.family) {
    case Family::A:
      if (n < 1) throw InvalidArgument("A_n requires n >= 1");
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      if (n < 4) throw InvalidArgument("D_n requires n >= 4");
      for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n);
      break;
    case Family::E:
      if (n < 6) throw InvalidArgument("E_n requires n >= 6");
      edges = {{1, 3}, {2, 4}, {3, 4}};
      for (int m = 5; m <= n; ++m) edges.emplace_back(m - 1, m);
      break;
  }
  Gcm::Entries a(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (auto [u, v] : edges) a[u - 1][v - 1] = a[v - 1][u - 1] = -1;
  return Gcm::validate(a, {}, name.str());
}

Gcm build_named(std::string_view name) { return build_named(DynkinName::parse(name)); }

// --- predicates -------------------------------------------------------------

bool is_symmetric(const Gcm& g) {
  for (int i = 0; i < g.rank(); ++i)
    for (int j = i + 1; j < g.rank(); ++j)
      if (g(i, j) != g(j, i)) return false;
  return true;
}

bool is_simply_laced(const Gcm& g) {
  for (int i = 0; i < g.rank(); ++i)
    for (int j = 0; j < g.rank(); ++j)
      if (i != j && g(i, j) != 0 && g(i, j) != -1) return false;
  return is_symmetric(g);
}

namespace {

// Fraction-free elimination without pivoting. Pivot k equals the (k+1)-th
// leading principal minor; stops at the first zero pivot.
std::vector<std::int64_t> bareiss_minors(const Gcm& g) {
  using detail::checked_mul;
  using detail::checked_sub;
  const int n = g.rank();
  auto m = g.entries();
  std::vector<std::int64_t> minors;
  std::int64_t prev = 1;
  for (int k = 0; k < n; ++k) {
    minors.push_back(m[k][k]);
    if (m[k][k] == 0) break;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j])) / prev;
    prev = m[k][k];
  }
  return minors;
}

}  // namespace

std::vector<std::int64_t> leading_principal_minors(const Gcm& g) {
  auto minors = bareiss_minors(g);
  if (static_cast<int>(minors.size()) == g.rank()) return minors;
  // A zero pivot was hit; compute the remaining minors directly.
  const auto full = g.entries();
  for (int k = static_cast<int>(minors.size()) + 1; k <= g.rank(); ++k) {
    Gcm::Entries block(k, std::vector<std::int64_t>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) block[i][j] = full[i][j];
    minors.push_back(detail::bareiss_det(std::move(block)));
  }
  return minors;
}

std::int64_t determinant(const Gcm& g) { return detail::bareiss_det(g.entries()); }

bool is_finite_type(const Gcm& g) {
  if (!is_symmetric(g))
    throw InvalidArgument("finite-type detection requires a symmetric matrix");
  for (auto m : bareiss_minors(g))
    if (m <= 0) return false;
  return true;
}

Gcm subdiagram(const Gcm& g, const NodeSubset& J) {
  for (int v : J.nodes())
    if (v >= g.rank())
      throw IndexOutOfRange("node " + std::to_string(v + 1) + " outside rank " +
                            std::to_string(g.rank()));
  const auto& idx = J.nodes();
  Gcm::Entries a(idx.size(), std::vector<std::int64_t>(idx.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    labels.push_back(g.labels()[idx[i]]);
    for (std::size_t j = 0; j < idx.size(); ++j) a[i][j] = g(idx[i], idx[j]);
  }
  std::string name = g.name().empty() ? std::string() : g.name() + "[" + J.str() + "]";
  if (idx.empty()) return Gcm::validate(a, {}, name);
  return Gcm::validate(a, std::move(labels), std::move(name));
}

// --- text format ------------------------------------------------------------

Gcm parse_gcm_text(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::stringstream ss{std::string(text)};
    std::string line;
    while (std::getline(ss, line)) {
      auto t = trim(line);
      if (!t.empty() && t[0] != '#') lines.push_back(t);
    }
  }
  if (lines.empty()) throw ParseError("empty matrix file");
  const int n = parse_int(lines[0], "rank");
  if (n < 0) throw ParseError("negative rank");
  if (static_cast<int>(lines.size()) < n + 1)
    throw ParseError("expected " + std::to_string(n) + " matrix rows");

  Gcm::Entries a(n);
  for (int i = 0; i < n; ++i) {
    std::stringstream row(lines[i + 1]);
    std::string tok;
    while (row >> tok) a[i].push_back(parse_int(tok, "matrix entry"));
    if (static_cast<int>(a[i].size()) != n)
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(a[i].size()) +
                       " entries, expected " + std::to_string(n));
  }
  std::vector<std::string> labels;
  for (std::size_t k = n + 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.rfind("labels:", 0) != 0 || !labels.empty())
      throw ParseError("unexpected trailing line '" + line + "'");
    std::stringstream ss(line.substr(7));
    std::string tok;
    while (ss >> tok) labels.push_back(tok);
  }
  return Gcm::validate(a, std::move(labels));
}

std::string to_gcm_text(const Gcm& g) {
  std::ostringstream out;
  out << g.rank() << '\n';
  for (int i = 0; i < g.rank(); ++i) {
    for (int j = 0; j < g.rank(); ++j) out << (j ? " " : "") << g(i, j);
    out << '\n';
  }
  out << "labels:";
  for (const auto& l : g.labels()) out << ' ' << l;
  out << '\n';
  return out.str();
}

}  // namespace kmcells
