#include "kmcells/weyl.hpp"

#include <algorithm>
#include <unordered_map>

#include "checked.hpp"

namespace kmcells {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_neg;
using detail::checked_sub;

// --- IntMatrix --------------------------------------------------------------

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : m.data()) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::int64_t determinant(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> rows(m.size(), std::vector<std::int64_t>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) rows[i][j] = m(i, j);
  return detail::bareiss_det(std::move(rows));
}

RootSign root_sign(std::span<const std::int64_t> coords) {
  bool pos = false, neg = false;
  for (auto c : coords) {
    pos |= c > 0;
    neg |= c < 0;
  }
  if (pos && !neg) return RootSign::Positive;
  if (neg && !pos) return RootSign::Negative;
  std::string text = "(";
  for (std::size_t k = 0; k < coords.size(); ++k)
    text += (k ? "," : "") + std::to_string(coords[k]);
  throw MixedSignError("vector " + text + ") is not a real root");
}

// --- reflection actions -----------------------------------------------------

namespace {

// m <- m s_i : column k picks up -a_ik times column i, column i flips sign.
void right_reflect(const Gcm& g, IntMatrix& m, int i) {
  const int n = m.size();
  for (int k : g.neighbours(i)) {
    const auto a = g(i, k);
    for (int r = 0; r < n; ++r) m(r, k) = checked_sub(m(r, k), checked_mul(a, m(r, i)));
  }
  for (int r = 0; r < n; ++r) m(r, i) = checked_neg(m(r, i));
}

// m <- s_i m : only row i changes.
void left_reflect(const Gcm& g, IntMatrix& m, int i) {
  const int n = m.size();
  for (int c = 0; c < n; ++c) {
    std::int64_t v = checked_neg(m(i, c));
    for (int k : g.neighbours(i)) v = checked_sub(v, checked_mul(g(i, k), m(k, c)));
    m(i, c) = v;
  }
}

bool column_negative(const IntMatrix& m, int j) {
  return root_sign(m.column(j)) == RootSign::Negative;
}

int smallest_right_descent(const IntMatrix& m) {
  for (int i = 0; i < m.size(); ++i)
    if (column_negative(m, i)) return i;
  return -1;
}

// Strips smallest right descents until the identity is reached; returns the
// stripped letters in order (m = s_{k} ... s_{2} s_{1} for letters 1..k).
std::vector<int> strip_right_descents(const Gcm& g, IntMatrix m) {
  constexpr std::size_t kMaxSteps = std::size_t{1} << 24;
  std::vector<int> letters;
  for (int i = smallest_right_descent(m); i >= 0; i = smallest_right_descent(m)) {
    if (letters.size() == kMaxSteps)
      throw InvalidArgument("descent stripping did not terminate; not a Weyl group element");
    right_reflect(g, m, i);
    letters.push_back(i);
  }
  if (m != IntMatrix::identity(m.size()))
    throw InvalidArgument("matrix is not an element of the Weyl group");
  return letters;
}

void check_index(const Gcm& g, int i) {
  if (i < 0 || i >= g.rank())
    throw IndexOutOfRange("generator " + std::to_string(i + 1) + " outside rank " +
                          std::to_string(g.rank()));
}

}  // namespace

class WeylElementFactory {
 public:
  static WeylElement make(std::shared_ptr<const Gcm> g, IntMatrix m, std::vector<int> word) {
    return WeylElement(std::move(g), std::move(m), std::move(word));
  }
};

bool WeylElement::has_right_descent(int i) const {
  check_index(*cartan_, i);
  return column_negative(matrix_, i);
}

bool WeylElement::is_identity() const { return word_.empty(); }

CanonicalWord canonical_word(const Gcm& g, const IntMatrix& m) {
  if (m.size() != g.rank()) throw InvalidArgument("matrix size does not match rank");
  // m = s_{k}...s_{1}, so m^-1 = s_{1}...s_{k}.
  const auto letters = strip_right_descents(g, m);
  IntMatrix inv = IntMatrix::identity(g.rank());
  for (int i : letters) right_reflect(g, inv, i);
  // Right descents of m^-1 are the left descents of m.
  CanonicalWord out;
  out.word = strip_right_descents(g, std::move(inv));
  out.length = static_cast<int>(out.word.size());
  return out;
}

CanonicalWord canonical_word(const WeylElement& w) { return canonical_word(w.cartan(), w.matrix()); }

namespace {

WeylElement make_element(std::shared_ptr<const Gcm> g, IntMatrix m) {
  auto cw = canonical_word(*g, m);
  return WeylElementFactory::make(std::move(g), std::move(m), std::move(cw.word));
}

void check_same_group(const WeylElement& a, const WeylElement& b) {
  if (a.cartan_ptr() != b.cartan_ptr() && !(a.cartan() == b.cartan()))
    throw InvalidArgument("elements belong to different Weyl groups");
}

}  // namespace

WeylElement identity_element(const Gcm& g) {
  return WeylElementFactory::make(std::make_shared<const Gcm>(g), IntMatrix::identity(g.rank()), {});
}

WeylElement simple_reflection(const Gcm& g, int i) {
  check_index(g, i);
  IntMatrix m = IntMatrix::identity(g.rank());
  right_reflect(g, m, i);
  return WeylElementFactory::make(std::make_shared<const Gcm>(g), std::move(m), {i});
}

WeylElement element_from_word(const Gcm& g, std::span<const int> word) {
  IntMatrix m = IntMatrix::identity(g.rank());
  for (int i : word) {
    check_index(g, i);
    right_reflect(g, m, i);
  }
  return make_element(std::make_shared<const Gcm>(g), std::move(m));
}

WeylElement multiply(const WeylElement& a, const WeylElement& b) {
  check_same_group(a, b);
  const int n = a.rank();
  IntMatrix c(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const auto bkj = b.matrix()(k, j);
      if (bkj == 0) continue;
      for (int i = 0; i < n; ++i) c(i, j) = checked_add(c(i, j), checked_mul(a.matrix()(i, k), bkj));
    }
  return make_element(a.cartan_ptr(), std::move(c));
}

WeylElement inverse(const WeylElement& a) {
  IntMatrix inv = IntMatrix::identity(a.rank());
  for (auto it = a.word().rbegin(); it != a.word().rend(); ++it) right_reflect(a.cartan(), inv, *it);
  return make_element(a.cartan_ptr(), std::move(inv));
}

bool is_minimal_rep(const WeylElement& w, const NodeSubset& J) {
  for (int j : J.nodes()) {
    check_index(w.cartan(), j);
    if (root_sign(w.image(j)) != RootSign::Positive) return false;
  }
  return true;
}

// --- enumeration ------------------------------------------------------------

std::vector<std::uint64_t> LengthLevels::sizes() const {
  std::vector<std::uint64_t> out;
  for (const auto& level : by_length) out.push_back(level.size());
  return out;
}

std::size_t LengthLevels::total() const {
  std::size_t t = 0;
  for (const auto& level : by_length) t += level.size();
  return t;
}

namespace {

using LevelIndex = std::unordered_map<IntMatrix, std::size_t, IntMatrixHash>;

enum class Expansion { RightMultiply, LeftMultiplyMinimal };

LevelIndex index_level(const std::vector<WeylElement>& level) {
  LevelIndex index;
  index.reserve(level.size() * 2);
  for (std::size_t k = 0; k < level.size(); ++k) index.emplace(level[k].matrix(), k);
  return index;
}

// Shared breadth-first driver. Each new element receives its lexicographically
// least word as [i] + word(s_i w), where i is the smallest generator with s_i w
// on the previous level (lengths change by exactly one under s_i).
LengthLevels breadth_first(const Gcm& g, const NodeSubset& J, int max_length,
                           EnumerationLimits limits, Expansion mode) {
  if (max_length < 0) throw InvalidArgument("maximum length must be nonnegative");
  for (int j : J.nodes()) check_index(g, j);

  auto shared = std::make_shared<const Gcm>(g);
  const int n = g.rank();

  LengthLevels out;
  out.truncation = max_length;
  out.by_length.reserve(max_length + 1);
  out.by_length.push_back({WeylElementFactory::make(shared, IntMatrix::identity(n), {})});
  std::size_t total = 1;
  if (total > limits.max_elements) throw BudgetExceeded(-1, total, limits.max_elements);

  LevelIndex previous;  // level len - 1
  LevelIndex current = index_level(out.by_length[0]);

  auto minimal = [&](const IntMatrix& m) {
    for (int j : J.nodes())
      if (root_sign(m.column(j)) != RootSign::Positive) return false;
    return true;
  };

  for (int len = 0; len < max_length; ++len) {
    const auto& level = out.by_length[len];
    std::vector<IntMatrix> found;
    LevelIndex seen;
    for (const auto& w : level) {
      for (int i = 0; i < n; ++i) {
        IntMatrix m = w.matrix();
        if (mode == Expansion::RightMultiply) {
          if (column_negative(m, i)) continue;
          right_reflect(g, m, i);
        } else {
          left_reflect(g, m, i);
          if (!minimal(m) || previous.count(m)) continue;
        }
        if (seen.emplace(m, found.size()).second) {
          found.push_back(std::move(m));
          if (total + found.size() > limits.max_elements)
            throw BudgetExceeded(len, total + found.size(), limits.max_elements);
        }
      }
    }

    std::vector<WeylElement> next;
    next.reserve(found.size());
    for (auto& m : found) {
      std::vector<int> word;
      for (int i = 0; i < n && word.empty(); ++i) {
        IntMatrix t = m;
        left_reflect(g, t, i);
        auto it = current.find(t);
        if (it == current.end()) continue;
        const auto& suffix = level[it->second].word();
        word.reserve(suffix.size() + 1);
        word.push_back(i);
        word.insert(word.end(), suffix.begin(), suffix.end());
      }
      if (word.empty()) throw InvalidArgument("breadth-first invariant violated: no left descent");
      next.push_back(WeylElementFactory::make(shared, std::move(m), std::move(word)));
    }
    std::sort(next.begin(), next.end(),
              [](const WeylElement& a, const WeylElement& b) { return a.word() < b.word(); });

    total += next.size();
    previous = std::move(current);
    current = index_level(next);
    out.by_length.push_back(std::move(next));
  }
  return out;
}

}  // namespace

LengthLevels enumerate_by_length(const Gcm& g, int max_length, EnumerationLimits limits) {
  return breadth_first(g, {}, max_length, limits, Expansion::RightMultiply);
}

std::vector<std::uint64_t> growth_series(const Gcm& g, int max_length, EnumerationLimits limits) {
  return enumerate_by_length(g, max_length, limits).sizes();
}

LengthLevels minimal_coset_reps(const Gcm& g, const NodeSubset& J, int max_length,
                                EnumerationLimits limits) {
  return breadth_first(g, J, max_length, limits, Expansion::LeftMultiplyMinimal);
}

}  // namespace kmcells
