#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "kmcells/error.hpp"
#include "kmcells/gcm.hpp"

namespace kmcells {

// Square integer matrix, column-major so that column j (the image of the
// simple root alpha_j) is contiguous.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  static IntMatrix identity(int n);

  int size() const noexcept { return n_; }
  std::int64_t& operator()(int row, int col) { return a_[static_cast<std::size_t>(col) * n_ + row]; }
  std::int64_t operator()(int row, int col) const {
    return a_[static_cast<std::size_t>(col) * n_ + row];
  }
  std::span<const std::int64_t> column(int j) const {
    return {a_.data() + static_cast<std::size_t>(j) * n_, static_cast<std::size_t>(n_)};
  }
  std::span<std::int64_t> column(int j) {
    return {a_.data() + static_cast<std::size_t>(j) * n_, static_cast<std::size_t>(n_)};
  }
  const std::vector<std::int64_t>& data() const noexcept { return a_; }

  bool operator==(const IntMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept;
};

// Checked-arithmetic determinant (Bareiss with pivoting).
std::int64_t determinant(const IntMatrix& m);

// Coordinates over the simple roots.
using RootVector = std::vector<std::int64_t>;

enum class RootSign { Positive, Negative };

class MixedSignError : public Error {
 public:
  explicit MixedSignError(const std::string& message) : Error("MixedSign", message) {}
};

// Positive iff all coordinates >= 0, Negative iff all <= 0 (not all zero).
// Throws MixedSignError otherwise: such a vector is not a real root.
RootSign root_sign(std::span<const std::int64_t> coords);

// Element of the Weyl group W(A) acting on the root lattice. Column j of the
// matrix holds w(alpha_j). Carries its length and lexicographically least
// reduced word (0-based generator indices).
class WeylElement {
 public:
  const Gcm& cartan() const noexcept { return *cartan_; }
  const std::shared_ptr<const Gcm>& cartan_ptr() const noexcept { return cartan_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  int length() const noexcept { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const noexcept { return word_; }
  int rank() const noexcept { return matrix_.size(); }

  // w(alpha_j).
  std::span<const std::int64_t> image(int j) const { return matrix_.column(j); }
  // i is a right descent iff w(alpha_i) is negative.
  bool has_right_descent(int i) const;
  bool is_identity() const;

  bool operator==(const WeylElement& other) const { return matrix_ == other.matrix_; }

 private:
  friend class WeylElementFactory;
  WeylElement(std::shared_ptr<const Gcm> g, IntMatrix m, std::vector<int> word)
      : cartan_(std::move(g)), matrix_(std::move(m)), word_(std::move(word)) {}

  std::shared_ptr<const Gcm> cartan_;
  IntMatrix matrix_;
  std::vector<int> word_;
};

struct CanonicalWord {
  std::vector<int> word;
  int length = 0;
};

// Reflection convention: s_i(alpha_j) = alpha_j - a_ij alpha_i.
WeylElement identity_element(const Gcm& g);
WeylElement simple_reflection(const Gcm& g, int i);

// Element for a word of generator indices (need not be reduced).
WeylElement element_from_word(const Gcm& g, std::span<const int> word);

// Exact products. Length and word are recomputed, never assumed additive.
// Throws InvalidArgument for elements over different matrices and
// OverflowError on 64-bit overflow.
WeylElement multiply(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& a);

// Lexicographically least reduced word of the element with this matrix. The
// first letter is the smallest left descent; left descents of w are found as
// right descents of w^-1, stripped one at a time.
CanonicalWord canonical_word(const Gcm& g, const IntMatrix& m);
CanonicalWord canonical_word(const WeylElement& w);

bool is_minimal_rep(const WeylElement& w, const NodeSubset& J);

struct EnumerationLimits {
  std::size_t max_elements = 10'000'000;
};

// Elements grouped by length 0..truncation, each level sorted by word.
struct LengthLevels {
  std::vector<std::vector<WeylElement>> by_length;
  int truncation = 0;

  std::vector<std::uint64_t> sizes() const;
  std::size_t total() const;
};

// Breadth-first expansion w -> w s_i over length-increasing products,
// deduplicated by matrix.
LengthLevels enumerate_by_length(const Gcm& g, int max_length, EnumerationLimits limits = {});

std::vector<std::uint64_t> growth_series(const Gcm& g, int max_length,
                                         EnumerationLimits limits = {});

// Minimal length representatives of W / W_J, expanded by left multiplication
// w -> s_i w restricted to minimal representatives.
LengthLevels minimal_coset_reps(const Gcm& g, const NodeSubset& J, int max_length,
                                EnumerationLimits limits = {});

}  // namespace kmcells
