#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kmcells {

// Base of every domain error raised by the library. `kind()` is the stable
// identifier written into structured (JSON) error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message)
      : Error("InvalidArgument", message) {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& message)
      : Error("IndexOutOfRange", message) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& message)
      : Error("Overflow", message) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

// Enumeration stopped because the element budget was exhausted.
// `depth_reached` is the last length level that was completed in full.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(int depth_reached, std::size_t elements, std::size_t budget)
      : Error("BudgetExceeded",
              "element budget " + std::to_string(budget) + " exceeded after " +
                  std::to_string(elements) + " elements; complete through length " +
                  std::to_string(depth_reached)),
        depth_reached_(depth_reached),
        elements_(elements) {}

  int depth_reached() const noexcept { return depth_reached_; }
  std::size_t elements() const noexcept { return elements_; }

 private:
  int depth_reached_;
  std::size_t elements_;
};

}  // namespace kmcells
