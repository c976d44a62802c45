#ifndef CURVEDIM_ERRORS_HPP
#define CURVEDIM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvedim {

// Failure while reading one of the text formats. `line` is 1-based,
// 0 when no line is attributable.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg, std::size_t line = 0)
      : std::runtime_error(msg), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A seeded randomized search ran out of attempts.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// replace_node: every fundamental polynomial of the node is divisible by
// the target curve, so the replacement lemma does not apply.
class ReplacementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace curvedim

#endif  // CURVEDIM_ERRORS_HPP
