#ifndef FGC_ERRORS_HH
#define FGC_ERRORS_HH

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fgc {

/// Violated precondition on an argument (bad node ID, malformed set, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A compression family contains a pattern with fewer than three nodes.
class FamilyMemberTooSmall : public InvalidArgument {
 public:
  explicit FamilyMemberTooSmall(const std::string& pattern)
      : InvalidArgument("family member below minimum size: " + pattern) {}
};

/// Generator parameters that admit no instance.
class InfeasibleParameters : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A certificate that does not certify what it claims.
class InvalidWitness : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `position` is a 1-based line for edge lists and a
/// byte offset for JSON.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fgc

#endif
