#ifndef GAMETOPO_ERRORS_H_
#define GAMETOPO_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gametopo {

// Malformed rank input: a rank vector that is not a dense ranking 1..k.
class InvalidRanking : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation defined only on strict (tie-free) games received a game with
// ties.
class NotStrict : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// make_tie asked to merge ranks that are not both present for the player.
class RankAbsent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// break_tie asked to split a value held by fewer than two cells.
class RankNotTied : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// No path exists using the permitted swap kinds.
class Unreachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Atlas construction could not satisfy its anchoring constraints. This is an
// implementation bug, never a consequence of user input.
class ConstructionInvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " +
                              std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gametopo

#endif  // GAMETOPO_ERRORS_H_
