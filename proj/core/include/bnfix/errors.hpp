#pragma once

#include <stdexcept>
#include <string>

namespace bnfix {

// Requested exact computation exceeds its feasibility bound and the caller
// did not pass force=true.
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation precondition does not hold (e.g. requesting a tree word on a
// digraph that is not a loop-full tree).
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A synthesizer was given a network (or family member) with no fixing word.
class not_fixable_error : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

// Malformed input text. line/column are 1-based; 0 means "not applicable".
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, int line = 0, int column = 0)
      : std::runtime_error(line > 0 ? std::to_string(line) + ":" +
                                          std::to_string(column) + ": " + msg
                                    : msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace bnfix
