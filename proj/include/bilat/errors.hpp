#pragma once

#include <stdexcept>
#include <string>

namespace bilat {

// Bad input: syntax errors, wrong-kind constants, malformed interpretation
// files. CLI exit code 1.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string msg, int line, int col)
      : std::runtime_error(line > 0 ? std::to_string(line) + ":" + std::to_string(col) +
                                          ": " + msg
                                    : msg),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// A configured ceiling was exceeded: iteration fuse, enumeration size,
// oracle size. CLI exit code 2.
class limit_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural contract was violated: base mismatch, non-literal negation on
// a pseudo-evaluation path, monotonicity breach inside a fixpoint engine,
// route divergence. CLI exit code 3.
class invariant_error : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace bilat
