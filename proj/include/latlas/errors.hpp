#pragma once

#include <stdexcept>
#include <string>

namespace latlas {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (group files, cycle notation, JSON documents).
/// Carries a 1-based line number when it refers to a position in a file.
class parse_error : public error {
 public:
  explicit parse_error(const std::string& what, int line = 0)
      : error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An operation was asked to enumerate past one of the configured caps.
class cap_exceeded : public error {
 public:
  explicit cap_exceeded(const std::string& what) : error(what) {}
};

/// A checkpoint does not belong to the ambient group it was restored against.
class checkpoint_mismatch : public error {
 public:
  explicit checkpoint_mismatch(const std::string& what) : error(what) {}
};

}  // namespace latlas
