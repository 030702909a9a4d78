#pragma once

#include <stdexcept>
#include <string>

namespace media {

// Bad ids, violated preconditions, malformed values.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation needs structure the object does not carry (e.g. reverse pairing).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed external input; `where` names the line/column or JSON field.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

// A configurable size or work limit was exceeded.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal construction contradicted a property it relies on. Always a bug.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace media
