#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sixvertex {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not conform.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Division by zero, a singular kernel pair, or a singular matrix.
class SingularityError : public Error {
 public:
  using Error::Error;
};

// Input sits on a degenerate locus; `quantity()` names what vanished.
class DegenerateError : public Error {
 public:
  DegenerateError(std::string quantity, const std::string& message)
      : Error(message), quantity_(std::move(quantity)) {}

  const std::string& quantity() const noexcept { return quantity_; }

 private:
  std::string quantity_;
};

// Requested size exceeds the configured exact/float ceiling.
class CeilingError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Schema violation at a JSON pointer such as "/boundary/w/0".
class SchemaError : public ParseError {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : ParseError(pointer + ": " + message), pointer_(std::move(pointer)), detail_(message) {}

  const std::string& pointer() const noexcept { return pointer_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string pointer_;
  std::string detail_;
};

}  // namespace sixvertex
