#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spanlab {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected graph construction.
class GraphError : public Error {
 public:
  enum class Kind { EmptyGraph, SelfLoop, DuplicateEdge, VertexOutOfRange, Disconnected };

  GraphError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Malformed edge-list or graph6 input. `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, BadChar, LengthMismatch };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : Error(what), kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

class NotABridge : public Error {
 public:
  using Error::Error;
};

/// Pair-graph threshold above the radius; no pair graph at that level can qualify.
class ThresholdTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidTracks : public Error {
 public:
  using Error::Error;
};

class NotActiveConformant : public Error {
 public:
  using Error::Error;
};

class NotLazyConformant : public Error {
 public:
  using Error::Error;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnknownId : public Error {
 public:
  using Error::Error;
};

/// Input beyond the hard caps of the exhaustive routines.
class TooLarge : public Error {
 public:
  using Error::Error;
};

class OrderTooSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace spanlab
