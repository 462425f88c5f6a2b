#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ivdg {

// Base of every error the library raises. Proven nonexistence (no kernel,
// no dominating set) is not an error and is reported through return values.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors that name a single offending vertex.
class VertexError : public Error {
 public:
  VertexError(const std::string& what, long long vertex)
      : Error(what + " (vertex " + std::to_string(vertex) + ")"), vertex_(vertex) {}
  long long vertex() const noexcept { return vertex_; }

 private:
  long long vertex_;
};

class InvalidVertex : public VertexError {
 public:
  explicit InvalidVertex(long long v) : VertexError("vertex out of range", v) {}
};

class InvalidEdge : public Error {
 public:
  using Error::Error;
};

class MalformedInterval : public VertexError {
 public:
  explicit MalformedInterval(long long v)
      : VertexError("interval with left end-point greater than right end-point", v) {}
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(actual)) {}
};

class NotReflexive : public VertexError {
 public:
  explicit NotReflexive(long long v) : VertexError("vertex has no self-loop", v) {}
};

class NotIrreflexive : public VertexError {
 public:
  explicit NotIrreflexive(long long v) : VertexError("digraph has a self-loop", v) {}
};

class NotAdjusted : public VertexError {
 public:
  explicit NotAdjusted(long long v)
      : VertexError("representation is not adjusted: l(S) != l(T)", v) {}
};

class InvalidOrdering : public Error {
 public:
  using Error::Error;
};

class InvalidCertificate : public Error {
 public:
  using Error::Error;
};

class OddSubdivision : public Error {
 public:
  explicit OddSubdivision(int k)
      : Error("lift/project need an even subdivision length, got k=" + std::to_string(k)) {}
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ivdg
