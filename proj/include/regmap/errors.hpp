#pragma once

#include <stdexcept>
#include <string>

namespace regmap {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse errors carry a 1-based source position.
struct SyntaxError : Error {
  SyntaxError(const std::string& msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct UnknownGeneratorError : SyntaxError {
  UnknownGeneratorError(const std::string& name, int line, int column)
      : SyntaxError("unknown generator '" + name + "'", line, column),
        name(name) {}
  std::string name;
};

struct EmptyRelatorError : SyntaxError {
  EmptyRelatorError(int line, int column)
      : SyntaxError("relator reduces to the empty word", line, column) {}
};

// Coset enumeration exceeded its table bound; the group may be infinite or
// the bound too small for this presentation.
struct OverflowError : Error {
  explicit OverflowError(std::size_t max_cosets)
      : Error("coset enumeration exceeded " + std::to_string(max_cosets) +
              " cosets"),
        max_cosets(max_cosets) {}
  std::size_t max_cosets;
};

struct NotAMapError : Error {
  using Error::Error;
};

struct TrivialGeneratorError : Error {
  using Error::Error;
};

// Euler characteristic inconsistent with a closed orientable surface.
struct InconsistentSurfaceError : Error {
  using Error::Error;
};

struct RegularityViolationError : Error {
  using Error::Error;
};

struct NotTriangularError : Error {
  NotTriangularError() : Error("operation requires face size p = 3") {}
};

struct DisconnectedError : Error {
  DisconnectedError() : Error("graph is not connected") {}
};

struct NotNormalError : Error {
  NotNormalError() : Error("subgroup is not normal in the automorphism group") {}
};

struct ReversesEdgeError : Error {
  ReversesEdgeError() : Error("subgroup contains an edge-reversing automorphism") {}
};

struct DeclarationMismatchError : Error {
  DeclarationMismatchError(const std::string& field, const std::string& declared,
                           const std::string& computed)
      : Error("declared " + field + "=" + declared + " but computed " + computed),
        field(field),
        declared(declared),
        computed(computed) {}
  std::string field;
  std::string declared;
  std::string computed;
};

struct DuplicateIdError : Error {
  explicit DuplicateIdError(const std::string& id)
      : Error("duplicate census id '" + id + "'"), id(id) {}
  std::string id;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace regmap
