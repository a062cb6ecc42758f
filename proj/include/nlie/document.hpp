#ifndef NLIE_DOCUMENT_HPP
#define NLIE_DOCUMENT_HPP

#include <optional>

#include "nlie/cohomology.hpp"

namespace nlie {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_ = 0;
};

/// Line-oriented algebra description:
///
///   # comment
///   name M5
///   arity 2
///   dim 4
///   bracket 2 4 = 3:1
///   bracket 3 4 = 3:1 1:-1/2
///   trace 1 0 0 0
///
/// Bracket values are index:rational maps; omitted tuples are zero; tuples
/// may be unordered (signs are resolved); `trace` is optional.
struct AlgebraDocument {
  std::string name = "algebra";
  int arity = 2;
  int dim = 0;
  StructureConstants algebra;
  std::optional<LinearForm> trace;
};

AlgebraDocument parse_document(const std::string& text);

/// Canonical rendering; parse(print(d)) == print-identical for canonical d.
std::string print_document(const AlgebraDocument& doc);

/// Scalar cochain description used by the extend subcommand:
///
///   arity 2
///   dim 4
///   value 1 2 = 1
struct CocycleDocument {
  int arity = 2;
  int dim = 0;
  Cochain cochain;  // scalar, degree matching the arity
};

CocycleDocument parse_cocycle_document(const std::string& text);
std::string print_cocycle_document(const CocycleDocument& doc);

}  // namespace nlie

#endif
