#pragma once

// Concrete syntax for signatures, contexts, types and terms.
//
//   signature   a : type.   c : a ->u a.   lam : (exp ->u exp) ->1 exp.
//   terms       x  c  E[x^0, y^1]  \x^u:A. M  M @1 N
//   comments    % to end of line
//
// The plain dialect drops every label (`->`, `\x:A.`, juxtaposition, `E[x, y]`)
// and is used for the simply-typed input of the embedding.

#include <set>
#include <string>
#include <string_view>

#include "strictpat/syntax.hpp"

namespace strictpat {

enum class Dialect { Strict, Plain };

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ParseOptions {
  Dialect dialect = Dialect::Strict;
  /// When set, free identifiers that are neither constants nor listed here
  /// are rejected as unknown.
  const std::set<std::string>* known_free = nullptr;
};

Signature parse_signature(std::string_view text, Dialect dialect = Dialect::Strict);
Type parse_type(std::string_view text, const Signature& sig,
                Dialect dialect = Dialect::Strict);
Term parse_term(std::string_view text, const Signature& sig, const ParseOptions& opts = {});
/// `x:a, y:a ->1 a`; empty text is the empty context.
FlatContext parse_context(std::string_view text, const Signature& sig,
                          Dialect dialect = Dialect::Strict);

std::string print_type(const Type& t, Dialect dialect = Dialect::Strict);
std::string print_term(const Term& t, Dialect dialect = Dialect::Strict);
std::string print_context(const FlatContext& psi, Dialect dialect = Dialect::Strict);
std::string print_signature(const Signature& sig, Dialect dialect = Dialect::Strict);
std::string print_phi(const LabeledVarList& phi);

}  // namespace strictpat
