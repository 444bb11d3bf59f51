#pragma once

// File formats used by the command-line tool.
//
//   set file      ctx: x:a, y:a      program file    name : pred PATTERN.
//                 type: a                            (one clause per line)
//                 PATTERN            (one per line)

#include <string>
#include <vector>

#include "strictpat/algebra.hpp"

namespace strictpat {

std::string read_file(const std::string& path);

/// Parses `text` with Ψ as the known free variables and completes it with
/// fully_apply.
SimpleLinearPattern parse_pattern(const Signature& sig, const FlatContext& psi, const Type& a,
                                  const std::string& text);

PatternSet parse_set_file(const Signature& sig, const std::string& text);

std::vector<Clause> parse_program(const Signature& sig, const FlatContext& psi,
                                  const std::string& text);
std::string print_clause(const Clause& c);

}  // namespace strictpat
