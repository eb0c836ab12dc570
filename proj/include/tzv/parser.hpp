// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "tzv/ast.hpp"
#include "tzv/lexer.hpp"

namespace tzv {

/// Parses a full contract (parameter/storage/code sections, any order, each
/// exactly once). Throws ParseError/LexError with spans.
Contract parse_contract(std::string_view source);
Contract parse_contract(const std::vector<Token> &tokens);

/// Parses a type expression from text ("pair nat (list key)").
Ty parse_ty_text(std::string_view source);

/// Rewrites macros (UNPAIR, CMPEQ..CMPGE) into core instructions.
/// Idempotent; the result contains no macro constructors.
Instr expand_macros(const Instr &i);
Contract expand_macros(const Contract &c);

/// Canonical source form. Output reparses to an equal AST.
std::string pretty_print(const Contract &c);
std::string print_instr(const Instr &i, int indent = 0);

} // namespace tzv
