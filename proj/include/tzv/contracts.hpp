// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <vector>

#include "tzv/ast.hpp"
#include "tzv/formula.hpp"

namespace tzv {

/// The axiomatic contract of one opcode: requires/ensures over the input
/// stack `s`, the `fuel` budget, the instruction operands and the output
/// stack `result`. One data source feeds the runtime checker, the faithful
/// emitter and the SMT emitter.
struct OpcodeContract {
  Opcode op = Opcode::Nop;
  std::vector<FormulaP> requires_;
  std::vector<FormulaP> ensures_;
  bool may_fail = false;
};

using ContractTable = std::map<Opcode, OpcodeContract>;

/// The built-in table over all supported leaf opcodes (block-structured
/// instructions are handled structurally, not axiomatically).
const ContractTable &contract_table();

/// Throws EvalError for opcodes outside the table.
const OpcodeContract &contract_of(Opcode op);

bool has_contract(Opcode op);

/// Human-readable dump, one clause per line.
std::string print_contract(const OpcodeContract &c);

} // namespace tzv
