// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tzv/errors.hpp"
#include "tzv/types.hpp"
#include "tzv/value.hpp"

namespace tzv {

enum class Opcode {
  // Structure.
  Seq, // two children, binary right-nested
  Nop, // empty block {}
  // Stack manipulation.
  Dup,  // optional numeric argument, default 1
  Swap,
  Dig, // numeric argument
  Dug, // numeric argument
  Drop, // optional numeric argument, default 1
  Dip,  // optional numeric argument + one block
  Push, // type + literal operands
  Unit,
  Car,
  Cdr,
  Pair_,
  Nil,   // type operand
  Cons,
  Some_,
  None_, // type operand
  Left,  // type operand (right side)
  Right, // type operand (left side)
  // Control.
  If,
  IfLeft,
  IfNone,
  IfCons,
  Loop,
  LoopLeft,
  Iter,
  Failwith,
  // Comparison and arithmetic.
  Compare,
  Eq,
  Neq,
  Lt,
  Le,
  Gt,
  Ge,
  Add,
  Sub,
  Mul,
  Ediv,
  Neg,
  Abs,
  Isnat,
  Int_,
  And,
  Or_,
  Not,
  Xor,
  // Containers.
  Mem,
  Get,
  Update,
  Size,
  Concat,
  // Crypto and serialization (abstract).
  Sha256,
  Sha512,
  Blake2b,
  HashKey,
  CheckSignature,
  Pack,
  Unpack, // type operand
  // Chain context.
  Amount,
  Balance,
  Now,
  Sender,
  Source,
  Self,
  ChainId_,
  TransferTokens,
  SetDelegate,
  // Macros, eliminated by expand_macros.
  Unpair,
  CmpEq,
  CmpNeq,
  CmpLt,
  CmpLe,
  CmpGt,
  CmpGe,
};

/// A parsed instruction. Equality ignores annotations and spans, which are
/// diagnostic metadata only.
struct Instr {
  Opcode op = Opcode::Nop;
  std::vector<Instr> blocks;       // Seq children, IF arms, DIP/LOOP/ITER body
  std::vector<Ty> tys;             // type operands
  std::vector<Value> values;       // literal operands (PUSH)
  std::optional<long long> num;    // numeric argument (DUP n, DIP n, ...)
  std::vector<std::string> annots; // metadata, excluded from equality
  Span span;

  bool operator==(const Instr &other) const;
  bool operator!=(const Instr &other) const { return !(*this == other); }
};

struct Contract {
  Ty parameter = Ty::unit();
  Ty storage = Ty::unit();
  Instr code;
};

/// Program point identifier: indices into flattened sequences, alternating
/// with block indices at block-carrying instructions. "5.0.1" is the second
/// instruction of the first block of the sixth top-level instruction.
using Path = std::vector<int>;

std::string path_to_string(const Path &p);
Path path_from_string(const std::string &s);

/// The instructions of a block in execution order, flattening the
/// right-nested Seq spine.
std::vector<const Instr *> seq_items(const Instr &block);

/// Resolves a path inside a block. Returns nullptr if out of range.
const Instr *instr_at(const Instr &block, const Path &p);

const char *opcode_name(Opcode op);
std::optional<Opcode> opcode_from_name(const std::string &name);

/// Macro constructors (eliminated by expand_macros).
bool is_macro(Opcode op);

/// Instructions carrying child blocks (not part of the contract table;
/// handled structurally by the interpreter and vcgen).
bool has_blocks(Opcode op);

/// Leaf instructions: consume one unit of fuel when they execute.
bool is_leaf(Opcode op);

Instr make_seq(std::vector<Instr> items);

} // namespace tzv
