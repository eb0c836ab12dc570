// SPDX-License-Identifier: Apache-2.0

#include "tzv/ast.hpp"

#include <map>

namespace tzv {

bool Instr::operator==(const Instr &other) const {
  return op == other.op && blocks == other.blocks && tys == other.tys &&
         values == other.values && num == other.num;
}

std::string path_to_string(const Path &p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i)
      out += '.';
    out += std::to_string(p[i]);
  }
  return out;
}

Path path_from_string(const std::string &s) {
  Path p;
  if (s.empty())
    return p;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t dot = s.find('.', pos);
    if (dot == std::string::npos)
      dot = s.size();
    p.push_back(std::stoi(s.substr(pos, dot - pos)));
    pos = dot + 1;
  }
  return p;
}

std::vector<const Instr *> seq_items(const Instr &block) {
  std::vector<const Instr *> items;
  const Instr *cur = &block;
  while (cur->op == Opcode::Seq) {
    items.push_back(&cur->blocks[0]);
    cur = &cur->blocks[1];
  }
  if (cur->op != Opcode::Nop)
    items.push_back(cur);
  return items;
}

const Instr *instr_at(const Instr &block, const Path &p) {
  const Instr *cur = nullptr;
  const Instr *scope = &block;
  std::size_t i = 0;
  while (i < p.size()) {
    auto items = seq_items(*scope);
    int idx = p[i++];
    if (idx < 0 || static_cast<std::size_t>(idx) >= items.size())
      return nullptr;
    cur = items[idx];
    if (i == p.size())
      return cur;
    int blk = p[i++];
    if (blk < 0 || static_cast<std::size_t>(blk) >= cur->blocks.size())
      return nullptr;
    scope = &cur->blocks[blk];
    if (i == p.size())
      return scope;
  }
  return cur;
}

namespace {

const std::map<Opcode, const char *> &name_table() {
  static const std::map<Opcode, const char *> table = {
      {Opcode::Seq, "SEQ"},
      {Opcode::Nop, "NOP"},
      {Opcode::Dup, "DUP"},
      {Opcode::Swap, "SWAP"},
      {Opcode::Dig, "DIG"},
      {Opcode::Dug, "DUG"},
      {Opcode::Drop, "DROP"},
      {Opcode::Dip, "DIP"},
      {Opcode::Push, "PUSH"},
      {Opcode::Unit, "UNIT"},
      {Opcode::Car, "CAR"},
      {Opcode::Cdr, "CDR"},
      {Opcode::Pair_, "PAIR"},
      {Opcode::Nil, "NIL"},
      {Opcode::Cons, "CONS"},
      {Opcode::Some_, "SOME"},
      {Opcode::None_, "NONE"},
      {Opcode::Left, "LEFT"},
      {Opcode::Right, "RIGHT"},
      {Opcode::If, "IF"},
      {Opcode::IfLeft, "IF_LEFT"},
      {Opcode::IfNone, "IF_NONE"},
      {Opcode::IfCons, "IF_CONS"},
      {Opcode::Loop, "LOOP"},
      {Opcode::LoopLeft, "LOOP_LEFT"},
      {Opcode::Iter, "ITER"},
      {Opcode::Failwith, "FAILWITH"},
      {Opcode::Compare, "COMPARE"},
      {Opcode::Eq, "EQ"},
      {Opcode::Neq, "NEQ"},
      {Opcode::Lt, "LT"},
      {Opcode::Le, "LE"},
      {Opcode::Gt, "GT"},
      {Opcode::Ge, "GE"},
      {Opcode::Add, "ADD"},
      {Opcode::Sub, "SUB"},
      {Opcode::Mul, "MUL"},
      {Opcode::Ediv, "EDIV"},
      {Opcode::Neg, "NEG"},
      {Opcode::Abs, "ABS"},
      {Opcode::Isnat, "ISNAT"},
      {Opcode::Int_, "INT"},
      {Opcode::And, "AND"},
      {Opcode::Or_, "OR"},
      {Opcode::Not, "NOT"},
      {Opcode::Xor, "XOR"},
      {Opcode::Mem, "MEM"},
      {Opcode::Get, "GET"},
      {Opcode::Update, "UPDATE"},
      {Opcode::Size, "SIZE"},
      {Opcode::Concat, "CONCAT"},
      {Opcode::Sha256, "SHA256"},
      {Opcode::Sha512, "SHA512"},
      {Opcode::Blake2b, "BLAKE2B"},
      {Opcode::HashKey, "HASH_KEY"},
      {Opcode::CheckSignature, "CHECK_SIGNATURE"},
      {Opcode::Pack, "PACK"},
      {Opcode::Unpack, "UNPACK"},
      {Opcode::Amount, "AMOUNT"},
      {Opcode::Balance, "BALANCE"},
      {Opcode::Now, "NOW"},
      {Opcode::Sender, "SENDER"},
      {Opcode::Source, "SOURCE"},
      {Opcode::Self, "SELF"},
      {Opcode::ChainId_, "CHAIN_ID"},
      {Opcode::TransferTokens, "TRANSFER_TOKENS"},
      {Opcode::SetDelegate, "SET_DELEGATE"},
      {Opcode::Unpair, "UNPAIR"},
      {Opcode::CmpEq, "CMPEQ"},
      {Opcode::CmpNeq, "CMPNEQ"},
      {Opcode::CmpLt, "CMPLT"},
      {Opcode::CmpLe, "CMPLE"},
      {Opcode::CmpGt, "CMPGT"},
      {Opcode::CmpGe, "CMPGE"},
  };
  return table;
}

} // namespace

const char *opcode_name(Opcode op) { return name_table().at(op); }

std::optional<Opcode> opcode_from_name(const std::string &name) {
  static const auto reverse = [] {
    std::map<std::string, Opcode> r;
    for (const auto &[op, n] : name_table())
      r.emplace(n, op);
    return r;
  }();
  auto it = reverse.find(name);
  if (it == reverse.end())
    return std::nullopt;
  return it->second;
}

bool is_macro(Opcode op) {
  switch (op) {
  case Opcode::Unpair:
  case Opcode::CmpEq:
  case Opcode::CmpNeq:
  case Opcode::CmpLt:
  case Opcode::CmpLe:
  case Opcode::CmpGt:
  case Opcode::CmpGe:
    return true;
  default:
    return false;
  }
}

bool has_blocks(Opcode op) {
  switch (op) {
  case Opcode::Seq:
  case Opcode::Dip:
  case Opcode::If:
  case Opcode::IfLeft:
  case Opcode::IfNone:
  case Opcode::IfCons:
  case Opcode::Loop:
  case Opcode::LoopLeft:
  case Opcode::Iter:
    return true;
  default:
    return false;
  }
}

bool is_leaf(Opcode op) {
  return op != Opcode::Seq && op != Opcode::Nop && !has_blocks(op);
}

Instr make_seq(std::vector<Instr> items) {
  if (items.empty()) {
    Instr nop;
    nop.op = Opcode::Nop;
    return nop;
  }
  Instr result = std::move(items.back());
  for (std::size_t i = items.size() - 1; i-- > 0;) {
    Instr seq;
    seq.op = Opcode::Seq;
    seq.span = items[i].span;
    seq.blocks.push_back(std::move(items[i]));
    seq.blocks.push_back(std::move(result));
    result = std::move(seq);
  }
  return result;
}

} // namespace tzv
