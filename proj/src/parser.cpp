// SPDX-License-Identifier: Apache-2.0

#include "tzv/parser.hpp"

#include <map>

namespace tzv {

namespace {

// Operand shape of each parseable instruction.
enum class Operands {
  None,
  OptNum,       // DUP, DROP
  Num,          // DIG, DUG
  OptNumBlock,  // DIP, DIP n
  TyLit,        // PUSH ty literal
  TyArg,        // NIL, NONE, LEFT, RIGHT, UNPACK
  TwoBlocks,    // IF family
  OneBlock,     // LOOP, LOOP_LEFT, ITER
};

Operands operand_shape(Opcode op) {
  switch (op) {
  case Opcode::Dup:
  case Opcode::Drop:
    return Operands::OptNum;
  case Opcode::Dig:
  case Opcode::Dug:
    return Operands::Num;
  case Opcode::Dip:
    return Operands::OptNumBlock;
  case Opcode::Push:
    return Operands::TyLit;
  case Opcode::Nil:
  case Opcode::None_:
  case Opcode::Left:
  case Opcode::Right:
  case Opcode::Unpack:
    return Operands::TyArg;
  case Opcode::If:
  case Opcode::IfLeft:
  case Opcode::IfNone:
  case Opcode::IfCons:
    return Operands::TwoBlocks;
  case Opcode::Loop:
  case Opcode::LoopLeft:
  case Opcode::Iter:
    return Operands::OneBlock;
  default:
    return Operands::None;
  }
}

class Parser {
public:
  explicit Parser(const std::vector<Token> &toks) : toks_(toks) {}

  Contract parse_contract() {
    bool have_param = false, have_storage = false, have_code = false;
    Contract c;
    while (!at_end()) {
      const Token &t = peek();
      if (t.kind != TokenKind::Keyword)
        fail("expected section keyword (parameter, storage or code)", t.span);
      if (t.text == "parameter") {
        if (have_param)
          fail("duplicate parameter section", t.span);
        have_param = true;
        next();
        skip_annots();
        c.parameter = parse_ty();
        expect_punct(";");
      } else if (t.text == "storage") {
        if (have_storage)
          fail("duplicate storage section", t.span);
        have_storage = true;
        next();
        skip_annots();
        c.storage = parse_ty();
        expect_punct(";");
      } else if (t.text == "code") {
        if (have_code)
          fail("duplicate code section", t.span);
        have_code = true;
        next();
        c.code = parse_block();
        accept_punct(";");
      } else {
        fail("unknown section '" + t.text + "'", t.span);
      }
    }
    if (!have_param)
      fail("missing parameter section", end_span());
    if (!have_storage)
      fail("missing storage section", end_span());
    if (!have_code)
      fail("missing code section", end_span());
    return c;
  }

  Ty parse_ty() {
    skip_annots();
    if (accept_punct("(")) {
      Ty inner = parse_ty_app();
      expect_punct(")");
      return inner;
    }
    const Token &t = next();
    if (t.kind != TokenKind::TypeName)
      fail("expected type name, got '" + t.text + "'", t.span);
    return nullary_ty(t);
  }

private:
  const std::vector<Token> &toks_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= toks_.size(); }

  Span end_span() const {
    return toks_.empty() ? Span{} : toks_.back().span;
  }

  const Token &peek() const {
    if (at_end())
      throw ParseError("unexpected end of input", end_span());
    return toks_[pos_];
  }

  const Token &next() {
    const Token &t = peek();
    ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string &msg, Span at) const {
    throw ParseError(msg, at);
  }

  bool accept_punct(const char *p) {
    if (!at_end() && toks_[pos_].kind == TokenKind::Punct &&
        toks_[pos_].text == p) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_punct(const char *p) {
    if (!accept_punct(p)) {
      if (at_end())
        fail(std::string("expected '") + p + "'", end_span());
      fail(std::string("expected '") + p + "', got '" + peek().text + "'",
           peek().span);
    }
  }

  void skip_annots() {
    while (!at_end() && toks_[pos_].kind == TokenKind::Annot)
      ++pos_;
  }

  std::vector<std::string> collect_annots() {
    std::vector<std::string> annots;
    while (!at_end() && toks_[pos_].kind == TokenKind::Annot)
      annots.push_back(next().text);
    return annots;
  }

  // A type constructor possibly applied to arguments, inside parens.
  Ty parse_ty_app() {
    skip_annots();
    const Token &t = next();
    if (t.kind != TokenKind::TypeName)
      fail("expected type name, got '" + t.text + "'", t.span);
    skip_annots();
    static const std::map<std::string, TyKind> kinds = [] {
      std::map<std::string, TyKind> m;
      for (int k = 0; k <= static_cast<int>(TyKind::Contract); ++k)
        m[ty_kind_name(static_cast<TyKind>(k))] = static_cast<TyKind>(k);
      return m;
    }();
    auto it = kinds.find(t.text);
    if (it == kinds.end())
      fail("unknown type '" + t.text + "'", t.span);
    int arity = ty_kind_arity(it->second);
    std::vector<Ty> args;
    for (int i = 0; i < arity; ++i)
      args.push_back(parse_ty());
    if ((it->second == TyKind::Set || it->second == TyKind::Map ||
         it->second == TyKind::BigMap) &&
        !args[0].is_comparable())
      fail(std::string(t.text) + " key type must be comparable, got " +
               args[0].to_string(),
           t.span);
    return Ty(it->second, std::move(args));
  }

  Ty nullary_ty(const Token &t) {
    static const std::map<std::string, TyKind> atoms = {
        {"int", TyKind::Int},       {"nat", TyKind::Nat},
        {"string", TyKind::String}, {"bytes", TyKind::Bytes},
        {"mutez", TyKind::Mutez},   {"bool", TyKind::Bool},
        {"key_hash", TyKind::KeyHash}, {"timestamp", TyKind::Timestamp},
        {"address", TyKind::Address},  {"key", TyKind::Key},
        {"signature", TyKind::Signature}, {"chain_id", TyKind::ChainId},
        {"unit", TyKind::Unit},     {"operation", TyKind::Operation},
    };
    auto it = atoms.find(t.text);
    if (it == atoms.end())
      fail("type '" + t.text + "' needs parentheses or is unknown", t.span);
    return Ty(it->second);
  }

  Instr parse_block() {
    Span open = peek().span;
    expect_punct("{");
    std::vector<Instr> items;
    if (accept_punct("}")) {
      Instr nop;
      nop.op = Opcode::Nop;
      nop.span = open;
      return nop;
    }
    for (;;) {
      items.push_back(parse_instr());
      if (accept_punct("}"))
        break;
      expect_punct(";");
      if (accept_punct("}")) // tolerate trailing semicolon
        break;
    }
    return make_seq(std::move(items));
  }

  Instr parse_instr() {
    if (!at_end() && peek().kind == TokenKind::Punct && peek().text == "{")
      return parse_block();
    const Token &t = next();
    if (t.kind != TokenKind::InstrName)
      fail("expected instruction, got '" + t.text + "'", t.span);
    auto op = opcode_from_name(t.text);
    if (!op || *op == Opcode::Seq || *op == Opcode::Nop)
      fail("unsupported opcode " + t.text, t.span);

    Instr instr;
    instr.op = *op;
    instr.span = t.span;
    instr.annots = collect_annots();

    switch (operand_shape(*op)) {
    case Operands::None:
      break;
    case Operands::OptNum:
      instr.num = try_num();
      break;
    case Operands::Num: {
      auto n = try_num();
      if (!n)
        fail(t.text + " requires a numeric argument", t.span);
      instr.num = n;
      break;
    }
    case Operands::OptNumBlock:
      instr.num = try_num();
      instr.blocks.push_back(parse_block());
      break;
    case Operands::TyLit: {
      Ty ty = parse_ty();
      Value v = parse_push_operand(ty, t.span);
      instr.tys.push_back(std::move(ty));
      instr.values.push_back(std::move(v));
      break;
    }
    case Operands::TyArg:
      instr.tys.push_back(parse_ty());
      break;
    case Operands::TwoBlocks:
      instr.blocks.push_back(parse_block());
      instr.blocks.push_back(parse_block());
      break;
    case Operands::OneBlock:
      instr.blocks.push_back(parse_block());
      break;
    }
    return instr;
  }

  std::optional<long long> try_num() {
    if (!at_end() && toks_[pos_].kind == TokenKind::IntLit) {
      const Token &t = next();
      long long n;
      try {
        n = std::stoll(t.text);
      } catch (...) {
        fail("numeric argument out of range: " + t.text, t.span);
      }
      if (n < 0)
        fail("numeric argument must be nonnegative: " + t.text, t.span);
      return n;
    }
    return std::nullopt;
  }

  Value parse_push_operand(const Ty &ty, Span at) {
    try {
      return parse_literal_tokens(toks_, pos_, ty);
    } catch (const ValueError &e) {
      Span where = at_end() ? at : toks_[pos_ < toks_.size() ? pos_ : 0].span;
      fail(std::string("bad PUSH operand: ") + e.what(), where);
    }
  }
};

} // namespace

Contract parse_contract(const std::vector<Token> &tokens) {
  return Parser(tokens).parse_contract();
}

Contract parse_contract(std::string_view source) {
  return parse_contract(tokenize(source));
}

Ty parse_ty_text(std::string_view source) {
  auto toks = tokenize(source);
  // Wrap in parens so composite constructors parse without extra syntax.
  std::vector<Token> wrapped;
  wrapped.push_back({TokenKind::Punct, "(", {}});
  wrapped.insert(wrapped.end(), toks.begin(), toks.end());
  wrapped.push_back({TokenKind::Punct, ")", {}});
  return Parser(wrapped).parse_ty();
}

// ---------------------------------------------------------------------------
// Macro expansion
// ---------------------------------------------------------------------------

namespace {

Instr leaf(Opcode op, Span span) {
  Instr i;
  i.op = op;
  i.span = span;
  return i;
}

Instr comparison_tail(Opcode macro, Span span) {
  switch (macro) {
  case Opcode::CmpEq:
    return leaf(Opcode::Eq, span);
  case Opcode::CmpNeq:
    return leaf(Opcode::Neq, span);
  case Opcode::CmpLt:
    return leaf(Opcode::Lt, span);
  case Opcode::CmpLe:
    return leaf(Opcode::Le, span);
  case Opcode::CmpGt:
    return leaf(Opcode::Gt, span);
  default:
    return leaf(Opcode::Ge, span);
  }
}

} // namespace

Instr expand_macros(const Instr &i) {
  // Blocks are rebuilt from their flattened items so that a macro expanding
  // to a sequence splices in without breaking the right-nested normal form.
  if (i.op == Opcode::Seq || i.op == Opcode::Nop) {
    std::vector<Instr> out;
    for (const Instr *item : seq_items(i)) {
      Instr e = expand_macros(*item);
      if (e.op == Opcode::Seq) {
        for (const Instr *s : seq_items(e))
          out.push_back(*s);
      } else if (e.op != Opcode::Nop) {
        out.push_back(std::move(e));
      }
    }
    return make_seq(std::move(out));
  }

  Instr out = i;
  out.blocks.clear();
  for (const Instr &b : i.blocks)
    out.blocks.push_back(expand_macros(b));

  switch (i.op) {
  case Opcode::Unpair: {
    // UNPAIR => DUP; CAR; DIP { CDR }
    Instr dip = leaf(Opcode::Dip, i.span);
    dip.blocks.push_back(leaf(Opcode::Cdr, i.span));
    return make_seq({leaf(Opcode::Dup, i.span), leaf(Opcode::Car, i.span),
                     std::move(dip)});
  }
  case Opcode::CmpEq:
  case Opcode::CmpNeq:
  case Opcode::CmpLt:
  case Opcode::CmpLe:
  case Opcode::CmpGt:
  case Opcode::CmpGe:
    return make_seq({leaf(Opcode::Compare, i.span),
                     comparison_tail(i.op, i.span)});
  default:
    return out;
  }
}

Contract expand_macros(const Contract &c) {
  Contract out = c;
  out.code = expand_macros(c.code);
  return out;
}

// ---------------------------------------------------------------------------
// Pretty printing
// ---------------------------------------------------------------------------

namespace {

std::string print_ty_operand(const Ty &ty) {
  if (ty.args().empty())
    return ty.to_string();
  return "(" + ty.to_string() + ")";
}

std::string indent_str(int n) { return std::string(2 * n, ' '); }

void print_block(const Instr &block, int indent, std::string &out);

void print_one(const Instr &i, int indent, std::string &out) {
  out += opcode_name(i.op);
  for (const std::string &a : i.annots) {
    out += ' ';
    out += a;
  }
  if (i.num) {
    out += ' ';
    out += std::to_string(*i.num);
  }
  for (const Ty &t : i.tys) {
    out += ' ';
    out += print_ty_operand(t);
  }
  for (const Value &v : i.values) {
    out += ' ';
    switch (v.kind()) {
    // Compound literals are parenthesized in operand position.
    case ValueKind::PairV:
    case ValueKind::SomeV:
    case ValueKind::LeftV:
    case ValueKind::RightV:
      out += "(" + print_value(v) + ")";
      break;
    default:
      out += print_value(v);
    }
  }
  for (const Instr &b : i.blocks) {
    out += '\n';
    out += indent_str(indent + 1);
    print_block(b, indent + 1, out);
  }
}

void print_block(const Instr &block, int indent, std::string &out) {
  auto items = seq_items(block);
  if (items.empty()) {
    out += "{}";
    return;
  }
  out += "{ ";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) {
      out += ";\n";
      out += indent_str(indent + 1);
    }
    print_one(*items[k], indent, out);
  }
  out += " }";
}

} // namespace

std::string print_instr(const Instr &i, int indent) {
  std::string out;
  if (i.op == Opcode::Seq || i.op == Opcode::Nop)
    print_block(i, indent, out);
  else
    print_one(i, indent, out);
  return out;
}

std::string pretty_print(const Contract &c) {
  std::string out;
  out += "parameter " + print_ty_operand(c.parameter) + ";\n";
  out += "storage " + print_ty_operand(c.storage) + ";\n";
  out += "code ";
  print_block(c.code, 0, out);
  out += ";\n";
  return out;
}

} // namespace tzv
