// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "tzv/errors.hpp"
#include "tzv/lexer.hpp"
#include "tzv/parser.hpp"

using namespace tzv;

TEST_CASE("tokenize basics") {
  auto toks = tokenize("PUSH @index nat 1");
  REQUIRE(toks.size() == 4);
  CHECK(toks[0].kind == TokenKind::InstrName);
  CHECK(toks[0].text == "PUSH");
  CHECK(toks[1].kind == TokenKind::Annot);
  CHECK(toks[1].text == "@index");
  CHECK(toks[2].kind == TokenKind::TypeName);
  CHECK(toks[2].text == "nat");
  CHECK(toks[3].kind == TokenKind::IntLit);
  CHECK(toks[3].text == "1");

  CHECK(tokenize("").empty());

  auto t2 = tokenize("0xAB; DROP");
  REQUIRE(t2.size() == 3);
  CHECK(t2[0].kind == TokenKind::BytesLit);
  CHECK(t2[0].text == "\xab");
  CHECK(t2[1].kind == TokenKind::Punct);
  CHECK(t2[2].kind == TokenKind::InstrName);
  CHECK(t2[2].text == "DROP");
}

TEST_CASE("tokenize strips comments and tracks spans") {
  auto toks = tokenize("# line comment\nADD /* block */ SUB");
  REQUIRE(toks.size() == 2);
  CHECK(toks[0].text == "ADD");
  CHECK(toks[0].span.line == 2);
  CHECK(toks[0].span.col == 1);
  CHECK(toks[1].text == "SUB");
}

TEST_CASE("tokenize errors") {
  CHECK_THROWS_AS(tokenize("\"unterminated"), LexError);
  CHECK_THROWS_AS(tokenize("0xabc"), LexError); // odd hex digits
  CHECK_THROWS_AS(tokenize("ADD ? SUB"), LexError);
  CHECK_THROWS_AS(tokenize("/* never closed"), LexError);
}

static const char *kToyAdd =
    "parameter nat;\n"
    "storage nat;\n"
    "code { UNPAIR; ADD;\n"
    "       NIL operation; PAIR };\n";

TEST_CASE("parse_contract on the toy add contract") {
  Contract c = parse_contract(kToyAdd);
  CHECK(c.parameter == Ty::nat());
  CHECK(c.storage == Ty::nat());
  auto items = seq_items(c.code);
  REQUIRE(items.size() == 4);
  CHECK(items[0]->op == Opcode::Unpair);
  CHECK(items[1]->op == Opcode::Add);
  CHECK(items[2]->op == Opcode::Nil);
  CHECK(items[2]->tys.at(0) == Ty::operation());
  CHECK(items[3]->op == Opcode::Pair_);

  // Binary right nesting: { i1; i2; i3; i4 } = Seq(i1, Seq(i2, Seq(i3, i4))).
  REQUIRE(c.code.op == Opcode::Seq);
  CHECK(c.code.blocks[0].op == Opcode::Unpair);
  CHECK(c.code.blocks[1].op == Opcode::Seq);
  CHECK(c.code.blocks[1].blocks[1].blocks[1].op == Opcode::Pair_);
}

TEST_CASE("parse_contract minimal no-op contract") {
  Contract c = parse_contract(
      "parameter unit; storage unit; code { CDR; NIL operation; PAIR }");
  CHECK(seq_items(c.code).size() == 3);
}

static const char *kFactorial =
    "parameter nat;\n"
    "storage nat;\n"
    "code {  CAR; PUSH @index nat 1; DUP @acc;\n"
    "        DIP 2 { DUP; PUSH nat 0; COMPARE; NEQ };\n"
    "        DIG 2;\n"
    "        LOOP { DIP { DUP;\n"
    "                     DIP { PUSH nat 1; ADD @ipp } };\n"
    "               MUL;\n"
    "               DIP { DIP { DUP };\n"
    "                     DUP;\n"
    "                     DIP { SWAP };\n"
    "                     COMPARE; LE };\n"
    "               SWAP };\n"
    "        DIP { DROP; DROP };\n"
    "        NIL operation; PAIR };\n";

TEST_CASE("parse_contract on the factorial contract") {
  Contract c = parse_contract(kFactorial);
  auto items = seq_items(c.code);
  REQUIRE(items.size() == 9);
  CHECK(items[0]->op == Opcode::Car);
  CHECK(items[1]->op == Opcode::Push);
  CHECK(items[1]->annots == std::vector<std::string>{"@index"});
  CHECK(items[3]->op == Opcode::Dip);
  CHECK(items[3]->num == 2); // DIP 2 carries its numeric argument
  CHECK(items[4]->op == Opcode::Dig);
  CHECK(items[4]->num == 2);
  CHECK(items[5]->op == Opcode::Loop);
  auto loop_body = seq_items(items[5]->blocks[0]);
  REQUIRE(loop_body.size() == 4);
  CHECK(loop_body[0]->op == Opcode::Dip);
  CHECK(loop_body[1]->op == Opcode::Mul);
  CHECK(loop_body[3]->op == Opcode::Swap);
}

TEST_CASE("parse errors carry diagnostics") {
  CHECK_THROWS_AS(parse_contract("parameter nat; storage nat;"), ParseError);
  CHECK_THROWS_AS(
      parse_contract("parameter nat; parameter nat; storage nat; code {}"),
      ParseError);
  CHECK_THROWS_AS(parse_contract("storage nat; code {}"), ParseError);
  CHECK_THROWS_AS(
      parse_contract("parameter nat; storage nat; code { SAPLING_VERIFY }"),
      ParseError);
  CHECK_THROWS_WITH_AS(
      parse_contract("parameter nat; storage nat; code { EXEC }"),
      "unsupported opcode EXEC", ParseError);
  CHECK_THROWS_AS(parse_contract("parameter nat; storage nat; code { DIG }"),
                  ParseError);
}

TEST_CASE("annotations are metadata, not semantics") {
  Contract with = parse_contract(kFactorial);
  std::string stripped = kFactorial;
  for (const char *annot : {" @index", " @acc", " @ipp"}) {
    for (std::size_t at = stripped.find(annot); at != std::string::npos;
         at = stripped.find(annot))
      stripped.erase(at, std::string(annot).size());
  }
  Contract without = parse_contract(stripped);
  CHECK(with.code == without.code); // equality ignores annotations
}

TEST_CASE("macro expansion") {
  Contract c = parse_contract(kToyAdd);
  Instr expanded = expand_macros(c.code);
  auto items = seq_items(expanded);
  REQUIRE(items.size() == 6); // DUP; CAR; DIP{CDR}; ADD; NIL; PAIR
  CHECK(items[0]->op == Opcode::Dup);
  CHECK(items[1]->op == Opcode::Car);
  CHECK(items[2]->op == Opcode::Dip);
  CHECK(seq_items(items[2]->blocks[0])[0]->op == Opcode::Cdr);
  CHECK(items[3]->op == Opcode::Add);

  // Idempotent, and the output contains only core constructors.
  CHECK(expand_macros(expanded) == expanded);
  std::function<void(const Instr &)> assert_core = [&](const Instr &i) {
    CHECK_FALSE(is_macro(i.op));
    for (const Instr &b : i.blocks)
      assert_core(b);
  };
  assert_core(expanded);

  // Fixed point on core instructions.
  Instr add;
  add.op = Opcode::Add;
  CHECK(expand_macros(add) == add);

  // CMPLE => COMPARE; LE
  Contract cm = parse_contract(
      "parameter int; storage int; code { CAR; DUP; CMPLE; DROP; NIL operation; PAIR }");
  Instr em = expand_macros(cm.code);
  auto e = seq_items(em);
  CHECK(e[2]->op == Opcode::Compare);
  CHECK(e[3]->op == Opcode::Le);
}

TEST_CASE("pretty_print round-trips") {
  for (const char *src : {kToyAdd, kFactorial}) {
    Contract first = parse_contract(src);
    Contract second = parse_contract(pretty_print(first));
    CHECK(first.parameter == second.parameter);
    CHECK(first.storage == second.storage);
    CHECK(first.code == second.code);
    // Fixpoint: printing the reparse prints the same text.
    CHECK(pretty_print(first) == pretty_print(second));
  }
}

TEST_CASE("pretty_print single-instruction code") {
  Contract c = parse_contract("parameter unit; storage unit; code { CDR; NIL operation; PAIR };");
  std::string text = pretty_print(c);
  CHECK(text.find("code {") != std::string::npos);
  Contract again = parse_contract(text);
  CHECK(again.code == c.code);
}

TEST_CASE("complex operand literals parse inside PUSH") {
  Contract c = parse_contract(
      "parameter unit; storage (pair nat (list string));\n"
      "code { DROP; PUSH (pair nat (list string)) (Pair 4 { \"a\"; \"b\" });\n"
      "       NIL operation; PAIR };");
  auto items = seq_items(c.code);
  CHECK(items[1]->values.at(0) ==
        Value::pair(Value::nat(4),
                    Value::list({Value::string("a"), Value::string("b")},
                                Ty::string())));
  Contract again = parse_contract(pretty_print(c));
  CHECK(again.code == c.code);
}
