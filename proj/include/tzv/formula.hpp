// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tzv/stack.hpp"
#include "tzv/value.hpp"

namespace tzv {

struct Term;
struct TyTerm;
struct Formula;
using TermP = std::shared_ptr<const Term>;
using TyTermP = std::shared_ptr<const TyTerm>;
using FormulaP = std::shared_ptr<const Formula>;

enum class Sort { IntS, ValueS };

enum class TermKind {
  // Integer-sorted.
  IntConst,
  IntVar,   // fuel, quantifier indices
  Arith,
  Length,   // length of a stack variable
  NumOf,    // numeric payload of an int/nat/mutez/timestamp value
  CompareApp, // the total-order comparison of two values, as an integer
  LogicApp, // application of a declared logic function
  IteInt,   // if-then-else over integers (logic function bodies)
  OperandNum, // numeric argument of the checked instruction (with default)
  // Value-sorted.
  Slot,     // stack variable indexed by an integer term
  SymConst, // named symbolic constant of a fixed type (vcgen)
  ValueConst,
  OperandValue, // k-th literal operand of the checked instruction
  MkNum,   // build an Int/Nat/Mutez/Timestamp value from an integer term
  MkBool,  // build a Bool value from a formula
  MkPair,
  MkSome,
  MkNone,  // carries the element type
  MkLeft,  // carries the right-side type
  MkRight, // carries the left-side type
  MkUnit,
  MkNil,   // empty list of the carried element type
  MkCons,
  Fst,
  Snd,
  CryptoApp, // canonical abstract result of a crypto/serialization opcode
};

enum class ArithOp { Add, Sub, Mul, Div, Mod };

struct Term {
  TermKind kind;
  Sort sort = Sort::IntS;
  BigInt ival;              // IntConst
  std::string name;         // IntVar, SymConst, LogicApp, CryptoApp tag
  ArithOp aop = ArithOp::Add;
  std::vector<TermP> args;
  FormulaP fml;             // MkBool condition / IteInt condition
  TyTermP tyt;              // carried type (MkNone/MkLeft/MkRight/MkNil/SymConst)
  Value val;                // ValueConst payload
  TyKind numkind = TyKind::Int; // MkNum target constructor
  int opidx = 0;            // OperandValue index
};

enum class TyTermKind { TyConst, TypInfer, TyArg, OperandTy };

struct TyTerm {
  TyTermKind kind;
  Ty ty = Ty::unit(); // TyConst
  TermP value;        // TypInfer argument
  TyTermP inner;      // TyArg argument
  int idx = 0;        // TyArg position / OperandTy index
};

enum class FormulaKind {
  BoolConst,
  Cmp,    // integer comparison
  VEq,    // structural value equality
  TEq,    // type equality
  TyIs,   // head-constructor test on a type term
  TyComparable,
  And,
  Or,
  Not,
  Implies,
  Iff,
  ForallIdx, // bounded: lo <= var < hi
  BoolOf,    // boolean payload of a Bool-typed value term
  SigValid,  // CHECK_SIGNATURE's decision over (key, signature, bytes)
};

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

struct Formula {
  FormulaKind kind;
  CmpOp cmp = CmpOp::Eq;
  bool bval = false;
  TyKind tykind = TyKind::Unit; // TyIs target
  std::string var;              // ForallIdx variable
  std::vector<TermP> terms;
  std::vector<TyTermP> tyterms;
  std::vector<FormulaP> children;
  TermP lo, hi; // ForallIdx bounds
};

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

namespace fb {

TermP int_const(BigInt v);
TermP int_var(std::string name);
TermP arith(ArithOp op, TermP a, TermP b);
TermP add(TermP a, TermP b);
TermP sub(TermP a, TermP b);
TermP mul(TermP a, TermP b);
TermP ediv(TermP a, TermP b); // euclidean
TermP emod(TermP a, TermP b); // euclidean
TermP length(std::string stack);
TermP num_of(TermP v);
TermP compare_app(TermP a, TermP b);
TermP logic_app(std::string name, std::vector<TermP> args);
TermP ite_int(FormulaP cond, TermP then_t, TermP else_t);
TermP operand_num(long long default_value);

TermP slot(std::string stack, TermP index);
TermP slot(std::string stack, long long index);
TermP sym_const(std::string name, Ty ty);
TermP value_const(Value v);
TermP operand_value(int idx);
TermP mk_num(TyKind kind, TermP payload);
TermP mk_bool(FormulaP payload);
TermP mk_pair(TermP a, TermP b);
TermP mk_some(TermP inner);
TermP mk_none(TyTermP elem);
TermP mk_left(TermP inner, TyTermP right_ty);
TermP mk_right(TermP inner, TyTermP left_ty);
TermP mk_unit();
TermP mk_nil(TyTermP elem);
TermP mk_cons(TermP head, TermP tail);
TermP fst(TermP v);
TermP snd(TermP v);
TermP crypto_app(std::string tag, TermP input);

TyTermP ty_const(Ty ty);
TyTermP typ_infer_t(TermP v);
TyTermP ty_arg(TyTermP t, int idx);
TyTermP operand_ty(int idx);

FormulaP bool_const(bool b);
FormulaP cmp(CmpOp op, TermP a, TermP b);
FormulaP eq(TermP a, TermP b);
FormulaP veq(TermP a, TermP b);
FormulaP teq(TyTermP a, TyTermP b);
FormulaP ty_is(TyTermP t, TyKind kind);
FormulaP ty_comparable(TyTermP t);
FormulaP and_(std::vector<FormulaP> fs);
FormulaP or_(std::vector<FormulaP> fs);
FormulaP not_(FormulaP f);
FormulaP implies(FormulaP a, FormulaP b);
FormulaP iff(FormulaP a, FormulaP b);
FormulaP forall_idx(std::string var, TermP lo, TermP hi, FormulaP body);
FormulaP bool_of(TermP v);
FormulaP sig_valid(TermP key, TermP sig, TermP payload);

} // namespace fb

// ---------------------------------------------------------------------------
// Logic functions
// ---------------------------------------------------------------------------

/// A user-declared integer logic function (e.g. fact). Bodies are integer
/// expressions over the parameters, if-then-else and earlier declarations.
struct LogicFunction {
  std::string name;
  std::vector<std::string> params;
  TermP body;
};

class LogicTable {
public:
  /// Declares a function. Self-recursive calls must strictly decrease one
  /// fixed parameter by a positive constant; anything else is rejected.
  void declare(LogicFunction fn);

  const LogicFunction *find(const std::string &name) const;
  const std::vector<LogicFunction> &functions() const { return fns_; }
  bool empty() const { return fns_.empty(); }

private:
  std::vector<LogicFunction> fns_;
};

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Literal operands of the instruction a contract is instantiated for.
struct Operands {
  std::vector<Ty> tys;
  std::vector<Value> values;
  std::optional<long long> num;
};

struct EvalEnv {
  std::map<std::string, const Stack *> stacks;
  std::map<std::string, Value> values; // also binds SymConst names
  std::map<std::string, BigInt> ints;
  const Operands *operands = nullptr;
  const LogicTable *logic = nullptr;
};

/// Standard semantics; total on well-sorted input. Guarded matches that fall
/// through evaluate to false rather than failing. Throws EvalError on
/// unbound names and sort errors.
bool eval_formula(const FormulaP &f, EvalEnv &env);
BigInt eval_int_term(const TermP &t, EvalEnv &env);
Value eval_value_term(const TermP &t, EvalEnv &env);
Ty eval_ty_term(const TyTermP &t, EvalEnv &env);

/// Euclidean division/remainder: 0 <= rem < |b|. Matches both the EDIV
/// opcode and SMT-LIB integer div/mod.
BigInt euclid_div(const BigInt &a, const BigInt &b);
BigInt euclid_mod(const BigInt &a, const BigInt &b);

// ---------------------------------------------------------------------------
// Structure
// ---------------------------------------------------------------------------

bool formula_equal(const FormulaP &a, const FormulaP &b);
bool term_equal(const TermP &a, const TermP &b);

enum class FormulaFlavor { Plain, WhyML };
std::string print_formula(const FormulaP &f,
                          FormulaFlavor flavor = FormulaFlavor::Plain);
std::string print_term(const TermP &t,
                       FormulaFlavor flavor = FormulaFlavor::Plain);

/// Calls `fn` on every term node reachable from the formula.
void visit_terms(const FormulaP &f, const std::function<void(const Term &)> &fn);
void visit_terms(const TermP &t, const std::function<void(const Term &)> &fn);

} // namespace tzv
