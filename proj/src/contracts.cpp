// SPDX-License-Identifier: Apache-2.0

#include "tzv/contracts.hpp"

#include "tzv/errors.hpp"

namespace tzv {

namespace {

using namespace fb;

// Shared shorthands over the contract vocabulary: input stack "s", output
// stack "result", integer "fuel", instruction operands by index.

TermP s_(long long i) { return slot("s", i); }
TermP r_(long long i) { return slot("result", i); }
TermP len_s() { return length("s"); }
TermP len_r() { return length("result"); }
TermP c_(long long v) { return int_const(v); }

TyTermP ty_s(long long i) { return typ_infer_t(s_(i)); }
TyTermP ty_r(long long i) { return typ_infer_t(r_(i)); }

FormulaP fuel_pos() { return cmp(CmpOp::Gt, int_var("fuel"), c_(0)); }
FormulaP len_ge(long long k) { return cmp(CmpOp::Ge, len_s(), c_(k)); }
FormulaP len_ge(TermP k) { return cmp(CmpOp::Ge, len_s(), std::move(k)); }

// length result = length s + delta
FormulaP len_delta(long long delta) {
  TermP rhs = delta == 0  ? len_s()
              : delta > 0 ? add(len_s(), c_(delta))
                          : sub(len_s(), c_(-delta));
  return cmp(CmpOp::Eq, len_r(), std::move(rhs));
}

// forall i in [start, length result): result[i] = s[i + shift]
FormulaP frame_vals(TermP start, long long shift) {
  TermP idx = int_var("i");
  TermP src = shift == 0  ? idx
              : shift > 0 ? add(idx, c_(shift))
                          : sub(idx, c_(-shift));
  return forall_idx("i", std::move(start), len_r(),
                    veq(slot("result", int_var("i")),
                        slot("s", std::move(src))));
}

FormulaP frame_vals(long long start, long long shift) {
  return frame_vals(c_(start), shift);
}

// forall i in [start, length result): typ_infer result[i] = typ_infer s[i+shift]
FormulaP frame_tys(long long start, long long shift) {
  TermP idx = int_var("i");
  TermP src = shift == 0  ? idx
              : shift > 0 ? add(idx, c_(shift))
                          : sub(idx, c_(-shift));
  return forall_idx("i", c_(start), len_r(),
                    teq(typ_infer_t(slot("result", int_var("i"))),
                        typ_infer_t(slot("s", std::move(src)))));
}

FormulaP s_has(long long i, Ty ty) { return teq(ty_s(i), ty_const(std::move(ty))); }
FormulaP r_has(long long i, Ty ty) { return teq(ty_r(i), ty_const(std::move(ty))); }

TermP numv(long long i) { return num_of(s_(i)); }

// The four int/nat operand cases of binary arithmetic, as (guard, result
// constructor kind) pairs. Mixed operands produce int; nat+nat stays nat.
struct ArithCase {
  FormulaP guard;
  TyKind result;
};

std::vector<ArithCase> int_nat_cases(TyKind nat_nat_result) {
  auto g = [](Ty a, Ty b) {
    return and_({teq(ty_s(0), ty_const(std::move(a))),
                 teq(ty_s(1), ty_const(std::move(b)))});
  };
  return {
      {g(Ty::int_(), Ty::int_()), TyKind::Int},
      {g(Ty::int_(), Ty::nat()), TyKind::Int},
      {g(Ty::nat(), Ty::int_()), TyKind::Int},
      {g(Ty::nat(), Ty::nat()), nat_nat_result},
  };
}

FormulaP mutez_guard() {
  return and_({teq(ty_s(0), ty_const(Ty::mutez())),
               teq(ty_s(1), ty_const(Ty::mutez()))});
}

OpcodeContract make(Opcode op, long long min_len,
                    std::vector<FormulaP> extra_req,
                    std::vector<FormulaP> ens, bool may_fail = false) {
  OpcodeContract c;
  c.op = op;
  c.requires_.push_back(fuel_pos());
  c.requires_.push_back(len_ge(min_len));
  for (auto &f : extra_req)
    c.requires_.push_back(std::move(f));
  c.ensures_ = std::move(ens);
  c.may_fail = may_fail;
  return c;
}

OpcodeContract arith_contract(Opcode op, ArithOp aop, TyKind nat_nat_result,
                              bool with_mutez) {
  auto value_of = [&](TyKind kind) {
    return mk_num(kind, arith(aop, numv(0), numv(1)));
  };
  std::vector<FormulaP> type_cases, value_cases, guards;
  for (const ArithCase &cse : int_nat_cases(nat_nat_result)) {
    guards.push_back(cse.guard);
    type_cases.push_back(
        and_({cse.guard, r_has(0, cse.result == TyKind::Nat ? Ty::nat()
                                                            : Ty::int_())}));
    value_cases.push_back(and_({cse.guard, veq(r_(0), value_of(cse.result))}));
  }
  if (with_mutez) {
    FormulaP g = mutez_guard();
    guards.push_back(g);
    type_cases.push_back(and_({g, r_has(0, Ty::mutez())}));
    // On success the checked result is in range by construction.
    value_cases.push_back(and_({g, veq(r_(0), value_of(TyKind::Mutez))}));
  }
  return make(op, 2, {or_(guards)},
              {len_delta(-1), or_(type_cases), frame_vals(1, 1),
               frame_tys(1, 1), or_(value_cases)},
              /*may_fail=*/with_mutez);
}

OpcodeContract sign_test_contract(Opcode op, CmpOp test) {
  return make(op, 1, {s_has(0, Ty::int_())},
              {len_delta(0),
               veq(r_(0), mk_bool(cmp(test, numv(0), c_(0)))),
               r_has(0, Ty::bool_()), frame_vals(1, 0)});
}

OpcodeContract compare_macro_contract(Opcode op, CmpOp test) {
  return make(op, 2,
              {teq(ty_s(0), ty_s(1)), ty_comparable(ty_s(0))},
              {len_delta(-1),
               veq(r_(0), mk_bool(cmp(test, compare_app(s_(0), s_(1)), c_(0)))),
               r_has(0, Ty::bool_()), frame_vals(1, 1)});
}

OpcodeContract hash_contract(Opcode op, const char *tag) {
  return make(op, 1, {s_has(0, Ty::bytes())},
              {len_delta(0), frame_vals(1, 0), r_has(0, Ty::bytes()),
               frame_tys(1, 0), veq(r_(0), crypto_app(tag, s_(0)))});
}

OpcodeContract context_push_contract(Opcode op, Ty result_ty) {
  return make(op, 0, {},
              {len_delta(1), r_has(0, std::move(result_ty)), frame_vals(1, -1)});
}

ContractTable build_table() {
  ContractTable t;
  auto put = [&](OpcodeContract c) { t.emplace(c.op, std::move(c)); };

  // --- pairs and sums ---
  put(make(Opcode::Car, 1, {ty_is(ty_s(0), TyKind::Pair)},
           {len_delta(0), veq(r_(0), fst(s_(0))), frame_vals(1, 0)}));
  put(make(Opcode::Cdr, 1, {ty_is(ty_s(0), TyKind::Pair)},
           {len_delta(0), veq(r_(0), snd(s_(0))), frame_vals(1, 0)}));
  put(make(Opcode::Pair_, 2, {},
           {len_delta(-1), veq(r_(0), mk_pair(s_(0), s_(1))),
            frame_vals(1, 1)}));
  put(make(Opcode::Unpair, 1, {ty_is(ty_s(0), TyKind::Pair)},
           {len_delta(1), veq(r_(0), fst(s_(0))), veq(r_(1), snd(s_(0))),
            frame_vals(2, -1)}));
  put(make(Opcode::Some_, 1, {},
           {len_delta(0), veq(r_(0), mk_some(s_(0))), frame_vals(1, 0)}));
  put(make(Opcode::None_, 0, {},
           {len_delta(1), veq(r_(0), mk_none(operand_ty(0))),
            frame_vals(1, -1)}));
  put(make(Opcode::Left, 1, {},
           {len_delta(0), veq(r_(0), mk_left(s_(0), operand_ty(0))),
            frame_vals(1, 0)}));
  put(make(Opcode::Right, 1, {},
           {len_delta(0), veq(r_(0), mk_right(s_(0), operand_ty(0))),
            frame_vals(1, 0)}));

  // --- stack shuffling ---
  {
    TermP n = operand_num(1);
    put(make(Opcode::Dup, 0,
             {len_ge(n), cmp(CmpOp::Ge, n, c_(1))},
             {len_delta(1), veq(r_(0), slot("s", sub(n, c_(1)))),
              frame_vals(1, -1)}));
  }
  put(make(Opcode::Swap, 2, {},
           {len_delta(0), veq(r_(0), s_(1)), veq(r_(1), s_(0)),
            frame_vals(2, 0)}));
  {
    TermP n = operand_num(0);
    put(make(Opcode::Dig, 0, {len_ge(add(n, c_(1)))},
             {len_delta(0), veq(r_(0), slot("s", n)),
              forall_idx("i", c_(1), add(n, c_(1)),
                         veq(slot("result", int_var("i")),
                             slot("s", sub(int_var("i"), c_(1))))),
              forall_idx("i", add(n, c_(1)), len_r(),
                         veq(slot("result", int_var("i")),
                             slot("s", int_var("i"))))}));
    put(make(Opcode::Dug, 0, {len_ge(add(n, c_(1)))},
             {len_delta(0), veq(slot("result", n), s_(0)),
              forall_idx("i", c_(0), n,
                         veq(slot("result", int_var("i")),
                             slot("s", add(int_var("i"), c_(1))))),
              forall_idx("i", add(n, c_(1)), len_r(),
                         veq(slot("result", int_var("i")),
                             slot("s", int_var("i"))))}));
    TermP d = operand_num(1);
    put(make(Opcode::Drop, 0, {len_ge(d)},
             {cmp(CmpOp::Eq, len_r(), sub(len_s(), d)),
              forall_idx("i", c_(0), len_r(),
                         veq(slot("result", int_var("i")),
                             slot("s", add(int_var("i"), d))))}));
  }

  // --- literals ---
  put(make(Opcode::Push, 0, {},
           {len_delta(1), veq(r_(0), operand_value(0)), frame_vals(1, -1)}));
  put(make(Opcode::Unit, 0, {},
           {len_delta(1), veq(r_(0), mk_unit()), frame_vals(1, -1)}));
  put(make(Opcode::Nil, 0, {},
           {len_delta(1), veq(r_(0), mk_nil(operand_ty(0))),
            frame_vals(1, -1)}));
  put(make(Opcode::Cons, 2,
           {ty_is(ty_s(1), TyKind::List), teq(ty_arg(ty_s(1), 0), ty_s(0))},
           {len_delta(-1), veq(r_(0), mk_cons(s_(0), s_(1))),
            frame_vals(1, 1)}));

  // --- comparison ---
  put(make(Opcode::Compare, 2,
           {teq(ty_s(0), ty_s(1)), ty_comparable(ty_s(0))},
           {len_delta(-1),
            veq(r_(0), mk_num(TyKind::Int, compare_app(s_(0), s_(1)))),
            r_has(0, Ty::int_()), frame_vals(1, 1)}));
  put(sign_test_contract(Opcode::Eq, CmpOp::Eq));
  put(sign_test_contract(Opcode::Neq, CmpOp::Ne));
  put(sign_test_contract(Opcode::Lt, CmpOp::Lt));
  put(sign_test_contract(Opcode::Le, CmpOp::Le));
  put(sign_test_contract(Opcode::Gt, CmpOp::Gt));
  put(sign_test_contract(Opcode::Ge, CmpOp::Ge));
  put(compare_macro_contract(Opcode::CmpEq, CmpOp::Eq));
  put(compare_macro_contract(Opcode::CmpNeq, CmpOp::Ne));
  put(compare_macro_contract(Opcode::CmpLt, CmpOp::Lt));
  put(compare_macro_contract(Opcode::CmpLe, CmpOp::Le));
  put(compare_macro_contract(Opcode::CmpGt, CmpOp::Gt));
  put(compare_macro_contract(Opcode::CmpGe, CmpOp::Ge));

  // --- arithmetic ---
  put(arith_contract(Opcode::Add, ArithOp::Add, TyKind::Nat, true));
  put(arith_contract(Opcode::Sub, ArithOp::Sub, TyKind::Int, true));
  put(arith_contract(Opcode::Mul, ArithOp::Mul, TyKind::Nat, false));
  {
    // EDIV: quotient is nat only for nat/nat operands; remainder is nat.
    std::vector<FormulaP> guards, cases;
    for (const ArithCase &cse : int_nat_cases(TyKind::Nat)) {
      guards.push_back(cse.guard);
      Ty q_ty = cse.result == TyKind::Nat ? Ty::nat() : Ty::int_();
      Ty opt_ty = Ty::option(Ty::pair(q_ty, Ty::nat()));
      FormulaP division = veq(
          r_(0), mk_some(mk_pair(mk_num(cse.result == TyKind::Nat
                                            ? TyKind::Nat
                                            : TyKind::Int,
                                        ediv(numv(0), numv(1))),
                                 mk_num(TyKind::Nat, emod(numv(0), numv(1))))));
      FormulaP by_zero = veq(r_(0), mk_none(ty_const(Ty::pair(q_ty, Ty::nat()))));
      cases.push_back(and_(
          {cse.guard, r_has(0, opt_ty),
           implies(cmp(CmpOp::Ne, numv(1), c_(0)), division),
           implies(cmp(CmpOp::Eq, numv(1), c_(0)), by_zero)}));
    }
    put(make(Opcode::Ediv, 2, {or_(guards)},
             {len_delta(-1), or_(cases), frame_vals(1, 1)}));
  }
  put(make(Opcode::Neg, 1,
           {or_({s_has(0, Ty::int_()), s_has(0, Ty::nat())})},
           {len_delta(0), veq(r_(0), mk_num(TyKind::Int, sub(c_(0), numv(0)))),
            r_has(0, Ty::int_()), frame_vals(1, 0)}));
  put(make(Opcode::Abs, 1, {s_has(0, Ty::int_())},
           {len_delta(0),
            veq(r_(0), mk_num(TyKind::Nat,
                              ite_int(cmp(CmpOp::Lt, numv(0), c_(0)),
                                      sub(c_(0), numv(0)), numv(0)))),
            r_has(0, Ty::nat()), frame_vals(1, 0)}));
  put(make(Opcode::Isnat, 1, {s_has(0, Ty::int_())},
           {len_delta(0),
            implies(cmp(CmpOp::Ge, numv(0), c_(0)),
                    veq(r_(0), mk_some(mk_num(TyKind::Nat, numv(0))))),
            implies(cmp(CmpOp::Lt, numv(0), c_(0)),
                    veq(r_(0), mk_none(ty_const(Ty::nat())))),
            r_has(0, Ty::option(Ty::nat())), frame_vals(1, 0)}));
  put(make(Opcode::Int_, 1, {s_has(0, Ty::nat())},
           {len_delta(0), veq(r_(0), mk_num(TyKind::Int, numv(0))),
            r_has(0, Ty::int_()), frame_vals(1, 0)}));

  // --- booleans ---
  {
    FormulaP both_bool =
        and_({s_has(0, Ty::bool_()), s_has(1, Ty::bool_())});
    auto boolean = [&](Opcode op, FormulaP payload) {
      return make(op, 2, {both_bool},
                  {len_delta(-1), veq(r_(0), mk_bool(std::move(payload))),
                   r_has(0, Ty::bool_()), frame_vals(1, 1)});
    };
    put(boolean(Opcode::And, and_({bool_of(s_(0)), bool_of(s_(1))})));
    put(boolean(Opcode::Or_, or_({bool_of(s_(0)), bool_of(s_(1))})));
    put(boolean(Opcode::Xor,
                not_(iff(bool_of(s_(0)), bool_of(s_(1))))));
    put(make(Opcode::Not, 1, {s_has(0, Ty::bool_())},
             {len_delta(0), veq(r_(0), mk_bool(not_(bool_of(s_(0))))),
              r_has(0, Ty::bool_()), frame_vals(1, 0)}));
  }

  // --- containers (abstracted: shapes and types, not contents) ---
  {
    auto keyed = [&](TyKind container) {
      return and_({ty_is(ty_s(1), container), teq(ty_arg(ty_s(1), 0), ty_s(0))});
    };
    put(make(Opcode::Mem, 2,
             {or_({keyed(TyKind::Set), keyed(TyKind::Map),
                   keyed(TyKind::BigMap)})},
             {len_delta(-1), r_has(0, Ty::bool_()), frame_vals(1, 1)}));
    put(make(Opcode::Get, 2,
             {or_({keyed(TyKind::Map), keyed(TyKind::BigMap)})},
             {len_delta(-1), ty_is(ty_r(0), TyKind::Option),
              teq(ty_arg(ty_r(0), 0), ty_arg(ty_s(1), 1)),
              frame_vals(1, 1)}));
    FormulaP upd_set =
        and_({ty_is(ty_s(2), TyKind::Set), teq(ty_arg(ty_s(2), 0), ty_s(0)),
              s_has(1, Ty::bool_())});
    auto upd_map = [&](TyKind container) {
      return and_({ty_is(ty_s(2), container),
                   teq(ty_arg(ty_s(2), 0), ty_s(0)),
                   ty_is(ty_s(1), TyKind::Option),
                   teq(ty_arg(ty_s(1), 0), ty_arg(ty_s(2), 1))});
    };
    put(make(Opcode::Update, 3,
             {or_({upd_set, upd_map(TyKind::Map), upd_map(TyKind::BigMap)})},
             {len_delta(-2), teq(ty_r(0), ty_s(2)), frame_vals(1, 2)}));
    put(make(Opcode::Size, 1,
             {or_({ty_is(ty_s(0), TyKind::String), ty_is(ty_s(0), TyKind::Bytes),
                   ty_is(ty_s(0), TyKind::List), ty_is(ty_s(0), TyKind::Set),
                   ty_is(ty_s(0), TyKind::Map)})},
             {len_delta(0), r_has(0, Ty::nat()),
              cmp(CmpOp::Ge, num_of(r_(0)), c_(0)), frame_vals(1, 0)}));
    put(make(Opcode::Concat, 2,
             {or_({and_({s_has(0, Ty::string()), s_has(1, Ty::string())}),
                   and_({s_has(0, Ty::bytes()), s_has(1, Ty::bytes())})})},
             {len_delta(-1), teq(ty_r(0), ty_s(0)), frame_vals(1, 1)}));
  }

  // --- failure ---
  {
    OpcodeContract fail;
    fail.op = Opcode::Failwith;
    fail.requires_ = {fuel_pos(), len_ge(1)};
    fail.may_fail = true; // never returns a stack
    put(std::move(fail));
  }

  // --- crypto and serialization (abstract) ---
  put(hash_contract(Opcode::Sha256, "sha256"));
  put(hash_contract(Opcode::Sha512, "sha512"));
  put(hash_contract(Opcode::Blake2b, "blake2b"));
  put(make(Opcode::HashKey, 1, {s_has(0, Ty::key())},
           {len_delta(0), veq(r_(0), crypto_app("hash_key", s_(0))),
            r_has(0, Ty::key_hash()), frame_vals(1, 0)}));
  put(make(Opcode::CheckSignature, 3,
           {s_has(0, Ty::key()), s_has(1, Ty::signature()),
            s_has(2, Ty::bytes())},
           {len_delta(-2),
            veq(r_(0), mk_bool(sig_valid(s_(0), s_(1), s_(2)))),
            r_has(0, Ty::bool_()), frame_vals(1, 2)}));
  put(make(Opcode::Pack, 1, {},
           {len_delta(0), veq(r_(0), crypto_app("pack", s_(0))),
            r_has(0, Ty::bytes()), frame_vals(1, 0)}));
  put(make(Opcode::Unpack, 1, {s_has(0, Ty::bytes())},
           {len_delta(0), ty_is(ty_r(0), TyKind::Option),
            teq(ty_arg(ty_r(0), 0), operand_ty(0)), frame_vals(1, 0)}));

  // --- chain context ---
  put(context_push_contract(Opcode::Amount, Ty::mutez()));
  put(context_push_contract(Opcode::Balance, Ty::mutez()));
  put(context_push_contract(Opcode::Now, Ty::timestamp()));
  put(context_push_contract(Opcode::Sender, Ty::address()));
  put(context_push_contract(Opcode::Source, Ty::address()));
  put(context_push_contract(Opcode::ChainId_, Ty::chain_id()));
  put(make(Opcode::Self, 0, {},
           {len_delta(1), ty_is(ty_r(0), TyKind::Contract),
            frame_vals(1, -1)}));
  put(make(Opcode::TransferTokens, 3,
           {s_has(1, Ty::mutez()), ty_is(ty_s(2), TyKind::Contract),
            teq(ty_s(0), ty_arg(ty_s(2), 0))},
           {len_delta(-2), r_has(0, Ty::operation()), frame_vals(1, 2)}));
  put(make(Opcode::SetDelegate, 1,
           {s_has(0, Ty::option(Ty::key_hash()))},
           {len_delta(0), r_has(0, Ty::operation()), frame_vals(1, 0)}));

  return t;
}

} // namespace

const ContractTable &contract_table() {
  static const ContractTable table = build_table();
  return table;
}

const OpcodeContract &contract_of(Opcode op) {
  const ContractTable &t = contract_table();
  auto it = t.find(op);
  if (it == t.end())
    throw EvalError(std::string("no axiomatic contract for opcode ") +
                    opcode_name(op));
  return it->second;
}

bool has_contract(Opcode op) { return contract_table().count(op) != 0; }

std::string print_contract(const OpcodeContract &c) {
  std::string out = std::string("contract ") + opcode_name(c.op) + ":\n";
  out += std::string("  may_fail: ") + (c.may_fail ? "true" : "false") + "\n";
  for (const FormulaP &f : c.requires_)
    out += "  requires " + print_formula(f) + "\n";
  for (const FormulaP &f : c.ensures_)
    out += "  ensures " + print_formula(f) + "\n";
  return out;
}

} // namespace tzv
