// SPDX-License-Identifier: Apache-2.0

#include "tzv/formula.hpp"

#include "tzv/errors.hpp"

namespace tzv {

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

namespace fb {

namespace {

std::shared_ptr<Term> term(TermKind kind, Sort sort) {
  auto t = std::make_shared<Term>();
  t->kind = kind;
  t->sort = sort;
  return t;
}

std::shared_ptr<Formula> formula(FormulaKind kind) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  return f;
}

} // namespace

TermP int_const(BigInt v) {
  auto t = term(TermKind::IntConst, Sort::IntS);
  t->ival = std::move(v);
  return t;
}

TermP int_var(std::string name) {
  auto t = term(TermKind::IntVar, Sort::IntS);
  t->name = std::move(name);
  return t;
}

TermP arith(ArithOp op, TermP a, TermP b) {
  auto t = term(TermKind::Arith, Sort::IntS);
  t->aop = op;
  t->args = {std::move(a), std::move(b)};
  return t;
}

TermP add(TermP a, TermP b) { return arith(ArithOp::Add, std::move(a), std::move(b)); }
TermP sub(TermP a, TermP b) { return arith(ArithOp::Sub, std::move(a), std::move(b)); }
TermP mul(TermP a, TermP b) { return arith(ArithOp::Mul, std::move(a), std::move(b)); }
TermP ediv(TermP a, TermP b) { return arith(ArithOp::Div, std::move(a), std::move(b)); }
TermP emod(TermP a, TermP b) { return arith(ArithOp::Mod, std::move(a), std::move(b)); }

TermP length(std::string stack) {
  auto t = term(TermKind::Length, Sort::IntS);
  t->name = std::move(stack);
  return t;
}

TermP num_of(TermP v) {
  auto t = term(TermKind::NumOf, Sort::IntS);
  t->args = {std::move(v)};
  return t;
}

TermP compare_app(TermP a, TermP b) {
  auto t = term(TermKind::CompareApp, Sort::IntS);
  t->args = {std::move(a), std::move(b)};
  return t;
}

TermP logic_app(std::string name, std::vector<TermP> args) {
  auto t = term(TermKind::LogicApp, Sort::IntS);
  t->name = std::move(name);
  t->args = std::move(args);
  return t;
}

TermP ite_int(FormulaP cond, TermP then_t, TermP else_t) {
  auto t = term(TermKind::IteInt, Sort::IntS);
  t->fml = std::move(cond);
  t->args = {std::move(then_t), std::move(else_t)};
  return t;
}

TermP operand_num(long long default_value) {
  auto t = term(TermKind::OperandNum, Sort::IntS);
  t->ival = default_value;
  return t;
}

TermP slot(std::string stack, TermP index) {
  auto t = term(TermKind::Slot, Sort::ValueS);
  t->name = std::move(stack);
  t->args = {std::move(index)};
  return t;
}

TermP slot(std::string stack, long long index) {
  return slot(std::move(stack), int_const(index));
}

TermP sym_const(std::string name, Ty ty) {
  auto t = term(TermKind::SymConst, Sort::ValueS);
  t->name = std::move(name);
  t->tyt = ty_const(std::move(ty));
  return t;
}

TermP value_const(Value v) {
  auto t = term(TermKind::ValueConst, Sort::ValueS);
  t->val = std::move(v);
  return t;
}

TermP operand_value(int idx) {
  auto t = term(TermKind::OperandValue, Sort::ValueS);
  t->opidx = idx;
  return t;
}

TermP mk_num(TyKind kind, TermP payload) {
  auto t = term(TermKind::MkNum, Sort::ValueS);
  t->numkind = kind;
  t->args = {std::move(payload)};
  return t;
}

TermP mk_bool(FormulaP payload) {
  auto t = term(TermKind::MkBool, Sort::ValueS);
  t->fml = std::move(payload);
  return t;
}

TermP mk_pair(TermP a, TermP b) {
  auto t = term(TermKind::MkPair, Sort::ValueS);
  t->args = {std::move(a), std::move(b)};
  return t;
}

TermP mk_some(TermP inner) {
  auto t = term(TermKind::MkSome, Sort::ValueS);
  t->args = {std::move(inner)};
  return t;
}

TermP mk_none(TyTermP elem) {
  auto t = term(TermKind::MkNone, Sort::ValueS);
  t->tyt = std::move(elem);
  return t;
}

TermP mk_left(TermP inner, TyTermP right_ty) {
  auto t = term(TermKind::MkLeft, Sort::ValueS);
  t->args = {std::move(inner)};
  t->tyt = std::move(right_ty);
  return t;
}

TermP mk_right(TermP inner, TyTermP left_ty) {
  auto t = term(TermKind::MkRight, Sort::ValueS);
  t->args = {std::move(inner)};
  t->tyt = std::move(left_ty);
  return t;
}

TermP mk_unit() { return term(TermKind::MkUnit, Sort::ValueS); }

TermP mk_nil(TyTermP elem) {
  auto t = term(TermKind::MkNil, Sort::ValueS);
  t->tyt = std::move(elem);
  return t;
}

TermP mk_cons(TermP head, TermP tail) {
  auto t = term(TermKind::MkCons, Sort::ValueS);
  t->args = {std::move(head), std::move(tail)};
  return t;
}

TermP fst(TermP v) {
  auto t = term(TermKind::Fst, Sort::ValueS);
  t->args = {std::move(v)};
  return t;
}

TermP snd(TermP v) {
  auto t = term(TermKind::Snd, Sort::ValueS);
  t->args = {std::move(v)};
  return t;
}

TermP crypto_app(std::string tag, TermP input) {
  auto t = term(TermKind::CryptoApp, Sort::ValueS);
  t->name = std::move(tag);
  t->args = {std::move(input)};
  return t;
}

TyTermP ty_const(Ty ty) {
  auto t = std::make_shared<TyTerm>();
  t->kind = TyTermKind::TyConst;
  t->ty = std::move(ty);
  return t;
}

TyTermP typ_infer_t(TermP v) {
  auto t = std::make_shared<TyTerm>();
  t->kind = TyTermKind::TypInfer;
  t->value = std::move(v);
  return t;
}

TyTermP ty_arg(TyTermP inner, int idx) {
  auto t = std::make_shared<TyTerm>();
  t->kind = TyTermKind::TyArg;
  t->inner = std::move(inner);
  t->idx = idx;
  return t;
}

TyTermP operand_ty(int idx) {
  auto t = std::make_shared<TyTerm>();
  t->kind = TyTermKind::OperandTy;
  t->idx = idx;
  return t;
}

FormulaP bool_const(bool b) {
  auto f = formula(FormulaKind::BoolConst);
  f->bval = b;
  return f;
}

FormulaP cmp(CmpOp op, TermP a, TermP b) {
  auto f = formula(FormulaKind::Cmp);
  f->cmp = op;
  f->terms = {std::move(a), std::move(b)};
  return f;
}

FormulaP eq(TermP a, TermP b) { return cmp(CmpOp::Eq, std::move(a), std::move(b)); }

FormulaP veq(TermP a, TermP b) {
  auto f = formula(FormulaKind::VEq);
  f->terms = {std::move(a), std::move(b)};
  return f;
}

FormulaP teq(TyTermP a, TyTermP b) {
  auto f = formula(FormulaKind::TEq);
  f->tyterms = {std::move(a), std::move(b)};
  return f;
}

FormulaP ty_is(TyTermP t, TyKind kind) {
  auto f = formula(FormulaKind::TyIs);
  f->tykind = kind;
  f->tyterms = {std::move(t)};
  return f;
}

FormulaP ty_comparable(TyTermP t) {
  auto f = formula(FormulaKind::TyComparable);
  f->tyterms = {std::move(t)};
  return f;
}

FormulaP and_(std::vector<FormulaP> fs) {
  if (fs.size() == 1)
    return fs[0];
  auto f = formula(FormulaKind::And);
  f->children = std::move(fs);
  return f;
}

FormulaP or_(std::vector<FormulaP> fs) {
  if (fs.size() == 1)
    return fs[0];
  auto f = formula(FormulaKind::Or);
  f->children = std::move(fs);
  return f;
}

FormulaP not_(FormulaP inner) {
  auto f = formula(FormulaKind::Not);
  f->children = {std::move(inner)};
  return f;
}

FormulaP implies(FormulaP a, FormulaP b) {
  auto f = formula(FormulaKind::Implies);
  f->children = {std::move(a), std::move(b)};
  return f;
}

FormulaP iff(FormulaP a, FormulaP b) {
  auto f = formula(FormulaKind::Iff);
  f->children = {std::move(a), std::move(b)};
  return f;
}

FormulaP forall_idx(std::string var, TermP lo, TermP hi, FormulaP body) {
  auto f = formula(FormulaKind::ForallIdx);
  f->var = std::move(var);
  f->lo = std::move(lo);
  f->hi = std::move(hi);
  f->children = {std::move(body)};
  return f;
}

FormulaP bool_of(TermP v) {
  auto f = formula(FormulaKind::BoolOf);
  f->terms = {std::move(v)};
  return f;
}

FormulaP sig_valid(TermP key, TermP sig, TermP payload) {
  auto f = formula(FormulaKind::SigValid);
  f->terms = {std::move(key), std::move(sig), std::move(payload)};
  return f;
}

} // namespace fb

// ---------------------------------------------------------------------------
// Logic table
// ---------------------------------------------------------------------------

namespace {

// Every self-call must decrease the same parameter by a positive constant.
void check_decreasing(const LogicFunction &fn) {
  std::vector<const Term *> calls;
  std::function<void(const TermP &)> scan_term;
  std::function<void(const FormulaP &)> scan_formula = [&](const FormulaP &f) {
    if (!f)
      return;
    for (const TermP &t : f->terms)
      scan_term(t);
    if (f->lo)
      scan_term(f->lo);
    if (f->hi)
      scan_term(f->hi);
    for (const FormulaP &c : f->children)
      scan_formula(c);
  };
  scan_term = [&](const TermP &t) {
    if (!t)
      return;
    if (t->kind == TermKind::LogicApp && t->name == fn.name)
      calls.push_back(t.get());
    for (const TermP &a : t->args)
      scan_term(a);
    if (t->fml)
      scan_formula(t->fml);
  };
  scan_term(fn.body);
  if (calls.empty())
    return;

  auto decreases_at = [&](std::size_t param_idx) {
    for (const Term *call : calls) {
      if (call->args.size() != fn.params.size())
        return false;
      const TermP &arg = call->args[param_idx];
      if (arg->kind != TermKind::Arith || arg->aop != ArithOp::Sub)
        return false;
      const TermP &base = arg->args[0];
      const TermP &delta = arg->args[1];
      if (base->kind != TermKind::IntVar ||
          base->name != fn.params[param_idx])
        return false;
      if (delta->kind != TermKind::IntConst || delta->ival <= 0)
        return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < fn.params.size(); ++i)
    if (decreases_at(i))
      return;
  throw SpecError("logic function '" + fn.name +
                  "' is not primitive-recursive: recursive calls must "
                  "decrease one fixed argument by a positive constant");
}

} // namespace

void LogicTable::declare(LogicFunction fn) {
  if (find(fn.name))
    throw SpecError("logic function '" + fn.name + "' declared twice");
  check_decreasing(fn);
  fns_.push_back(std::move(fn));
}

const LogicFunction *LogicTable::find(const std::string &name) const {
  for (const LogicFunction &f : fns_)
    if (f.name == name)
      return &f;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

BigInt euclid_div(const BigInt &a, const BigInt &b) {
  if (b == 0)
    throw EvalError("division by zero");
  BigInt q = a / b;
  BigInt r = a - b * q;
  if (r < 0)
    q += (b > 0) ? -1 : 1;
  return q;
}

BigInt euclid_mod(const BigInt &a, const BigInt &b) {
  if (b == 0)
    throw EvalError("division by zero");
  BigInt r = a % b;
  if (r < 0)
    r += (b > 0) ? b : -b;
  return r;
}

namespace {

constexpr int kMaxLogicDepth = 100000;

struct LogicDepthGuard {
  int &depth;
  explicit LogicDepthGuard(int &d) : depth(d) {
    if (++depth > kMaxLogicDepth)
      throw EvalError("logic function recursion too deep");
  }
  ~LogicDepthGuard() { --depth; }
};

thread_local int g_logic_depth = 0;

const Stack &lookup_stack(const std::string &name, EvalEnv &env) {
  auto it = env.stacks.find(name);
  if (it == env.stacks.end() || !it->second)
    throw EvalError("unbound stack variable '" + name + "'");
  return *it->second;
}

} // namespace

BigInt eval_int_term(const TermP &t, EvalEnv &env) {
  switch (t->kind) {
  case TermKind::IntConst:
    return t->ival;
  case TermKind::IntVar: {
    auto it = env.ints.find(t->name);
    if (it == env.ints.end())
      throw EvalError("unbound integer variable '" + t->name + "'");
    return it->second;
  }
  case TermKind::Arith: {
    BigInt a = eval_int_term(t->args[0], env);
    BigInt b = eval_int_term(t->args[1], env);
    switch (t->aop) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
    case ArithOp::Div:
      return euclid_div(a, b);
    case ArithOp::Mod:
      return euclid_mod(a, b);
    }
    throw EvalError("bad arithmetic operator");
  }
  case TermKind::Length:
    return BigInt(lookup_stack(t->name, env).size());
  case TermKind::NumOf: {
    Value v = eval_value_term(t->args[0], env);
    switch (v.kind()) {
    case ValueKind::IntV:
    case ValueKind::NatV:
    case ValueKind::MutezV:
    case ValueKind::TimestampV:
      return v.num();
    default:
      throw EvalError("numeric payload of non-numeric value " +
                      print_value(v));
    }
  }
  case TermKind::CompareApp: {
    Value a = eval_value_term(t->args[0], env);
    Value b = eval_value_term(t->args[1], env);
    return BigInt(compare(a, b));
  }
  case TermKind::LogicApp: {
    if (!env.logic)
      throw EvalError("no logic context for function '" + t->name + "'");
    const LogicFunction *fn = env.logic->find(t->name);
    if (!fn)
      throw EvalError("unknown logic function '" + t->name + "'");
    if (fn->params.size() != t->args.size())
      throw EvalError("logic function '" + t->name + "' arity mismatch");
    std::vector<BigInt> args;
    args.reserve(t->args.size());
    for (const TermP &a : t->args)
      args.push_back(eval_int_term(a, env));
    LogicDepthGuard guard(g_logic_depth);
    // Bind parameters in a scratch frame, restoring previous bindings after.
    std::vector<std::pair<std::string, std::optional<BigInt>>> saved;
    for (std::size_t i = 0; i < args.size(); ++i) {
      auto it = env.ints.find(fn->params[i]);
      saved.emplace_back(fn->params[i],
                         it == env.ints.end()
                             ? std::nullopt
                             : std::optional<BigInt>(it->second));
      env.ints[fn->params[i]] = args[i];
    }
    BigInt result = eval_int_term(fn->body, env);
    for (auto &[name, old] : saved) {
      if (old)
        env.ints[name] = *old;
      else
        env.ints.erase(name);
    }
    return result;
  }
  case TermKind::IteInt:
    return eval_formula(t->fml, env) ? eval_int_term(t->args[0], env)
                                     : eval_int_term(t->args[1], env);
  case TermKind::OperandNum:
    if (env.operands && env.operands->num)
      return BigInt(*env.operands->num);
    return t->ival; // the instruction's default
  default:
    throw EvalError("expected integer term");
  }
}

Value eval_value_term(const TermP &t, EvalEnv &env) {
  switch (t->kind) {
  case TermKind::Slot: {
    const Stack &s = lookup_stack(t->name, env);
    BigInt idx = eval_int_term(t->args[0], env);
    if (idx < 0 || idx >= BigInt(s.size()))
      throw EvalError("stack index " + idx.str() + " out of bounds for '" +
                      t->name + "'");
    return s.at(idx.convert_to<std::size_t>());
  }
  case TermKind::SymConst: {
    auto it = env.values.find(t->name);
    if (it == env.values.end())
      throw EvalError("unbound symbolic constant '" + t->name + "'");
    return it->second;
  }
  case TermKind::ValueConst:
    return t->val;
  case TermKind::OperandValue: {
    if (!env.operands || t->opidx >= static_cast<int>(env.operands->values.size()))
      throw EvalError("no literal operand bound at index " +
                      std::to_string(t->opidx));
    return env.operands->values[t->opidx];
  }
  case TermKind::MkNum: {
    BigInt payload = eval_int_term(t->args[0], env);
    try {
      switch (t->numkind) {
      case TyKind::Int:
        return Value::int_(payload);
      case TyKind::Nat:
        return Value::nat(payload);
      case TyKind::Mutez:
        return Value::mutez(payload);
      case TyKind::Timestamp:
        return Value::timestamp(payload);
      default:
        throw EvalError("bad numeric constructor");
      }
    } catch (const ValueError &e) {
      throw EvalError(std::string("numeric constructor failed: ") + e.what());
    }
  }
  case TermKind::MkBool:
    return Value::bool_(eval_formula(t->fml, env));
  case TermKind::MkPair:
    return Value::pair(eval_value_term(t->args[0], env),
                       eval_value_term(t->args[1], env));
  case TermKind::MkSome:
    return Value::some(eval_value_term(t->args[0], env));
  case TermKind::MkNone:
    return Value::none(eval_ty_term(t->tyt, env));
  case TermKind::MkLeft:
    return Value::left(eval_value_term(t->args[0], env),
                       eval_ty_term(t->tyt, env));
  case TermKind::MkRight:
    return Value::right(eval_value_term(t->args[0], env),
                        eval_ty_term(t->tyt, env));
  case TermKind::MkUnit:
    return Value::unit();
  case TermKind::MkNil:
    return Value::list({}, eval_ty_term(t->tyt, env));
  case TermKind::MkCons: {
    Value head = eval_value_term(t->args[0], env);
    Value tail = eval_value_term(t->args[1], env);
    if (tail.kind() != ValueKind::ListV)
      throw EvalError("cons onto non-list");
    std::vector<Value> elems;
    elems.push_back(std::move(head));
    elems.insert(elems.end(), tail.children().begin(), tail.children().end());
    return Value::list(std::move(elems), tail.tys().at(0));
  }
  case TermKind::Fst: {
    Value v = eval_value_term(t->args[0], env);
    if (v.kind() != ValueKind::PairV)
      throw EvalError("fst of non-pair " + print_value(v));
    return v.child(0);
  }
  case TermKind::Snd: {
    Value v = eval_value_term(t->args[0], env);
    if (v.kind() != ValueKind::PairV)
      throw EvalError("snd of non-pair " + print_value(v));
    return v.child(1);
  }
  case TermKind::CryptoApp:
    return crypto_result(t->name, eval_value_term(t->args[0], env));
  default:
    throw EvalError("expected value term");
  }
}

Ty eval_ty_term(const TyTermP &t, EvalEnv &env) {
  switch (t->kind) {
  case TyTermKind::TyConst:
    return t->ty;
  case TyTermKind::TypInfer:
    return typ_infer(eval_value_term(t->value, env));
  case TyTermKind::TyArg: {
    Ty inner = eval_ty_term(t->inner, env);
    if (t->idx >= static_cast<int>(inner.args().size()))
      throw EvalError("type argument index out of range for " +
                      inner.to_string());
    return inner.arg(t->idx);
  }
  case TyTermKind::OperandTy:
    if (!env.operands || t->idx >= static_cast<int>(env.operands->tys.size()))
      throw EvalError("no type operand bound at index " +
                      std::to_string(t->idx));
    return env.operands->tys[t->idx];
  }
  throw EvalError("bad type term");
}

bool eval_formula(const FormulaP &f, EvalEnv &env) {
  switch (f->kind) {
  case FormulaKind::BoolConst:
    return f->bval;
  case FormulaKind::Cmp: {
    BigInt a = eval_int_term(f->terms[0], env);
    BigInt b = eval_int_term(f->terms[1], env);
    switch (f->cmp) {
    case CmpOp::Eq:
      return a == b;
    case CmpOp::Ne:
      return a != b;
    case CmpOp::Lt:
      return a < b;
    case CmpOp::Le:
      return a <= b;
    case CmpOp::Gt:
      return a > b;
    case CmpOp::Ge:
      return a >= b;
    }
    throw EvalError("bad comparison operator");
  }
  case FormulaKind::VEq:
    return eval_value_term(f->terms[0], env) ==
           eval_value_term(f->terms[1], env);
  case FormulaKind::TEq:
    return eval_ty_term(f->tyterms[0], env) == eval_ty_term(f->tyterms[1], env);
  case FormulaKind::TyIs:
    return eval_ty_term(f->tyterms[0], env).kind() == f->tykind;
  case FormulaKind::TyComparable:
    return eval_ty_term(f->tyterms[0], env).is_comparable();
  case FormulaKind::And:
    for (const FormulaP &c : f->children)
      if (!eval_formula(c, env))
        return false;
    return true;
  case FormulaKind::Or:
    for (const FormulaP &c : f->children)
      if (eval_formula(c, env))
        return true;
    return false;
  case FormulaKind::Not:
    return !eval_formula(f->children[0], env);
  case FormulaKind::Implies:
    return !eval_formula(f->children[0], env) ||
           eval_formula(f->children[1], env);
  case FormulaKind::Iff:
    return eval_formula(f->children[0], env) == eval_formula(f->children[1], env);
  case FormulaKind::ForallIdx: {
    BigInt lo = eval_int_term(f->lo, env);
    BigInt hi = eval_int_term(f->hi, env);
    auto saved = env.ints.find(f->var) != env.ints.end()
                     ? std::optional<BigInt>(env.ints[f->var])
                     : std::nullopt;
    bool ok = true;
    for (BigInt i = lo; i < hi; ++i) {
      env.ints[f->var] = i;
      if (!eval_formula(f->children[0], env)) {
        ok = false;
        break;
      }
    }
    if (saved)
      env.ints[f->var] = *saved;
    else
      env.ints.erase(f->var);
    return ok;
  }
  case FormulaKind::BoolOf: {
    Value v = eval_value_term(f->terms[0], env);
    if (v.kind() != ValueKind::BoolV)
      throw EvalError("boolean payload of non-bool value " + print_value(v));
    return v.flag();
  }
  case FormulaKind::SigValid: {
    Value key = eval_value_term(f->terms[0], env);
    Value sig = eval_value_term(f->terms[1], env);
    Value payload = eval_value_term(f->terms[2], env);
    return signature_valid(key, sig, payload);
  }
  }
  throw EvalError("bad formula kind");
}

// ---------------------------------------------------------------------------
// Structural equality
// ---------------------------------------------------------------------------

namespace {

bool tyterm_equal(const TyTermP &a, const TyTermP &b) {
  if (!a || !b)
    return !a && !b;
  if (a->kind != b->kind || a->idx != b->idx)
    return false;
  if (a->ty != b->ty)
    return false;
  if (!term_equal(a->value, b->value))
    return false;
  return tyterm_equal(a->inner, b->inner);
}

} // namespace

bool term_equal(const TermP &a, const TermP &b) {
  if (!a || !b)
    return !a && !b;
  if (a->kind != b->kind || a->sort != b->sort || a->ival != b->ival ||
      a->name != b->name || a->aop != b->aop || a->numkind != b->numkind ||
      a->opidx != b->opidx || a->val != b->val)
    return false;
  if (a->args.size() != b->args.size())
    return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!term_equal(a->args[i], b->args[i]))
      return false;
  if (!formula_equal(a->fml, b->fml))
    return false;
  return tyterm_equal(a->tyt, b->tyt);
}

bool formula_equal(const FormulaP &a, const FormulaP &b) {
  if (!a || !b)
    return !a && !b;
  if (a->kind != b->kind || a->cmp != b->cmp || a->bval != b->bval ||
      a->tykind != b->tykind || a->var != b->var)
    return false;
  if (a->terms.size() != b->terms.size() ||
      a->tyterms.size() != b->tyterms.size() ||
      a->children.size() != b->children.size())
    return false;
  for (std::size_t i = 0; i < a->terms.size(); ++i)
    if (!term_equal(a->terms[i], b->terms[i]))
      return false;
  for (std::size_t i = 0; i < a->tyterms.size(); ++i)
    if (!tyterm_equal(a->tyterms[i], b->tyterms[i]))
      return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!formula_equal(a->children[i], b->children[i]))
      return false;
  return term_equal(a->lo, b->lo) && term_equal(a->hi, b->hi);
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

std::string render_ty_whyml(const Ty &ty, bool arg_position) {
  std::string body;
  switch (ty.kind()) {
  case TyKind::Int:
    body = "Comparable_t Int_t";
    break;
  case TyKind::Nat:
    body = "Comparable_t Nat_t";
    break;
  case TyKind::String:
    body = "Comparable_t String_t";
    break;
  case TyKind::Bytes:
    body = "Comparable_t Bytes_t";
    break;
  case TyKind::Mutez:
    body = "Comparable_t Mutez_t";
    break;
  case TyKind::Bool:
    body = "Comparable_t Bool_t";
    break;
  case TyKind::KeyHash:
    body = "Comparable_t Key_hash_t";
    break;
  case TyKind::Timestamp:
    body = "Comparable_t Timestamp_t";
    break;
  case TyKind::Address:
    body = "Comparable_t Address_t";
    break;
  case TyKind::Key:
    body = "Key_t";
    break;
  case TyKind::Signature:
    body = "Signature_t";
    break;
  case TyKind::ChainId:
    body = "Chain_id_t";
    break;
  case TyKind::Unit:
    body = "Unit_t";
    break;
  case TyKind::Operation:
    body = "Operation_t";
    break;
  case TyKind::Option:
    body = "Option_t " + render_ty_whyml(ty.arg(0), true);
    break;
  case TyKind::List:
    body = "List_t " + render_ty_whyml(ty.arg(0), true);
    break;
  case TyKind::Pair:
    body = "Pair_t " + render_ty_whyml(ty.arg(0), true) + " " +
           render_ty_whyml(ty.arg(1), true);
    break;
  case TyKind::Or:
    body = "Or_t " + render_ty_whyml(ty.arg(0), true) + " " +
           render_ty_whyml(ty.arg(1), true);
    break;
  case TyKind::Set:
    body = "Set_t " + render_ty_whyml(ty.arg(0), true);
    break;
  case TyKind::Map:
    body = "Map_t " + render_ty_whyml(ty.arg(0), true) + " " +
           render_ty_whyml(ty.arg(1), true);
    break;
  case TyKind::BigMap:
    body = "Big_map_t " + render_ty_whyml(ty.arg(0), true) + " " +
           render_ty_whyml(ty.arg(1), true);
    break;
  case TyKind::Contract:
    body = "Contract_t " + render_ty_whyml(ty.arg(0), true);
    break;
  }
  if (arg_position && body.find(' ') != std::string::npos)
    return "(" + body + ")";
  return body;
}

std::string print_tyterm(const TyTermP &t, FormulaFlavor flavor) {
  switch (t->kind) {
  case TyTermKind::TyConst:
    return flavor == FormulaFlavor::WhyML ? render_ty_whyml(t->ty, true)
                                          : t->ty.to_string();
  case TyTermKind::TypInfer:
    if (flavor == FormulaFlavor::WhyML)
      return "(typ_infer (d " + print_term(t->value, flavor) + "))";
    return "typeof(" + print_term(t->value, flavor) + ")";
  case TyTermKind::TyArg:
    return "arg" + std::to_string(t->idx) + "(" +
           print_tyterm(t->inner, flavor) + ")";
  case TyTermKind::OperandTy:
    return "operand_type[" + std::to_string(t->idx) + "]";
  }
  return "?";
}

const char *cmp_text(CmpOp op) {
  switch (op) {
  case CmpOp::Eq:
    return "=";
  case CmpOp::Ne:
    return "<>";
  case CmpOp::Lt:
    return "<";
  case CmpOp::Le:
    return "<=";
  case CmpOp::Gt:
    return ">";
  case CmpOp::Ge:
    return ">=";
  }
  return "?";
}

} // namespace

std::string print_term(const TermP &t, FormulaFlavor flavor) {
  switch (t->kind) {
  case TermKind::IntConst:
    return t->ival < 0 ? "(" + t->ival.str() + ")" : t->ival.str();
  case TermKind::IntVar:
    return t->name;
  case TermKind::Arith: {
    const char *op = t->aop == ArithOp::Add   ? "+"
                     : t->aop == ArithOp::Sub ? "-"
                     : t->aop == ArithOp::Mul ? "*"
                     : t->aop == ArithOp::Div ? "/"
                                              : "%";
    return "(" + print_term(t->args[0], flavor) + " " + op + " " +
           print_term(t->args[1], flavor) + ")";
  }
  case TermKind::Length:
    if (flavor == FormulaFlavor::WhyML)
      return "(length " + t->name + ")";
    return "len(" + t->name + ")";
  case TermKind::NumOf:
    if (flavor == FormulaFlavor::WhyML)
      return "(num_value " + print_term(t->args[0], flavor) + ")";
    return "num(" + print_term(t->args[0], flavor) + ")";
  case TermKind::CompareApp:
    if (flavor == FormulaFlavor::WhyML)
      return "(compare_value " + print_term(t->args[0], flavor) + " " +
             print_term(t->args[1], flavor) + ")";
    return "compare(" + print_term(t->args[0], flavor) + ", " +
           print_term(t->args[1], flavor) + ")";
  case TermKind::LogicApp: {
    std::string out = t->name;
    if (flavor == FormulaFlavor::WhyML) {
      out = "(" + out;
      for (const TermP &a : t->args)
        out += " " + print_term(a, flavor);
      return out + ")";
    }
    out += "(";
    for (std::size_t i = 0; i < t->args.size(); ++i) {
      if (i)
        out += ", ";
      out += print_term(t->args[i], flavor);
    }
    return out + ")";
  }
  case TermKind::IteInt:
    return "(if " + print_formula(t->fml, flavor) + " then " +
           print_term(t->args[0], flavor) + " else " +
           print_term(t->args[1], flavor) + ")";
  case TermKind::OperandNum:
    return "n";
  case TermKind::Slot:
    return t->name + "[" + print_term(t->args[0], flavor) + "]";
  case TermKind::SymConst:
    return t->name;
  case TermKind::ValueConst:
    if (flavor == FormulaFlavor::WhyML)
      return "(mk_wf_data " + print_value(t->val) + ")";
    return print_value(t->val);
  case TermKind::OperandValue:
    return "operand[" + std::to_string(t->opidx) + "]";
  case TermKind::MkNum: {
    const char *ctor = t->numkind == TyKind::Int     ? "int"
                       : t->numkind == TyKind::Nat   ? "nat"
                       : t->numkind == TyKind::Mutez ? "mutez"
                                                     : "timestamp";
    if (flavor == FormulaFlavor::WhyML)
      return std::string("(mk_") + ctor + " " + print_term(t->args[0], flavor) +
             ")";
    return std::string(ctor) + "(" + print_term(t->args[0], flavor) + ")";
  }
  case TermKind::MkBool:
    return "bool(" + print_formula(t->fml, flavor) + ")";
  case TermKind::MkPair:
    return "pair(" + print_term(t->args[0], flavor) + ", " +
           print_term(t->args[1], flavor) + ")";
  case TermKind::MkSome:
    return "some(" + print_term(t->args[0], flavor) + ")";
  case TermKind::MkNone:
    return "none";
  case TermKind::MkLeft:
    return "left(" + print_term(t->args[0], flavor) + ")";
  case TermKind::MkRight:
    return "right(" + print_term(t->args[0], flavor) + ")";
  case TermKind::MkUnit:
    return "Unit";
  case TermKind::MkNil:
    return "nil";
  case TermKind::MkCons:
    return "cons(" + print_term(t->args[0], flavor) + ", " +
           print_term(t->args[1], flavor) + ")";
  case TermKind::Fst:
    return "fst(" + print_term(t->args[0], flavor) + ")";
  case TermKind::Snd:
    return "snd(" + print_term(t->args[0], flavor) + ")";
  case TermKind::CryptoApp:
    return t->name + "(" + print_term(t->args[0], flavor) + ")";
  }
  return "?";
}

std::string print_formula(const FormulaP &f, FormulaFlavor flavor) {
  const bool whyml = flavor == FormulaFlavor::WhyML;
  switch (f->kind) {
  case FormulaKind::BoolConst:
    return f->bval ? "true" : "false";
  case FormulaKind::Cmp:
    return print_term(f->terms[0], flavor) + " " + cmp_text(f->cmp) + " " +
           print_term(f->terms[1], flavor);
  case FormulaKind::VEq:
  case FormulaKind::TEq: {
    std::string a = f->kind == FormulaKind::VEq
                        ? print_term(f->terms[0], flavor)
                        : print_tyterm(f->tyterms[0], flavor);
    std::string b = f->kind == FormulaKind::VEq
                        ? print_term(f->terms[1], flavor)
                        : print_tyterm(f->tyterms[1], flavor);
    return a + " = " + b;
  }
  case FormulaKind::TyIs:
    return "is_" + std::string(ty_kind_name(f->tykind)) + "(" +
           print_tyterm(f->tyterms[0], flavor) + ")";
  case FormulaKind::TyComparable:
    return "is_comparable(" + print_tyterm(f->tyterms[0], flavor) + ")";
  case FormulaKind::And:
  case FormulaKind::Or: {
    const char *op = f->kind == FormulaKind::And ? (whyml ? " /\\ " : " and ")
                                                 : (whyml ? " \\/ " : " or ");
    std::string out = "(";
    for (std::size_t i = 0; i < f->children.size(); ++i) {
      if (i)
        out += op;
      out += print_formula(f->children[i], flavor);
    }
    return out + ")";
  }
  case FormulaKind::Not:
    return "not " + print_formula(f->children[0], flavor);
  case FormulaKind::Implies:
    return "(" + print_formula(f->children[0], flavor) + " -> " +
           print_formula(f->children[1], flavor) + ")";
  case FormulaKind::Iff:
    return "(" + print_formula(f->children[0], flavor) + " <-> " +
           print_formula(f->children[1], flavor) + ")";
  case FormulaKind::ForallIdx:
    if (whyml)
      return "forall " + f->var + ": int. " + print_term(f->lo, flavor) +
             " <= " + f->var + " < " + print_term(f->hi, flavor) + " -> " +
             print_formula(f->children[0], flavor);
    return "forall " + f->var + " in [" + print_term(f->lo, flavor) + ", " +
           print_term(f->hi, flavor) + "): " +
           print_formula(f->children[0], flavor);
  case FormulaKind::BoolOf:
    if (whyml)
      return "(is_true " + print_term(f->terms[0], flavor) + ")";
    return "is_true(" + print_term(f->terms[0], flavor) + ")";
  case FormulaKind::SigValid:
    return "check_signature(" + print_term(f->terms[0], flavor) + ", " +
           print_term(f->terms[1], flavor) + ", " +
           print_term(f->terms[2], flavor) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Traversal
// ---------------------------------------------------------------------------

void visit_terms(const TermP &t, const std::function<void(const Term &)> &fn) {
  if (!t)
    return;
  fn(*t);
  for (const TermP &a : t->args)
    visit_terms(a, fn);
  if (t->fml)
    visit_terms(t->fml, fn);
  for (TyTermP ty = t->tyt; ty; ty = ty->inner)
    if (ty->value)
      visit_terms(ty->value, fn);
}

void visit_terms(const FormulaP &f, const std::function<void(const Term &)> &fn) {
  if (!f)
    return;
  for (const TermP &t : f->terms)
    visit_terms(t, fn);
  for (const TyTermP &ty : f->tyterms)
    for (TyTermP cur = ty; cur; cur = cur->inner)
      if (cur->value)
        visit_terms(cur->value, fn);
  visit_terms(f->lo, fn);
  visit_terms(f->hi, fn);
  for (const FormulaP &c : f->children)
    visit_terms(c, fn);
}

} // namespace tzv
