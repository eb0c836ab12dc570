// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace tzv {

enum class TyKind {
  // Comparable core. Values of these types admit the total comparison order.
  Int,
  Nat,
  String,
  Bytes,
  Mutez,
  Bool,
  KeyHash,
  Timestamp,
  Address,
  // Non-comparable atoms.
  Key,
  Signature,
  ChainId,
  Unit,
  Operation,
  // Composites.
  Option,
  List,
  Pair,
  Or,
  Set,
  Map,
  BigMap,
  Contract,
};

/// A Michelson type. Structural equality; Set/Map/BigMap keys are restricted
/// to the comparable core at construction time.
class Ty {
public:
  explicit Ty(TyKind kind, std::vector<Ty> args = {});

  static Ty int_() { return Ty(TyKind::Int); }
  static Ty nat() { return Ty(TyKind::Nat); }
  static Ty string() { return Ty(TyKind::String); }
  static Ty bytes() { return Ty(TyKind::Bytes); }
  static Ty mutez() { return Ty(TyKind::Mutez); }
  static Ty bool_() { return Ty(TyKind::Bool); }
  static Ty key_hash() { return Ty(TyKind::KeyHash); }
  static Ty timestamp() { return Ty(TyKind::Timestamp); }
  static Ty address() { return Ty(TyKind::Address); }
  static Ty key() { return Ty(TyKind::Key); }
  static Ty signature() { return Ty(TyKind::Signature); }
  static Ty chain_id() { return Ty(TyKind::ChainId); }
  static Ty unit() { return Ty(TyKind::Unit); }
  static Ty operation() { return Ty(TyKind::Operation); }
  static Ty option(Ty inner) { return Ty(TyKind::Option, {std::move(inner)}); }
  static Ty list(Ty elem) { return Ty(TyKind::List, {std::move(elem)}); }
  static Ty pair(Ty a, Ty b) {
    return Ty(TyKind::Pair, {std::move(a), std::move(b)});
  }
  static Ty or_(Ty l, Ty r) {
    return Ty(TyKind::Or, {std::move(l), std::move(r)});
  }
  static Ty set(Ty key) { return Ty(TyKind::Set, {std::move(key)}); }
  static Ty map(Ty key, Ty val) {
    return Ty(TyKind::Map, {std::move(key), std::move(val)});
  }
  static Ty big_map(Ty key, Ty val) {
    return Ty(TyKind::BigMap, {std::move(key), std::move(val)});
  }
  static Ty contract(Ty param) {
    return Ty(TyKind::Contract, {std::move(param)});
  }

  TyKind kind() const { return kind_; }
  const std::vector<Ty> &args() const { return args_; }
  const Ty &arg(std::size_t i) const { return args_.at(i); }

  bool operator==(const Ty &other) const;
  bool operator!=(const Ty &other) const { return !(*this == other); }

  /// True for the nine comparable core constructors.
  bool is_comparable() const;

  /// True if a value of this type may be a PUSH operand (no operations,
  /// contracts or big_maps anywhere inside).
  bool is_pushable() const;

  /// Michelson concrete syntax, e.g. "pair nat (list operation)".
  std::string to_string() const;

private:
  TyKind kind_;
  std::vector<Ty> args_;
};

/// Lowercase Michelson name of a type constructor ("nat", "big_map", ...).
const char *ty_kind_name(TyKind kind);

/// Expected argument count of a type constructor.
int ty_kind_arity(TyKind kind);

} // namespace tzv
