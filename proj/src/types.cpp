// SPDX-License-Identifier: Apache-2.0

#include "tzv/types.hpp"

#include <stdexcept>

namespace tzv {

const char *ty_kind_name(TyKind kind) {
  switch (kind) {
  case TyKind::Int:
    return "int";
  case TyKind::Nat:
    return "nat";
  case TyKind::String:
    return "string";
  case TyKind::Bytes:
    return "bytes";
  case TyKind::Mutez:
    return "mutez";
  case TyKind::Bool:
    return "bool";
  case TyKind::KeyHash:
    return "key_hash";
  case TyKind::Timestamp:
    return "timestamp";
  case TyKind::Address:
    return "address";
  case TyKind::Key:
    return "key";
  case TyKind::Signature:
    return "signature";
  case TyKind::ChainId:
    return "chain_id";
  case TyKind::Unit:
    return "unit";
  case TyKind::Operation:
    return "operation";
  case TyKind::Option:
    return "option";
  case TyKind::List:
    return "list";
  case TyKind::Pair:
    return "pair";
  case TyKind::Or:
    return "or";
  case TyKind::Set:
    return "set";
  case TyKind::Map:
    return "map";
  case TyKind::BigMap:
    return "big_map";
  case TyKind::Contract:
    return "contract";
  }
  return "?";
}

int ty_kind_arity(TyKind kind) {
  switch (kind) {
  case TyKind::Option:
  case TyKind::List:
  case TyKind::Set:
  case TyKind::Contract:
    return 1;
  case TyKind::Pair:
  case TyKind::Or:
  case TyKind::Map:
  case TyKind::BigMap:
    return 2;
  default:
    return 0;
  }
}

Ty::Ty(TyKind kind, std::vector<Ty> args) : kind_(kind), args_(std::move(args)) {
  if (static_cast<int>(args_.size()) != ty_kind_arity(kind))
    throw std::logic_error(std::string("bad arity for type constructor ") +
                           ty_kind_name(kind));
  if ((kind == TyKind::Set || kind == TyKind::Map || kind == TyKind::BigMap) &&
      !args_[0].is_comparable())
    throw std::logic_error(std::string(ty_kind_name(kind)) +
                           " key type must be comparable, got " +
                           args_[0].to_string());
}

bool Ty::operator==(const Ty &other) const {
  return kind_ == other.kind_ && args_ == other.args_;
}

bool Ty::is_comparable() const {
  switch (kind_) {
  case TyKind::Int:
  case TyKind::Nat:
  case TyKind::String:
  case TyKind::Bytes:
  case TyKind::Mutez:
  case TyKind::Bool:
  case TyKind::KeyHash:
  case TyKind::Timestamp:
  case TyKind::Address:
    return true;
  default:
    return false;
  }
}

bool Ty::is_pushable() const {
  switch (kind_) {
  case TyKind::Operation:
  case TyKind::Contract:
  case TyKind::BigMap:
    return false;
  default:
    break;
  }
  for (const Ty &a : args_)
    if (!a.is_pushable())
      return false;
  return true;
}

std::string Ty::to_string() const {
  std::string out = ty_kind_name(kind_);
  for (const Ty &a : args_) {
    out += ' ';
    if (a.args().empty()) {
      out += a.to_string();
    } else {
      out += '(';
      out += a.to_string();
      out += ')';
    }
  }
  return out;
}

} // namespace tzv
