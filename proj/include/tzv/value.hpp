// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tzv/types.hpp"

namespace tzv {

using BigInt = boost::multiprecision::cpp_int;

/// Upper bound of the mutez range: 2^63 - 1. Arithmetic outside
/// [0, mutez_max] is a contract failure, never a silent wrap.
const BigInt &mutez_max();

enum class ValueKind {
  IntV,
  NatV,
  StringV,
  BytesV,
  MutezV,
  BoolV,
  KeyHashV,
  TimestampV,
  AddressV,
  KeyV,
  SignatureV,
  ChainIdV,
  UnitV,
  SomeV,
  NoneV,
  ListV,
  PairV,
  LeftV,
  RightV,
  SetV,
  MapV,
  BigMapV,
  OperationV,
  AbstractV,
};

/// A well-formed Michelson datum. Construction goes through the static
/// factories, which enforce the per-constructor invariants (nat >= 0, mutez
/// bounds, element homogeneity, strictly increasing set/map keys). The only
/// way to build an ill-formed value is `unsafe_from_parts`, kept for tests
/// of `well_formed` itself.
class Value {
public:
  Value() : kind_(ValueKind::UnitV) {}

  static Value int_(BigInt v);
  static Value nat(BigInt v);
  static Value string(std::string s);
  static Value bytes(std::string raw);
  static Value mutez(BigInt v);
  static Value bool_(bool b);
  static Value key_hash(std::string s);
  static Value timestamp(BigInt epoch_seconds);
  static Value address(std::string s);
  static Value key(std::string s);
  static Value signature(std::string s);
  static Value chain_id(std::string s);
  static Value unit();
  static Value some(Value inner);
  static Value none(Ty inner_ty);
  static Value list(std::vector<Value> elems, Ty elem_ty);
  static Value pair(Value a, Value b);
  static Value left(Value inner, Ty right_ty);
  static Value right(Value inner, Ty left_ty);
  /// Elements are sorted and de-duplicated under `compare`.
  static Value set(std::vector<Value> elems, Ty elem_ty);
  /// Entries are sorted by key; a duplicate key is an error.
  static Value map(std::vector<std::pair<Value, Value>> entries, Ty key_ty,
                   Ty val_ty);
  static Value big_map(std::vector<std::pair<Value, Value>> entries, Ty key_ty,
                       Ty val_ty);
  /// Abstract blockchain operation descriptor (tag plus captured arguments).
  static Value operation(std::string tag, std::vector<Value> args);
  /// Opaque result of a crypto/serialization opcode; equality is tag+digest.
  static Value abstract(std::string tag, Value origin, Ty result_ty);

  /// Bypasses all invariant checks. Test-only escape hatch.
  static Value unsafe_from_parts(ValueKind kind, BigInt num, std::string text,
                                 std::vector<Value> children,
                                 std::vector<Ty> tys, bool flag);

  ValueKind kind() const { return kind_; }
  const BigInt &num() const { return num_; }
  const std::string &text() const { return text_; }
  bool flag() const { return flag_; }
  const std::vector<Value> &children() const { return children_; }
  const std::vector<Ty> &tys() const { return tys_; }
  const std::string &digest() const { return digest_; }

  const Value &child(std::size_t i) const { return children_.at(i); }

  bool operator==(const Value &other) const;
  bool operator!=(const Value &other) const { return !(*this == other); }

private:
  ValueKind kind_;
  BigInt num_;
  std::string text_;            // strings, raw bytes, abstract/operation tag
  std::vector<Value> children_; // composites; map entries flattened k,v,k,v
  std::vector<Ty> tys_;         // carried types so typ_infer stays total
  bool flag_ = false;           // BoolV payload
  std::string digest_;          // AbstractV identity
};

/// The type of a value. Total: constructors that would otherwise be
/// ambiguous (None, Left, empty list, ...) carry the missing type.
Ty typ_infer(const Value &v);

/// Recursive well-formedness: list/set/map homogeneity, strictly increasing
/// keys, nat/mutez bounds. True for everything the factories produce.
bool well_formed(const Value &v);

/// Total order on comparable values: -1, 0 or 1. Both arguments must infer
/// to the same comparable type; anything else throws EvalError (caller bug).
int compare(const Value &a, const Value &b);

/// Renders a value in Michelson literal syntax ("Pair {} 42").
std::string print_value(const Value &v);

/// Parses a Michelson literal against an expected type. Accepts integer or
/// RFC3339 text for timestamps. Throws ValueError on mismatch.
Value parse_literal(std::string_view text, const Ty &ty);

/// Seconds since epoch for an RFC3339 date-time, if it parses.
std::optional<BigInt> rfc3339_to_epoch(std::string_view text);

/// 64-bit FNV-1a digest of a value's canonical rendering, as fixed-width hex.
std::string digest_hex(const Value &v);

/// Canonical abstract result of a crypto/serialization opcode. Shared by the
/// interpreter and the opcode-contract evaluator so both agree bit-for-bit.
Value crypto_result(const std::string &tag, const Value &input);

/// Deterministic stand-in for signing: the produced signature is accepted by
/// CHECK_SIGNATURE exactly for this key and payload.
Value sign(const std::string &key_text, const Value &payload_bytes);

/// CHECK_SIGNATURE's decision procedure over the `sign` scheme.
bool signature_valid(const Value &key, const Value &sig, const Value &payload);

struct Token;

/// Parses one literal in operand position from a token stream, advancing
/// `pos`. Compound literals must be parenthesized, as in PUSH operands.
Value parse_literal_tokens(const std::vector<Token> &toks, std::size_t &pos,
                           const Ty &ty);

} // namespace tzv

