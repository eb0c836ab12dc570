// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "tzv/value.hpp"

namespace tzv {

/// Immutable execution stack; slot 0 is the top. Every operation returns a
/// new stack, prior references keep observing the old contents.
class Stack {
public:
  Stack() = default;
  explicit Stack(std::vector<Value> slots);

  std::size_t size() const { return slots_.size(); }
  bool empty() const { return slots_.empty(); }

  const Value &at(std::size_t i) const;
  const Value &top() const { return at(0); }
  const std::vector<Value> &slots() const { return slots_; }

  Stack push(Value v) const;
  Stack drop_n(std::size_t n) const;
  Stack tail_from(std::size_t i) const { return drop_n(i); }

  /// One slot per line: `i: <value> : <type>`.
  std::string debug_render() const;

  bool operator==(const Stack &other) const { return slots_ == other.slots_; }

private:
  std::vector<Value> slots_;
};

/// Statically known slot types at a program point; slot 0 is the top.
class StackTy {
public:
  StackTy() = default;
  explicit StackTy(std::vector<Ty> slots) : slots_(std::move(slots)) {}

  std::size_t size() const { return slots_.size(); }
  bool empty() const { return slots_.empty(); }
  const Ty &at(std::size_t i) const { return slots_.at(i); }
  const std::vector<Ty> &slots() const { return slots_; }

  StackTy push(Ty t) const;
  StackTy drop_n(std::size_t n) const;

  std::string to_string() const; // "[ nat; pair int nat ]"

  bool operator==(const StackTy &other) const = default;

private:
  std::vector<Ty> slots_;
};

/// The per-slot type view of a concrete stack.
StackTy ty_of(const Stack &s);

} // namespace tzv
