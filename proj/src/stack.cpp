// SPDX-License-Identifier: Apache-2.0

#include "tzv/stack.hpp"

#include <stdexcept>

#include "tzv/errors.hpp"

namespace tzv {

Stack::Stack(std::vector<Value> slots) : slots_(std::move(slots)) {
  for (const Value &v : slots_)
    if (!well_formed(v))
      throw std::logic_error("ill-formed value pushed onto stack: " +
                             print_value(v));
}

const Value &Stack::at(std::size_t i) const {
  if (i >= slots_.size())
    throw std::logic_error("stack index " + std::to_string(i) +
                           " out of bounds (size " +
                           std::to_string(slots_.size()) + ")");
  return slots_[i];
}

Stack Stack::push(Value v) const {
  if (!well_formed(v))
    throw std::logic_error("ill-formed value pushed onto stack: " +
                           print_value(v));
  Stack out;
  out.slots_.reserve(slots_.size() + 1);
  out.slots_.push_back(std::move(v));
  out.slots_.insert(out.slots_.end(), slots_.begin(), slots_.end());
  return out;
}

Stack Stack::drop_n(std::size_t n) const {
  if (n > slots_.size())
    throw std::logic_error("drop_n(" + std::to_string(n) +
                           ") on stack of size " +
                           std::to_string(slots_.size()));
  Stack out;
  out.slots_.assign(slots_.begin() + static_cast<std::ptrdiff_t>(n),
                    slots_.end());
  return out;
}

std::string Stack::debug_render() const {
  std::string out;
  for (std::size_t i = 0; i < slots_.size(); ++i)
    out += std::to_string(i) + ": " + print_value(slots_[i]) + " : " +
           typ_infer(slots_[i]).to_string() + "\n";
  return out;
}

StackTy StackTy::push(Ty t) const {
  std::vector<Ty> out;
  out.reserve(slots_.size() + 1);
  out.push_back(std::move(t));
  out.insert(out.end(), slots_.begin(), slots_.end());
  return StackTy(std::move(out));
}

StackTy StackTy::drop_n(std::size_t n) const {
  if (n > slots_.size())
    throw std::logic_error("StackTy::drop_n out of bounds");
  return StackTy(std::vector<Ty>(slots_.begin() + static_cast<std::ptrdiff_t>(n),
                                 slots_.end()));
}

std::string StackTy::to_string() const {
  if (slots_.empty())
    return "[]";
  std::string out = "[ ";
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (i)
      out += "; ";
    out += slots_[i].to_string();
  }
  out += " ]";
  return out;
}

StackTy ty_of(const Stack &s) {
  std::vector<Ty> tys;
  tys.reserve(s.size());
  for (const Value &v : s.slots())
    tys.push_back(typ_infer(v));
  return StackTy(std::move(tys));
}

} // namespace tzv
