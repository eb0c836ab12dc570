// SPDX-License-Identifier: Apache-2.0

#include "tzv/value.hpp"

#include <algorithm>
#include <cstdint>

#include "tzv/errors.hpp"
#include "tzv/lexer.hpp"

namespace tzv {

const BigInt &mutez_max() {
  static const BigInt max = (BigInt(1) << 63) - 1;
  return max;
}

// ---------------------------------------------------------------------------
// Factories
// ---------------------------------------------------------------------------

namespace {

Value make(ValueKind kind, BigInt num = 0, std::string text = {},
           std::vector<Value> children = {}, std::vector<Ty> tys = {},
           bool flag = false) {
  return Value::unsafe_from_parts(kind, std::move(num), std::move(text),
                                  std::move(children), std::move(tys), flag);
}

[[noreturn]] void reject(const std::string &msg) { throw ValueError(msg); }

} // namespace

Value Value::unsafe_from_parts(ValueKind kind, BigInt num, std::string text,
                               std::vector<Value> children,
                               std::vector<Ty> tys, bool flag) {
  Value v;
  v.kind_ = kind;
  v.num_ = std::move(num);
  v.text_ = std::move(text);
  v.children_ = std::move(children);
  v.tys_ = std::move(tys);
  v.flag_ = flag;
  if (kind == ValueKind::AbstractV && v.digest_.empty() &&
      !v.children_.empty())
    v.digest_ = digest_hex(v.children_[0]);
  return v;
}

Value Value::int_(BigInt v) { return make(ValueKind::IntV, std::move(v)); }

Value Value::nat(BigInt v) {
  if (v < 0)
    reject("nat value must be nonnegative, got " + v.str());
  return make(ValueKind::NatV, std::move(v));
}

Value Value::string(std::string s) {
  return make(ValueKind::StringV, 0, std::move(s));
}

Value Value::bytes(std::string raw) {
  return make(ValueKind::BytesV, 0, std::move(raw));
}

Value Value::mutez(BigInt v) {
  if (v < 0 || v > mutez_max())
    reject("mutez value out of range: " + v.str());
  return make(ValueKind::MutezV, std::move(v));
}

Value Value::bool_(bool b) {
  return make(ValueKind::BoolV, 0, {}, {}, {}, b);
}

Value Value::key_hash(std::string s) {
  return make(ValueKind::KeyHashV, 0, std::move(s));
}

Value Value::timestamp(BigInt epoch_seconds) {
  return make(ValueKind::TimestampV, std::move(epoch_seconds));
}

Value Value::address(std::string s) {
  return make(ValueKind::AddressV, 0, std::move(s));
}

Value Value::key(std::string s) { return make(ValueKind::KeyV, 0, std::move(s)); }

Value Value::signature(std::string s) {
  return make(ValueKind::SignatureV, 0, std::move(s));
}

Value Value::chain_id(std::string s) {
  return make(ValueKind::ChainIdV, 0, std::move(s));
}

Value Value::unit() { return make(ValueKind::UnitV); }

Value Value::some(Value inner) {
  return make(ValueKind::SomeV, 0, {}, {std::move(inner)});
}

Value Value::none(Ty inner_ty) {
  return make(ValueKind::NoneV, 0, {}, {}, {std::move(inner_ty)});
}

Value Value::list(std::vector<Value> elems, Ty elem_ty) {
  for (const Value &e : elems)
    if (typ_infer(e) != elem_ty)
      reject("list element " + print_value(e) + " does not have type " +
             elem_ty.to_string());
  return make(ValueKind::ListV, 0, {}, std::move(elems), {std::move(elem_ty)});
}

Value Value::pair(Value a, Value b) {
  return make(ValueKind::PairV, 0, {}, {std::move(a), std::move(b)});
}

Value Value::left(Value inner, Ty right_ty) {
  return make(ValueKind::LeftV, 0, {}, {std::move(inner)},
              {std::move(right_ty)});
}

Value Value::right(Value inner, Ty left_ty) {
  return make(ValueKind::RightV, 0, {}, {std::move(inner)},
              {std::move(left_ty)});
}

Value Value::set(std::vector<Value> elems, Ty elem_ty) {
  if (!elem_ty.is_comparable())
    reject("set element type must be comparable: " + elem_ty.to_string());
  for (const Value &e : elems)
    if (typ_infer(e) != elem_ty)
      reject("set element " + print_value(e) + " does not have type " +
             elem_ty.to_string());
  std::sort(elems.begin(), elems.end(),
            [](const Value &a, const Value &b) { return compare(a, b) < 0; });
  elems.erase(std::unique(elems.begin(), elems.end(),
                          [](const Value &a, const Value &b) {
                            return compare(a, b) == 0;
                          }),
              elems.end());
  return make(ValueKind::SetV, 0, {}, std::move(elems), {std::move(elem_ty)});
}

namespace {

Value make_map(ValueKind kind, std::vector<std::pair<Value, Value>> entries,
               Ty key_ty, Ty val_ty) {
  if (!key_ty.is_comparable())
    reject("map key type must be comparable: " + key_ty.to_string());
  for (const auto &[k, v] : entries) {
    if (typ_infer(k) != key_ty)
      reject("map key " + print_value(k) + " does not have type " +
             key_ty.to_string());
    if (typ_infer(v) != val_ty)
      reject("map value " + print_value(v) + " does not have type " +
             val_ty.to_string());
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto &a, const auto &b) {
              return compare(a.first, b.first) < 0;
            });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (compare(entries[i - 1].first, entries[i].first) == 0)
      reject("duplicate map key " + print_value(entries[i].first));
  std::vector<Value> flat;
  flat.reserve(entries.size() * 2);
  for (auto &[k, v] : entries) {
    flat.push_back(std::move(k));
    flat.push_back(std::move(v));
  }
  return make(kind, 0, {}, std::move(flat),
              {std::move(key_ty), std::move(val_ty)});
}

} // namespace

Value Value::map(std::vector<std::pair<Value, Value>> entries, Ty key_ty,
                 Ty val_ty) {
  return make_map(ValueKind::MapV, std::move(entries), std::move(key_ty),
                  std::move(val_ty));
}

Value Value::big_map(std::vector<std::pair<Value, Value>> entries, Ty key_ty,
                     Ty val_ty) {
  return make_map(ValueKind::BigMapV, std::move(entries), std::move(key_ty),
                  std::move(val_ty));
}

Value Value::operation(std::string tag, std::vector<Value> args) {
  return make(ValueKind::OperationV, 0, std::move(tag), std::move(args));
}

Value Value::abstract(std::string tag, Value origin, Ty result_ty) {
  return make(ValueKind::AbstractV, 0, std::move(tag), {std::move(origin)},
              {std::move(result_ty)});
}

bool Value::operator==(const Value &other) const {
  if (kind_ != other.kind_)
    return false;
  if (kind_ == ValueKind::AbstractV)
    return text_ == other.text_ && digest_ == other.digest_ &&
           tys_ == other.tys_;
  return num_ == other.num_ && text_ == other.text_ && flag_ == other.flag_ &&
         tys_ == other.tys_ && children_ == other.children_;
}

// ---------------------------------------------------------------------------
// typ_infer / well_formed
// ---------------------------------------------------------------------------

Ty typ_infer(const Value &v) {
  switch (v.kind()) {
  case ValueKind::IntV:
    return Ty::int_();
  case ValueKind::NatV:
    return Ty::nat();
  case ValueKind::StringV:
    return Ty::string();
  case ValueKind::BytesV:
    return Ty::bytes();
  case ValueKind::MutezV:
    return Ty::mutez();
  case ValueKind::BoolV:
    return Ty::bool_();
  case ValueKind::KeyHashV:
    return Ty::key_hash();
  case ValueKind::TimestampV:
    return Ty::timestamp();
  case ValueKind::AddressV:
    return Ty::address();
  case ValueKind::KeyV:
    return Ty::key();
  case ValueKind::SignatureV:
    return Ty::signature();
  case ValueKind::ChainIdV:
    return Ty::chain_id();
  case ValueKind::UnitV:
    return Ty::unit();
  case ValueKind::SomeV:
    return Ty::option(typ_infer(v.child(0)));
  case ValueKind::NoneV:
    return Ty::option(v.tys().at(0));
  case ValueKind::ListV:
    return Ty::list(v.tys().at(0));
  case ValueKind::PairV:
    return Ty::pair(typ_infer(v.child(0)), typ_infer(v.child(1)));
  case ValueKind::LeftV:
    return Ty::or_(typ_infer(v.child(0)), v.tys().at(0));
  case ValueKind::RightV:
    return Ty::or_(v.tys().at(0), typ_infer(v.child(0)));
  case ValueKind::SetV:
    return Ty::set(v.tys().at(0));
  case ValueKind::MapV:
    return Ty::map(v.tys().at(0), v.tys().at(1));
  case ValueKind::BigMapV:
    return Ty::big_map(v.tys().at(0), v.tys().at(1));
  case ValueKind::OperationV:
    return Ty::operation();
  case ValueKind::AbstractV:
    return v.tys().at(0);
  }
  throw EvalError("typ_infer: bad value kind");
}

bool well_formed(const Value &v) {
  switch (v.kind()) {
  case ValueKind::NatV:
    return v.num() >= 0;
  case ValueKind::MutezV:
    return v.num() >= 0 && v.num() <= mutez_max();
  case ValueKind::SomeV:
  case ValueKind::LeftV:
  case ValueKind::RightV:
  case ValueKind::AbstractV:
    for (const Value &c : v.children())
      if (!well_formed(c))
        return false;
    return true;
  case ValueKind::PairV:
    return v.children().size() == 2 && well_formed(v.child(0)) &&
           well_formed(v.child(1));
  case ValueKind::ListV: {
    const Ty &elem = v.tys().at(0);
    for (const Value &c : v.children())
      if (!well_formed(c) || typ_infer(c) != elem)
        return false;
    return true;
  }
  case ValueKind::SetV: {
    const Ty &elem = v.tys().at(0);
    if (!elem.is_comparable())
      return false;
    for (const Value &c : v.children())
      if (!well_formed(c) || typ_infer(c) != elem)
        return false;
    for (std::size_t i = 1; i < v.children().size(); ++i)
      if (compare(v.child(i - 1), v.child(i)) >= 0)
        return false;
    return true;
  }
  case ValueKind::MapV:
  case ValueKind::BigMapV: {
    const Ty &key = v.tys().at(0);
    const Ty &val = v.tys().at(1);
    if (!key.is_comparable() || v.children().size() % 2 != 0)
      return false;
    for (std::size_t i = 0; i < v.children().size(); i += 2) {
      if (!well_formed(v.child(i)) || typ_infer(v.child(i)) != key)
        return false;
      if (!well_formed(v.child(i + 1)) || typ_infer(v.child(i + 1)) != val)
        return false;
    }
    for (std::size_t i = 2; i < v.children().size(); i += 2)
      if (compare(v.child(i - 2), v.child(i)) >= 0)
        return false;
    return true;
  }
  case ValueKind::OperationV:
    for (const Value &c : v.children())
      if (!well_formed(c))
        return false;
    return true;
  default:
    return true;
  }
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

namespace {

int sign_of(int c) { return c < 0 ? -1 : (c > 0 ? 1 : 0); }

int compare_text(const std::string &a, const std::string &b) {
  int c = a.compare(b);
  return sign_of(c);
}

int compare_big(const BigInt &a, const BigInt &b) {
  if (a < b)
    return -1;
  if (a > b)
    return 1;
  return 0;
}

} // namespace

int compare(const Value &a, const Value &b) {
  Ty ta = typ_infer(a);
  if (ta != typ_infer(b))
    throw EvalError("compare: operands have different types: " +
                    ta.to_string() + " vs " + typ_infer(b).to_string());
  if (!ta.is_comparable())
    throw EvalError("compare: type is not comparable: " + ta.to_string());

  // Opaque crypto results typed at a comparable type (abstract bytes) keep a
  // total order: concrete values first, then (tag, digest) lexicographic.
  bool aa = a.kind() == ValueKind::AbstractV;
  bool ba = b.kind() == ValueKind::AbstractV;
  if (aa || ba) {
    if (aa != ba)
      return aa ? 1 : -1;
    if (int c = compare_text(a.text(), b.text()))
      return c;
    return compare_text(a.digest(), b.digest());
  }

  switch (ta.kind()) {
  case TyKind::Int:
  case TyKind::Nat:
  case TyKind::Mutez:
  case TyKind::Timestamp:
    return compare_big(a.num(), b.num());
  case TyKind::String:
  case TyKind::Bytes:
  case TyKind::KeyHash:
  case TyKind::Address:
    return compare_text(a.text(), b.text());
  case TyKind::Bool:
    if (a.flag() == b.flag())
      return 0;
    return b.flag() ? -1 : 1; // False < True
  default:
    throw EvalError("compare: unhandled comparable type");
  }
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

std::string escape_string(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
    case '"':
      out += "\\\"";
      break;
    case '\\':
      out += "\\\\";
      break;
    case '\n':
      out += "\\n";
      break;
    case '\r':
      out += "\\r";
      break;
    case '\t':
      out += "\\t";
      break;
    default:
      out += c;
    }
  }
  out += '"';
  return out;
}

std::string hex_of(const std::string &raw) {
  static const char digits[] = "0123456789abcdef";
  std::string out = "0x";
  for (unsigned char c : raw) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

bool print_is_atomic(const Value &v) {
  switch (v.kind()) {
  case ValueKind::SomeV:
  case ValueKind::PairV:
  case ValueKind::LeftV:
  case ValueKind::RightV:
  case ValueKind::OperationV:
  case ValueKind::AbstractV:
    return false;
  case ValueKind::IntV:
  case ValueKind::TimestampV:
    return v.num() >= 0;
  default:
    return true;
  }
}

std::string print_child(const Value &v) {
  std::string s = print_value(v);
  if (print_is_atomic(v))
    return s;
  return "(" + s + ")";
}

} // namespace

std::string print_value(const Value &v) {
  switch (v.kind()) {
  case ValueKind::IntV:
  case ValueKind::NatV:
  case ValueKind::MutezV:
  case ValueKind::TimestampV:
    return v.num().str();
  case ValueKind::StringV:
  case ValueKind::KeyHashV:
  case ValueKind::AddressV:
  case ValueKind::KeyV:
  case ValueKind::SignatureV:
  case ValueKind::ChainIdV:
    return escape_string(v.text());
  case ValueKind::BytesV:
    return hex_of(v.text());
  case ValueKind::BoolV:
    return v.flag() ? "True" : "False";
  case ValueKind::UnitV:
    return "Unit";
  case ValueKind::SomeV:
    return "Some " + print_child(v.child(0));
  case ValueKind::NoneV:
    return "None";
  case ValueKind::PairV:
    return "Pair " + print_child(v.child(0)) + " " + print_child(v.child(1));
  case ValueKind::LeftV:
    return "Left " + print_child(v.child(0));
  case ValueKind::RightV:
    return "Right " + print_child(v.child(0));
  case ValueKind::ListV:
  case ValueKind::SetV: {
    std::string out = "{";
    for (std::size_t i = 0; i < v.children().size(); ++i) {
      out += i ? "; " : " ";
      out += print_value(v.child(i));
    }
    out += v.children().empty() ? "}" : " }";
    return out;
  }
  case ValueKind::MapV:
  case ValueKind::BigMapV: {
    std::string out = "{";
    for (std::size_t i = 0; i < v.children().size(); i += 2) {
      out += i ? "; " : " ";
      out += "Elt " + print_child(v.child(i)) + " " + print_child(v.child(i + 1));
    }
    out += v.children().empty() ? "}" : " }";
    return out;
  }
  case ValueKind::OperationV: {
    std::string out = "<operation " + v.text();
    for (const Value &c : v.children())
      out += " " + print_child(c);
    out += ">";
    return out;
  }
  case ValueKind::AbstractV:
    return "<" + v.text() + ":" + v.digest() + ">";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Digests, crypto stand-ins
// ---------------------------------------------------------------------------

namespace {

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace

std::string digest_hex(const Value &v) {
  std::string canon = typ_infer(v).to_string() + "|" + print_value(v);
  std::uint64_t h = fnv1a(canon);
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 15];
    h >>= 4;
  }
  return out;
}

Value crypto_result(const std::string &tag, const Value &input) {
  if (tag == "hash_key")
    return Value::key_hash("hk1" + input.text());
  Ty result_ty = Ty::bytes();
  return Value::abstract(tag, input, result_ty);
}

Value sign(const std::string &key_text, const Value &payload_bytes) {
  return Value::signature("sig:" + key_text + ":" + digest_hex(payload_bytes));
}

bool signature_valid(const Value &key, const Value &sig, const Value &payload) {
  return sig.text() == "sig:" + key.text() + ":" + digest_hex(payload);
}

// ---------------------------------------------------------------------------
// RFC3339 timestamps
// ---------------------------------------------------------------------------

std::optional<BigInt> rfc3339_to_epoch(std::string_view text) {
  // YYYY-MM-DDTHH:MM:SS with optional .fff, then Z or +hh:mm / -hh:mm.
  auto digits = [&](std::size_t at, int n, long long &out) {
    long long v = 0;
    for (int i = 0; i < n; ++i) {
      if (at + i >= text.size() || text[at + i] < '0' || text[at + i] > '9')
        return false;
      v = v * 10 + (text[at + i] - '0');
    }
    out = v;
    return true;
  };
  long long year, month, day, hour, minute, second;
  if (!digits(0, 4, year) || text.size() < 20 || text[4] != '-' ||
      !digits(5, 2, month) || text[7] != '-' || !digits(8, 2, day))
    return std::nullopt;
  if (text[10] != 'T' && text[10] != 't' && text[10] != ' ')
    return std::nullopt;
  if (!digits(11, 2, hour) || text[13] != ':' || !digits(14, 2, minute) ||
      text[16] != ':' || !digits(17, 2, second))
    return std::nullopt;
  std::size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
      ++pos;
  }
  long long offset = 0;
  if (pos >= text.size())
    return std::nullopt;
  if (text[pos] == 'Z' || text[pos] == 'z') {
    ++pos;
  } else if (text[pos] == '+' || text[pos] == '-') {
    int sgn = text[pos] == '+' ? 1 : -1;
    long long oh, om;
    if (!digits(pos + 1, 2, oh) || pos + 3 >= text.size() ||
        text[pos + 3] != ':' || !digits(pos + 4, 2, om))
      return std::nullopt;
    offset = sgn * (oh * 3600 + om * 60);
    pos += 6;
  } else {
    return std::nullopt;
  }
  if (pos != text.size())
    return std::nullopt;
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 ||
      minute > 59 || second > 60)
    return std::nullopt;

  // Days since epoch by the days-from-civil algorithm.
  long long y = year;
  long long m = month;
  y -= m <= 2;
  long long era = (y >= 0 ? y : y - 399) / 400;
  long long yoe = y - era * 400;
  long long doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + day - 1;
  long long doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  long long days = era * 146097 + doe - 719468;

  BigInt result = BigInt(days) * 86400 + hour * 3600 + minute * 60 + second;
  result -= offset;
  return result;
}

// ---------------------------------------------------------------------------
// Literal parsing
// ---------------------------------------------------------------------------

namespace {

class LiteralParser {
public:
  LiteralParser(const std::vector<Token> &toks, std::size_t start)
      : toks_(toks), pos_(start) {}

  Value parse_whole(const Ty &ty) {
    Value v = parse_value(ty);
    if (pos_ != toks_.size())
      reject("trailing input after literal");
    return v;
  }

  Value parse_one_operand(const Ty &ty) { return parse_operand(ty); }

  std::size_t position() const { return pos_; }

private:
  const std::vector<Token> &toks_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= toks_.size(); }

  const Token &peek() const {
    if (at_end())
      reject("unexpected end of literal");
    return toks_[pos_];
  }

  const Token &next() {
    const Token &t = peek();
    ++pos_;
    return t;
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
    if (!accept_punct(p))
      reject(std::string("expected '") + p + "' in literal");
  }

  bool peek_keyword(const char *k) const {
    return !at_end() && toks_[pos_].kind == TokenKind::Keyword &&
           toks_[pos_].text == k;
  }

  Value parse_value(const Ty &ty) {
    if (accept_punct("(")) {
      Value v = parse_value(ty);
      expect_punct(")");
      return v;
    }
    switch (ty.kind()) {
    case TyKind::Int:
      return Value::int_(expect_int());
    case TyKind::Nat: {
      BigInt n = expect_int();
      if (n < 0)
        reject("nat literal must be nonnegative, got " + n.str());
      return Value::nat(n);
    }
    case TyKind::Mutez:
      return Value::mutez(expect_int());
    case TyKind::Timestamp: {
      const Token &t = peek();
      if (t.kind == TokenKind::IntLit)
        return Value::timestamp(expect_int());
      if (t.kind == TokenKind::StringLit) {
        next();
        auto epoch = rfc3339_to_epoch(t.text);
        if (!epoch)
          reject("bad RFC3339 timestamp: \"" + t.text + "\"");
        return Value::timestamp(*epoch);
      }
      reject("expected timestamp literal (integer or RFC3339 string)");
    }
    case TyKind::String:
      return Value::string(expect_string());
    case TyKind::KeyHash:
      return Value::key_hash(expect_string());
    case TyKind::Address:
      return Value::address(expect_string());
    case TyKind::Key:
      return Value::key(expect_string());
    case TyKind::Signature:
      return Value::signature(expect_string());
    case TyKind::ChainId:
      return Value::chain_id(expect_string());
    case TyKind::Bytes: {
      const Token &t = next();
      if (t.kind != TokenKind::BytesLit)
        reject("expected bytes literal");
      return Value::bytes(t.text);
    }
    case TyKind::Bool: {
      const Token &t = next();
      if (t.kind == TokenKind::Keyword && t.text == "True")
        return Value::bool_(true);
      if (t.kind == TokenKind::Keyword && t.text == "False")
        return Value::bool_(false);
      reject("expected True or False");
    }
    case TyKind::Unit:
      expect_keyword("Unit");
      return Value::unit();
    case TyKind::Option: {
      if (peek_keyword("None")) {
        next();
        return Value::none(ty.arg(0));
      }
      expect_keyword("Some");
      return Value::some(parse_operand(ty.arg(0)));
    }
    case TyKind::Pair: {
      expect_keyword("Pair");
      Value a = parse_operand(ty.arg(0));
      Value b = parse_operand(ty.arg(1));
      return Value::pair(std::move(a), std::move(b));
    }
    case TyKind::Or: {
      if (peek_keyword("Left")) {
        next();
        return Value::left(parse_operand(ty.arg(0)), ty.arg(1));
      }
      expect_keyword("Right");
      return Value::right(parse_operand(ty.arg(1)), ty.arg(0));
    }
    case TyKind::List: {
      std::vector<Value> elems = parse_braced_list(ty.arg(0));
      return Value::list(std::move(elems), ty.arg(0));
    }
    case TyKind::Set: {
      std::vector<Value> elems = parse_braced_list(ty.arg(0));
      std::vector<Value> sorted = elems;
      Value s = Value::set(std::move(sorted), ty.arg(0));
      if (s.children().size() != elems.size())
        reject("duplicate set element");
      return s;
    }
    case TyKind::Map:
    case TyKind::BigMap: {
      expect_punct("{");
      std::vector<std::pair<Value, Value>> entries;
      if (!accept_punct("}")) {
        for (;;) {
          expect_keyword("Elt");
          Value k = parse_operand(ty.arg(0));
          Value v = parse_operand(ty.arg(1));
          entries.emplace_back(std::move(k), std::move(v));
          if (accept_punct("}"))
            break;
          expect_punct(";");
          if (accept_punct("}")) // tolerate trailing semicolon
            break;
        }
      }
      return ty.kind() == TyKind::Map
                 ? Value::map(std::move(entries), ty.arg(0), ty.arg(1))
                 : Value::big_map(std::move(entries), ty.arg(0), ty.arg(1));
    }
    case TyKind::Contract: {
      // A contract handle is written as its address.
      Value addr = Value::address(expect_string());
      return Value::abstract("contract", addr, ty);
    }
    case TyKind::Operation:
      reject("operation values have no literal syntax");
    }
    reject("unsupported literal type " + ty.to_string());
  }

  // Operand position inside a constructor application: compound literals
  // must be parenthesized or braced, mirroring Michelson's PUSH syntax.
  Value parse_operand(const Ty &ty) {
    if (accept_punct("(")) {
      Value v = parse_value(ty);
      expect_punct(")");
      return v;
    }
    switch (ty.kind()) {
    case TyKind::Option:
      if (peek_keyword("None")) {
        next();
        return Value::none(ty.arg(0));
      }
      reject("compound literal must be parenthesized");
    case TyKind::Pair:
    case TyKind::Or:
      reject("compound literal must be parenthesized");
    default:
      return parse_value(ty);
    }
  }

  std::vector<Value> parse_braced_list(const Ty &elem_ty) {
    expect_punct("{");
    std::vector<Value> elems;
    if (accept_punct("}"))
      return elems;
    for (;;) {
      elems.push_back(parse_value(elem_ty));
      if (accept_punct("}"))
        break;
      expect_punct(";");
      if (accept_punct("}"))
        break;
    }
    return elems;
  }

  BigInt expect_int() {
    const Token &t = next();
    if (t.kind != TokenKind::IntLit)
      reject("expected integer literal, got " + t.text);
    return BigInt(t.text);
  }

  std::string expect_string() {
    const Token &t = next();
    if (t.kind != TokenKind::StringLit)
      reject("expected string literal");
    return t.text;
  }

  void expect_keyword(const char *k) {
    const Token &t = next();
    if (t.kind != TokenKind::Keyword || t.text != k)
      reject(std::string("expected ") + k + ", got " + t.text);
  }
};

} // namespace

Value parse_literal(std::string_view text, const Ty &ty) {
  std::vector<Token> toks;
  try {
    toks = tokenize(text);
  } catch (const LexError &e) {
    throw ValueError(std::string("bad literal: ") + e.what(), e.span());
  }
  if (toks.empty())
    throw ValueError("empty literal");
  return LiteralParser(toks, 0).parse_whole(ty);
}

Value parse_literal_tokens(const std::vector<Token> &toks, std::size_t &pos,
                           const Ty &ty) {
  LiteralParser p(toks, pos);
  Value v = p.parse_one_operand(ty);
  pos = p.position();
  return v;
}

} // namespace tzv
