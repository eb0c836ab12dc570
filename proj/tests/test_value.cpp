// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ctime>

#include "tzv/errors.hpp"
#include "tzv/value.hpp"

using namespace tzv;

TEST_CASE("typ_infer on atoms and composites") {
  CHECK(typ_infer(Value::nat(3)) == Ty::nat());
  CHECK(typ_infer(Value::pair(Value::nat(1), Value::nat(2))) ==
        Ty::pair(Ty::nat(), Ty::nat()));
  CHECK(typ_infer(Value::none(Ty::int_())) == Ty::option(Ty::int_()));
  CHECK(typ_infer(Value::left(Value::nat(1), Ty::string())) ==
        Ty::or_(Ty::nat(), Ty::string()));
  CHECK(typ_infer(Value::list({}, Ty::operation())) ==
        Ty::list(Ty::operation()));
}

TEST_CASE("well_formed and the unchecked escape hatch") {
  Value ok = Value::list({Value::int_(1), Value::int_(2)}, Ty::int_());
  CHECK(well_formed(ok));

  // Heterogeneous list: rejected by the factory, detectable when built raw.
  CHECK_THROWS_AS(Value::list({Value::int_(1), Value::nat(2)}, Ty::int_()),
                  ValueError);
  Value bad = Value::unsafe_from_parts(ValueKind::ListV, 0, "",
                                       {Value::int_(1), Value::nat(2)},
                                       {Ty::int_()}, false);
  CHECK_FALSE(well_formed(bad));

  Value neg_nat =
      Value::unsafe_from_parts(ValueKind::NatV, -1, "", {}, {}, false);
  CHECK_FALSE(well_formed(neg_nat));

  Value big_mutez = Value::unsafe_from_parts(
      ValueKind::MutezV, mutez_max() + 1, "", {}, {}, false);
  CHECK_FALSE(well_formed(big_mutez));
}

TEST_CASE("map construction rejects duplicate keys") {
  // Oracle: naive de-duplication of the key list.
  std::vector<std::pair<Value, Value>> entries;
  entries.emplace_back(Value::nat(1), Value::int_(10));
  entries.emplace_back(Value::nat(1), Value::int_(20));
  std::vector<BigInt> keys;
  for (auto &[k, v] : entries)
    keys.push_back(k.num());
  std::sort(keys.begin(), keys.end());
  bool has_dup = std::adjacent_find(keys.begin(), keys.end()) != keys.end();
  CHECK(has_dup);
  CHECK_THROWS_AS(Value::map(std::move(entries), Ty::nat(), Ty::int_()),
                  ValueError);

  // And a raw duplicate-key map is ill-formed.
  Value raw = Value::unsafe_from_parts(
      ValueKind::MapV, 0, "",
      {Value::nat(1), Value::int_(10), Value::nat(1), Value::int_(20)},
      {Ty::nat(), Ty::int_()}, false);
  CHECK_FALSE(well_formed(raw));
}

TEST_CASE("compare reproduces the boolean table") {
  CHECK(compare(Value::bool_(false), Value::bool_(true)) == -1);
  CHECK(compare(Value::bool_(true), Value::bool_(false)) == 1);
  CHECK(compare(Value::bool_(false), Value::bool_(false)) == 0);
  CHECK(compare(Value::bool_(true), Value::bool_(true)) == 0);
}

TEST_CASE("compare basics") {
  CHECK(compare(Value::int_(7), Value::int_(7)) == 0);
  // Oracle: lexicographic byte order via the standard three-way compare.
  std::string a = "abc", b = "abd";
  int expect = a.compare(b) < 0 ? -1 : (a.compare(b) > 0 ? 1 : 0);
  CHECK(compare(Value::string("abc"), Value::string("abd")) == expect);
  CHECK(compare(Value::string("abc"), Value::string("abd")) == -1);
  CHECK_THROWS_AS(compare(Value::int_(1), Value::nat(1)), EvalError);
  CHECK_THROWS_AS(compare(Value::unit(), Value::unit()), EvalError);
}

namespace {

// Exhaustive small domains per comparable type, as lists of values.
std::vector<std::vector<Value>> comparable_domains() {
  std::vector<std::vector<Value>> domains;
  domains.push_back({Value::bool_(false), Value::bool_(true)});
  {
    std::vector<Value> ints;
    for (int i = -5; i <= 5; ++i)
      ints.push_back(Value::int_(i));
    domains.push_back(ints);
  }
  {
    std::vector<Value> strs = {Value::string("")};
    for (std::string s : {"a", "b", "aa", "ab", "ba", "bb"})
      strs.push_back(Value::string(s));
    domains.push_back(strs);
  }
  {
    std::vector<Value> nats;
    for (int i = 0; i <= 6; ++i)
      nats.push_back(Value::nat(i));
    domains.push_back(nats);
  }
  {
    std::vector<Value> mutez = {Value::mutez(0), Value::mutez(1),
                                Value::mutez(42), Value::mutez(mutez_max())};
    domains.push_back(mutez);
  }
  {
    std::vector<Value> stamps = {Value::timestamp(-100), Value::timestamp(0),
                                 Value::timestamp(1),
                                 Value::timestamp(1000000000)};
    domains.push_back(stamps);
  }
  {
    std::vector<Value> bytes = {Value::bytes(""), Value::bytes("\x00"),
                                Value::bytes("\x00\x01"), Value::bytes("\x7f"),
                                Value::bytes("\xff")};
    domains.push_back(bytes);
  }
  {
    std::vector<Value> khs = {Value::key_hash("tz1a"), Value::key_hash("tz1b"),
                              Value::key_hash("tz2a")};
    domains.push_back(khs);
  }
  {
    std::vector<Value> addrs = {Value::address("KT1x"), Value::address("tz1y"),
                                Value::address("tz1z")};
    domains.push_back(addrs);
  }
  return domains;
}

} // namespace

TEST_CASE("compare is a total order on each comparable type") {
  for (const auto &domain : comparable_domains()) {
    for (const Value &a : domain)
      for (const Value &b : domain) {
        int ab = compare(a, b);
        CHECK(ab >= -1);
        CHECK(ab <= 1);
        // Antisymmetry.
        CHECK(ab == -compare(b, a));
        // Zero iff structurally equal.
        CHECK((ab == 0) == (a == b));
        // Transitivity over the whole domain.
        for (const Value &c : domain) {
          if (ab <= 0 && compare(b, c) <= 0)
            CHECK(compare(a, c) <= 0);
        }
      }
  }
}

TEST_CASE("set and map iteration yields strictly increasing keys") {
  Value s = Value::set({Value::int_(3), Value::int_(-2), Value::int_(7),
                        Value::int_(0)},
                       Ty::int_());
  for (std::size_t i = 1; i < s.children().size(); ++i)
    CHECK(compare(s.child(i - 1), s.child(i)) < 0);

  Value m = Value::map({{Value::string("b"), Value::nat(2)},
                        {Value::string("a"), Value::nat(1)},
                        {Value::string("c"), Value::nat(3)}},
                       Ty::string(), Ty::nat());
  for (std::size_t i = 2; i < m.children().size(); i += 2)
    CHECK(compare(m.child(i - 2), m.child(i)) < 0);
  CHECK(well_formed(m));
}

TEST_CASE("parse_literal basics") {
  CHECK(parse_literal("1", Ty::nat()) == Value::nat(1));
  Value v = parse_literal("Pair 0 {}", Ty::pair(Ty::nat(), Ty::list(Ty::operation())));
  CHECK(v == Value::pair(Value::nat(0), Value::list({}, Ty::operation())));
  CHECK_THROWS_AS(parse_literal("-3", Ty::nat()), ValueError);
  CHECK_THROWS_AS(parse_literal("9223372036854775808", Ty::mutez()), ValueError);
  CHECK_THROWS_AS(parse_literal("\"x\"", Ty::nat()), ValueError);
  CHECK(parse_literal("{ 1; 2; 3 }", Ty::list(Ty::int_())) ==
        Value::list({Value::int_(1), Value::int_(2), Value::int_(3)},
                    Ty::int_()));
  CHECK(parse_literal("Left 4", Ty::or_(Ty::nat(), Ty::string())) ==
        Value::left(Value::nat(4), Ty::string()));
  CHECK(parse_literal("0xdeadBEEF", Ty::bytes()) ==
        Value::bytes("\xde\xad\xbe\xef"));
}

TEST_CASE("timestamps accept RFC3339 and integers") {
  CHECK(parse_literal("\"1970-01-01T00:00:01Z\"", Ty::timestamp()) ==
        Value::timestamp(1));
  CHECK(parse_literal("12345", Ty::timestamp()) == Value::timestamp(12345));

  // Oracle: the C library calendar routine.
  auto check_against_timegm = [](int y, int mo, int d, int h, int mi, int s,
                                 const std::string &text) {
    std::tm tm{};
    tm.tm_year = y - 1900;
    tm.tm_mon = mo - 1;
    tm.tm_mday = d;
    tm.tm_hour = h;
    tm.tm_min = mi;
    tm.tm_sec = s;
    time_t expect = timegm(&tm);
    auto got = rfc3339_to_epoch(text);
    REQUIRE(got.has_value());
    CHECK(*got == BigInt(static_cast<long long>(expect)));
  };
  check_against_timegm(2020, 2, 29, 12, 30, 45, "2020-02-29T12:30:45Z");
  check_against_timegm(1999, 12, 31, 23, 59, 59, "1999-12-31T23:59:59Z");
  check_against_timegm(1960, 6, 1, 0, 0, 0, "1960-06-01T00:00:00Z");
  check_against_timegm(2038, 1, 19, 3, 14, 8, "2038-01-19T03:14:08Z");

  // Offset handling: 02:00 at +02:00 is midnight UTC.
  auto got = rfc3339_to_epoch("2000-01-01T02:00:00+02:00");
  std::tm tm{};
  tm.tm_year = 100;
  tm.tm_mon = 0;
  tm.tm_mday = 1;
  time_t expect = timegm(&tm);
  REQUIRE(got.has_value());
  CHECK(*got == BigInt(static_cast<long long>(expect)));

  CHECK_FALSE(rfc3339_to_epoch("not a date").has_value());
  CHECK_FALSE(rfc3339_to_epoch("2020-13-01T00:00:00Z").has_value());
}

TEST_CASE("typ_infer agrees with parse_literal's requested type") {
  const Ty cases[] = {
      Ty::nat(),
      Ty::int_(),
      Ty::pair(Ty::nat(), Ty::list(Ty::operation())),
      Ty::option(Ty::string()),
      Ty::or_(Ty::unit(), Ty::bytes()),
      Ty::map(Ty::string(), Ty::nat()),
      Ty::set(Ty::int_()),
  };
  const char *lits[] = {
      "7", "-9", "Pair 3 {}", "Some \"x\"", "Right 0xab",
      "{ Elt \"k\" 1 }", "{ -1; 4 }",
  };
  for (std::size_t i = 0; i < std::size(cases); ++i) {
    Value v = parse_literal(lits[i], cases[i]);
    CHECK(typ_infer(v) == cases[i]);
    CHECK(well_formed(v));
  }
}

TEST_CASE("abstract values and the signing stand-in") {
  Value payload = Value::bytes("hello");
  Value h1 = crypto_result("sha512", payload);
  Value h2 = crypto_result("sha512", payload);
  CHECK(h1 == h2);
  CHECK(typ_infer(h1) == Ty::bytes());
  Value other = crypto_result("sha512", Value::bytes("world"));
  CHECK(h1 != other);
  CHECK(crypto_result("sha256", payload) != h1); // tag participates

  Value sig = sign("edpkAlice", payload);
  CHECK(signature_valid(Value::key("edpkAlice"), sig, payload));
  CHECK_FALSE(signature_valid(Value::key("edpkBob"), sig, payload));
  CHECK_FALSE(signature_valid(Value::key("edpkAlice"), sig,
                              Value::bytes("tampered")));
}

TEST_CASE("value printing round-trips through parse_literal") {
  const Ty tys[] = {
      Ty::pair(Ty::int_(), Ty::pair(Ty::string(), Ty::bytes())),
      Ty::list(Ty::option(Ty::nat())),
      Ty::map(Ty::nat(), Ty::or_(Ty::unit(), Ty::string())),
  };
  const char *lits[] = {
      "Pair -4 (Pair \"a\\\"b\" 0x00ff)",
      "{ Some 1; None; Some 2 }",
      "{ Elt 0 (Left Unit); Elt 9 (Right \"s\") }",
  };
  for (std::size_t i = 0; i < std::size(tys); ++i) {
    Value v = parse_literal(lits[i], tys[i]);
    Value again = parse_literal(print_value(v), tys[i]);
    CHECK(v == again);
  }
}
