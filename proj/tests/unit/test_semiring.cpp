#include <doctest.h>

#include "generators.hpp"
#include "ratkit/semiring.hpp"

using namespace ratkit;

namespace {

Weight w(SemiringTag tag, const char* text) { return Weight::parse(tag, text); }

}  // namespace

TEST_CASE("weights read and print in the syntax of their semiring") {
  CHECK(w(SemiringTag::B, "1").is_one());
  CHECK(w(SemiringTag::N, "7").to_string() == "7");
  CHECK(w(SemiringTag::Z, "-3").to_string() == "-3");
  CHECK(w(SemiringTag::Q, "4/6").to_string() == "2/3");
  CHECK(w(SemiringTag::Q, "-1/3").to_string() == "-1/3");
  CHECK(w(SemiringTag::MinPlus, "oo").is_zero());
  CHECK(w(SemiringTag::MinPlus, "0").is_one());
  CHECK(w(SemiringTag::MinPlus, "-2").to_string() == "-2");
}

TEST_CASE("malformed weights are rejected") {
  CHECK_THROWS_AS(w(SemiringTag::B, "2"), Error);
  CHECK_THROWS_AS(w(SemiringTag::N, "-1"), Error);
  CHECK_THROWS_AS(w(SemiringTag::Z, "1/2"), Error);
  CHECK_THROWS_AS(w(SemiringTag::Q, "1/0"), Error);
  CHECK_THROWS_AS(w(SemiringTag::Q, "x"), Error);
  try {
    w(SemiringTag::N, "-1");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FormatError);
  }
}

TEST_CASE("semiring names") {
  for (SemiringTag t : testing::kAllTags) CHECK(parse_tag(tag_name(t)) == t);
  CHECK_THROWS_AS(parse_tag("R"), Error);
}

TEST_CASE("min-plus operations") {
  auto m = SemiringTag::MinPlus;
  CHECK(add(w(m, "3"), w(m, "5")) == w(m, "3"));
  CHECK(mul(w(m, "3"), w(m, "5")) == w(m, "8"));
  CHECK(add(Weight::zero(m), w(m, "5")) == w(m, "5"));
  CHECK(mul(Weight::zero(m), w(m, "5")).is_zero());
  CHECK(star(w(m, "3")).is_one());
  CHECK(star(Weight::zero(m)).is_one());
  CHECK_THROWS_AS(star(w(m, "-1")), Error);
}

TEST_CASE("star is defined exactly on the documented domains") {
  CHECK(star(w(SemiringTag::Q, "1/2")) == w(SemiringTag::Q, "2"));
  CHECK(star(w(SemiringTag::Q, "-1/2")) == w(SemiringTag::Q, "2/3"));
  CHECK_FALSE(w(SemiringTag::Q, "1").starable());
  CHECK_FALSE(w(SemiringTag::Q, "-1").starable());
  CHECK(star(Weight::zero(SemiringTag::Z)).is_one());
  CHECK_FALSE(w(SemiringTag::Z, "1").starable());
  CHECK_FALSE(w(SemiringTag::N, "2").starable());
  CHECK(star(Weight::one(SemiringTag::B)).is_one());
  try {
    star(w(SemiringTag::N, "1"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStarable);
  }
}

TEST_CASE("operands of different semirings do not mix") {
  try {
    add(Weight::one(SemiringTag::Z), Weight::one(SemiringTag::Q));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TagMismatch);
  }
}

TEST_CASE("semiring laws on random elements") {
  testing::Rng rng(7);
  for (SemiringTag t : testing::kAllTags) {
    for (int i = 0; i < 200; ++i) {
      Weight x = testing::random_weight(rng, t), y = testing::random_weight(rng, t),
             z = testing::random_weight(rng, t);
      CHECK(add(add(x, y), z) == add(x, add(y, z)));
      CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
      CHECK(add(x, y) == add(y, x));
      CHECK(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)));
      CHECK(mul(x, Weight::one(t)) == x);
      CHECK(add(x, Weight::zero(t)) == x);
      CHECK(mul(x, Weight::zero(t)).is_zero());
      if (x.starable()) CHECK(star(x) == add(Weight::one(t), mul(x, star(x))));
    }
  }
}
