#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "ratkit/error.hpp"

namespace ratkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class SemiringTag : std::uint8_t { B, N, Z, Q, MinPlus };

std::string_view tag_name(SemiringTag tag);
SemiringTag parse_tag(std::string_view text);

// An element of one of the five semirings. Values are exact: integers and
// rationals are arbitrary precision, min-plus adds a point at infinity.
class Weight {
 public:
  Weight();  // the zero of B

  static Weight zero(SemiringTag tag);
  static Weight one(SemiringTag tag);
  static Weight from_int(SemiringTag tag, long long value);
  static Weight from_rational(SemiringTag tag, const Rational& value);
  static Weight infinity();  // the zero of min-plus

  // Reads the textual syntax of the tag: 0|1, signed decimal, p/q, or oo.
  static Weight parse(SemiringTag tag, std::string_view text);

  SemiringTag tag() const { return tag_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_infinite() const { return inf_; }
  const Rational& value() const { return value_; }

  bool starable() const;
  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const Weight& x, const Weight& y) {
    return x.tag_ == y.tag_ && x.inf_ == y.inf_ && x.value_ == y.value_;
  }
  friend bool operator!=(const Weight& x, const Weight& y) { return !(x == y); }

  // Total order used only for deterministic sorting; infinity is largest.
  friend bool operator<(const Weight& x, const Weight& y);

 private:
  Weight(SemiringTag tag, Rational value, bool inf);

  SemiringTag tag_;
  bool inf_;
  Rational value_;
};

Weight add(const Weight& x, const Weight& y);
Weight mul(const Weight& x, const Weight& y);
// Throws Error(NotStarable) when x is outside the star domain of its tag.
Weight star(const Weight& x);

inline Weight operator+(const Weight& x, const Weight& y) { return add(x, y); }
inline Weight operator*(const Weight& x, const Weight& y) { return mul(x, y); }

}  // namespace ratkit
