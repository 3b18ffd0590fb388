#include "ratkit/semiring.hpp"

#include <cctype>
#include <functional>

namespace ratkit {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TagMismatch: return "TagMismatch";
    case ErrorKind::NotStarable: return "NotStarable";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownLetter: return "UnknownLetter";
    case ErrorKind::InvalidExpression: return "InvalidExpression";
    case ErrorKind::EpsilonPresent: return "EpsilonPresent";
    case ErrorKind::NonBoolean: return "NonBoolean";
    case ErrorKind::NonBooleanEpsilon: return "NonBooleanEpsilon";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::FormatError: return "FormatError";
  }
  return "Error";
}

std::string_view tag_name(SemiringTag tag) {
  switch (tag) {
    case SemiringTag::B: return "B";
    case SemiringTag::N: return "N";
    case SemiringTag::Z: return "Z";
    case SemiringTag::Q: return "Q";
    case SemiringTag::MinPlus: return "MinPlus";
  }
  return "?";
}

SemiringTag parse_tag(std::string_view text) {
  if (text == "B") return SemiringTag::B;
  if (text == "N") return SemiringTag::N;
  if (text == "Z") return SemiringTag::Z;
  if (text == "Q") return SemiringTag::Q;
  if (text == "MinPlus" || text == "minplus" || text == "Zmin") return SemiringTag::MinPlus;
  throw Error(ErrorKind::FormatError, "unknown semiring '" + std::string(text) + "'");
}

Weight::Weight() : tag_(SemiringTag::B), inf_(false), value_(0) {}

Weight::Weight(SemiringTag tag, Rational value, bool inf)
    : tag_(tag), inf_(inf), value_(inf ? Rational(0) : std::move(value)) {}

Weight Weight::zero(SemiringTag tag) {
  if (tag == SemiringTag::MinPlus) return infinity();
  return Weight(tag, 0, false);
}

Weight Weight::one(SemiringTag tag) {
  if (tag == SemiringTag::MinPlus) return Weight(tag, 0, false);
  return Weight(tag, 1, false);
}

Weight Weight::infinity() { return Weight(SemiringTag::MinPlus, 0, true); }

Weight Weight::from_int(SemiringTag tag, long long value) {
  return from_rational(tag, Rational(value));
}

Weight Weight::from_rational(SemiringTag tag, const Rational& value) {
  switch (tag) {
    case SemiringTag::B:
      if (value != 0 && value != 1)
        throw Error(ErrorKind::FormatError, "Boolean weight must be 0 or 1");
      break;
    case SemiringTag::N:
      if (value < 0 || denominator(value) != 1)
        throw Error(ErrorKind::FormatError, "N weight must be a natural number");
      break;
    case SemiringTag::Z:
    case SemiringTag::MinPlus:
      if (denominator(value) != 1)
        throw Error(ErrorKind::FormatError, "weight must be an integer");
      break;
    case SemiringTag::Q:
      break;
  }
  return Weight(tag, value, false);
}

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer read_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Weight Weight::parse(SemiringTag tag, std::string_view text) {
  auto bad = [&] {
    return Error(ErrorKind::FormatError,
                 "bad " + std::string(tag_name(tag)) + " weight '" + std::string(text) + "'");
  };
  if (tag == SemiringTag::MinPlus && text == "oo") return infinity();
  if (tag == SemiringTag::Q) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
      auto num = text.substr(0, slash);
      auto den = text.substr(slash + 1);
      if (!is_integer_text(num) || !is_integer_text(den)) throw bad();
      Integer d = read_integer(den);
      if (d == 0) throw bad();
      return Weight(tag, Rational(read_integer(num), d), false);
    }
  }
  if (!is_integer_text(text)) throw bad();
  try {
    return from_rational(tag, Rational(read_integer(text)));
  } catch (const Error&) {
    throw bad();
  }
}

bool Weight::is_zero() const {
  if (tag_ == SemiringTag::MinPlus) return inf_;
  return value_ == 0;
}

bool Weight::is_one() const {
  if (tag_ == SemiringTag::MinPlus) return !inf_ && value_ == 0;
  return value_ == 1;
}

bool Weight::starable() const {
  switch (tag_) {
    case SemiringTag::B: return true;
    case SemiringTag::N:
    case SemiringTag::Z: return value_ == 0;
    case SemiringTag::Q: return abs(value_) < 1;
    case SemiringTag::MinPlus: return inf_ || value_ >= 0;
  }
  return false;
}

std::string Weight::to_string() const {
  if (inf_) return "oo";
  if (denominator(value_) == 1) return numerator(value_).str();
  return numerator(value_).str() + "/" + denominator(value_).str();
}

std::size_t Weight::hash() const {
  std::size_t h = std::hash<std::string>{}(to_string());
  return h * 31 + static_cast<std::size_t>(tag_);
}

bool operator<(const Weight& x, const Weight& y) {
  if (x.tag_ != y.tag_) return x.tag_ < y.tag_;
  if (x.inf_ != y.inf_) return y.inf_;
  return x.value_ < y.value_;
}

namespace {

void check_tags(const Weight& x, const Weight& y) {
  if (x.tag() != y.tag())
    throw Error(ErrorKind::TagMismatch, std::string(tag_name(x.tag())) + " vs " +
                                            std::string(tag_name(y.tag())));
}

}  // namespace

Weight add(const Weight& x, const Weight& y) {
  check_tags(x, y);
  switch (x.tag()) {
    case SemiringTag::B:
      return Weight::from_int(SemiringTag::B, (x.is_zero() && y.is_zero()) ? 0 : 1);
    case SemiringTag::MinPlus:
      if (x.is_infinite()) return y;
      if (y.is_infinite()) return x;
      return x.value() <= y.value() ? x : y;
    default:
      return Weight::from_rational(x.tag(), x.value() + y.value());
  }
}

Weight mul(const Weight& x, const Weight& y) {
  check_tags(x, y);
  if (x.tag() == SemiringTag::MinPlus) {
    if (x.is_infinite() || y.is_infinite()) return Weight::infinity();
    return Weight::from_rational(SemiringTag::MinPlus, x.value() + y.value());
  }
  return Weight::from_rational(x.tag(), x.value() * y.value());
}

Weight star(const Weight& x) {
  if (!x.starable())
    throw Error(ErrorKind::NotStarable,
                x.to_string() + " has no star in " + std::string(tag_name(x.tag())));
  switch (x.tag()) {
    case SemiringTag::Q: return Weight::from_rational(SemiringTag::Q, Rational(1) / (1 - x.value()));
    default: return Weight::one(x.tag());
  }
}

}  // namespace ratkit
