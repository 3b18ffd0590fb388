#include <cctype>

#include "ratkit/expr.hpp"

namespace ratkit {

namespace {

bool is_letter(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, SemiringTag tag, const std::optional<std::string>& alphabet)
      : text_(text), tag_(tag), alphabet_(alphabet) {}

  Expr run() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, "at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor() {
    char c = peek();
    return is_letter(c) || c == '\\' || c == '(' || c == '<';
  }

  Expr expr() {
    Expr e = term();
    while (peek() == '+') {
      ++pos_;
      e = sum(e, term());
    }
    return e;
  }

  Expr term() {
    if (!starts_factor()) fail("expected an operand");
    Expr e = factor();
    for (;;) {
      if (peek() == '.') {
        ++pos_;
        if (!starts_factor()) fail("expected an operand after '.'");
      } else if (!starts_factor()) {
        break;
      }
      e = prod(e, factor());
    }
    return e;
  }

  Expr factor() {
    if (peek() == '<') {
      Weight k = weight();
      if (!starts_factor()) fail("expected an operand after a weight");
      return lweight(k, factor());
    }
    Expr e = base();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        e = star(e);
      } else if (c == '<') {
        e = rweight(e, weight());
      } else {
        return e;
      }
    }
  }

  Weight weight() {
    ++pos_;  // '<'
    auto close = text_.find('>', pos_);
    if (close == std::string_view::npos) fail("unterminated weight");
    std::string body;
    for (char c : text_.substr(pos_, close - pos_))
      if (!std::isspace(static_cast<unsigned char>(c))) body += c;
    try {
      Weight k = Weight::parse(tag_, body);
      pos_ = close + 1;
      return k;
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  Expr base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == '\\') {
      if (pos_ + 1 >= text_.size()) fail("dangling '\\'");
      char d = text_[pos_ + 1];
      pos_ += 2;
      if (d == 'e') return one(tag_);
      if (d == 'z') return zero(tag_);
      pos_ -= 2;
      fail("unknown constant '\\" + std::string(1, d) + "'");
    }
    if (is_letter(c)) {
      if (alphabet_ && alphabet_->find(c) == std::string::npos)
        throw Error(ErrorKind::UnknownLetter,
                    "'" + std::string(1, c) + "' at position " + std::to_string(pos_));
      ++pos_;
      return atom(tag_, c);
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  SemiringTag tag_;
  const std::optional<std::string>& alphabet_;
  std::size_t pos_ = 0;
};

// Binding levels, loosest first.
enum Level { kSum = 0, kTerm = 1, kFactor = 2, kPostfix = 3, kBase = 4 };

Level level_of(const Expr& e) {
  switch (e.kind()) {
    case Kind::Sum: return kSum;
    case Kind::Prod: return kTerm;
    case Kind::LWeight: return kFactor;
    case Kind::Star:
    case Kind::RWeight: return kPostfix;
    default: return kBase;
  }
}

void print(const Expr& e, Level need, std::string& out);

void print_at(const Expr& e, Level need, std::string& out) {
  if (level_of(e) < need) {
    out += '(';
    print(e, kSum, out);
    out += ')';
  } else {
    print(e, need, out);
  }
}

void print(const Expr& e, Level, std::string& out) {
  switch (e.kind()) {
    case Kind::Zero: out += "\\z"; break;
    case Kind::One: out += "\\e"; break;
    case Kind::Atom: out += e.letter(); break;
    case Kind::Sum:
      print_at(e.left(), kSum, out);
      out += '+';
      print_at(e.right(), kTerm, out);
      break;
    case Kind::Prod:
      print_at(e.left(), kTerm, out);
      // A bare left weight here would be read as a right weight of the left operand.
      print_at(e.right(), e.right().kind() == Kind::LWeight ? kPostfix : kFactor, out);
      break;
    case Kind::Star:
      print_at(e.child(), kPostfix, out);
      out += '*';
      break;
    case Kind::LWeight:
      out += '<' + e.weight().to_string() + '>';
      print_at(e.child(), kFactor, out);
      break;
    case Kind::RWeight:
      print_at(e.child(), kPostfix, out);
      out += '<' + e.weight().to_string() + '>';
      break;
  }
}

}  // namespace

Expr parse_expr(std::string_view text, SemiringTag tag, const std::optional<std::string>& alphabet) {
  return Parser(text, tag, alphabet).run();
}

std::string to_string(const Expr& e) {
  std::string out;
  print(e, kSum, out);
  return out;
}

}  // namespace ratkit
