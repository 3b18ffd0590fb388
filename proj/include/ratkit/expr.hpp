#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "ratkit/semiring.hpp"

namespace ratkit {

enum class Kind : std::uint8_t { Zero, One, Atom, Sum, Prod, Star, LWeight, RWeight };

class Expr;
namespace detail {
struct ExprNode;
const ExprNode* nodeptr(const Expr& e);
}  // namespace detail

// Handle on an immutable, hash-consed expression node. Two handles compare
// equal exactly when the trees are structurally identical, so equality and
// hashing are O(1).
class Expr {
 public:
  Expr();  // the zero of B

  Kind kind() const;
  SemiringTag tag() const;
  char letter() const;                 // Atom
  const Weight& weight() const;        // LWeight, RWeight
  const Expr& left() const;            // Sum, Prod
  const Expr& right() const;           // Sum, Prod
  const Expr& child() const;           // Star, LWeight, RWeight
  std::size_t hash() const;

  bool is_zero() const { return kind() == Kind::Zero; }
  bool is_one() const { return kind() == Kind::One; }

  friend bool operator==(const Expr& x, const Expr& y) { return x.node_ == y.node_; }
  friend bool operator!=(const Expr& x, const Expr& y) { return x.node_ != y.node_; }

  explicit Expr(std::shared_ptr<const detail::ExprNode> node) : node_(std::move(node)) {}

 private:
  friend const detail::ExprNode* detail::nodeptr(const Expr& e);
  std::shared_ptr<const detail::ExprNode> node_;
};

// Structural total order, used for deterministic sorting only.
int compare(const Expr& x, const Expr& y);
struct ExprLess {
  bool operator()(const Expr& x, const Expr& y) const { return compare(x, y) < 0; }
};
struct ExprHash {
  std::size_t operator()(const Expr& e) const { return e.hash(); }
};

// Constructors that keep expressions reduced modulo the trivial identities:
// unit and zero laws, 0* = 1, weight units and zeros, weight associativity
// k(hE) = (kh)E, (Ek)h = E(kh), (kE)h = k(Eh), and unit weights
// 1k = k1, E(k1) = Ek, (k1)E = kE.
Expr zero(SemiringTag tag);
Expr one(SemiringTag tag);
Expr atom(SemiringTag tag, char letter);
Expr sum(const Expr& x, const Expr& y);
Expr prod(const Expr& x, const Expr& y);
Expr star(const Expr& x);
Expr lweight(const Weight& k, const Expr& x);
Expr rweight(const Expr& x, const Weight& k);

// Constructors that build the node as given, for trees that are reduced
// afterwards by reduce_trivial.
namespace raw {
Expr sum(const Expr& x, const Expr& y);
Expr prod(const Expr& x, const Expr& y);
Expr star(const Expr& x);
Expr lweight(const Weight& k, const Expr& x);
Expr rweight(const Expr& x, const Weight& k);
}  // namespace raw

Expr reduce_trivial(const Expr& e);
bool is_reduced(const Expr& e);

// Grammar (whitespace is ignored):
//   expr    := term ('+' term)*
//   term    := factor ('.'? factor)*
//   factor  := '<' weight '>' factor | postfix
//   postfix := base ('*' | '<' weight '>')*
//   base    := letter | '\e' | '\z' | '(' expr ')'
// Sum and concatenation associate to the left. When `alphabet` is given,
// letters outside it raise UnknownLetter.
Expr parse_expr(std::string_view text, SemiringTag tag,
                const std::optional<std::string>& alphabet = std::nullopt);
std::string to_string(const Expr& e);

// Sorted, duplicate-free letters occurring in e.
std::string letters(const Expr& e);

// Throws Error(InvalidExpression) when a starred constant term has no star.
Weight constant_term(const Expr& e);
bool is_valid(const Expr& e);

struct Metrics {
  std::size_t literal_length = 0;
  std::size_t depth = 0;
  std::size_t star_height = 0;
};
Metrics metrics(const Expr& e);
std::size_t literal_length(const Expr& e);
std::size_t star_height(const Expr& e);

// Display-level simplification: sums and products rebuilt left-associated;
// in B also E+E = E (duplicate summands dropped) and (E*)* = E*.
Expr natural_simplify(const Expr& e);

// Coefficients of a series on the words of length at most `degree`.
class TruncatedSeries {
 public:
  TruncatedSeries(SemiringTag tag, std::size_t degree) : tag_(tag), degree_(degree) {}

  SemiringTag tag() const { return tag_; }
  std::size_t degree() const { return degree_; }
  const std::map<std::string, Weight>& coeffs() const { return coeffs_; }

  Weight coeff(const std::string& word) const;
  // Adds k to the coefficient of `word`; words longer than the degree are ignored.
  void accumulate(const std::string& word, const Weight& k);

  std::string to_string() const;

  friend bool operator==(const TruncatedSeries& x, const TruncatedSeries& y) {
    return x.tag_ == y.tag_ && x.degree_ == y.degree_ && x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const TruncatedSeries& x, const TruncatedSeries& y) { return !(x == y); }

 private:
  SemiringTag tag_;
  std::size_t degree_;
  std::map<std::string, Weight> coeffs_;
};

// Computed by structural recursion on the tree, never through automata.
TruncatedSeries truncated_series(const Expr& e, std::size_t n);

}  // namespace ratkit

template <>
struct std::hash<ratkit::Expr> {
  std::size_t operator()(const ratkit::Expr& e) const { return e.hash(); }
};
