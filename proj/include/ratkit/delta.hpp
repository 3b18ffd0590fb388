#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ratkit/automaton.hpp"
#include "ratkit/expr.hpp"

namespace ratkit {

// Operations on standard automata: state 0 is the unique initial state, has
// initial weight one and is the target of no edge. Positions of the left
// operand keep their numbers; those of the right operand follow.
Automaton standard_zero(SemiringTag tag, std::string_view alphabet = "");
Automaton standard_one(SemiringTag tag, std::string_view alphabet = "");
Automaton standard_atom(SemiringTag tag, char letter, std::string_view alphabet = "");
Automaton standard_sum(const Automaton& a, const Automaton& b);
Automaton standard_product(const Automaton& a, const Automaton& b);
// Throws Error(InvalidExpression) when the final weight of state 0 has no star.
Automaton standard_star(const Automaton& a);
Automaton standard_lweight(const Weight& k, const Automaton& a);
Automaton standard_rweight(const Automaton& a, const Weight& k);

// Glushkov construction: state 0, then one state per atom occurrence from left
// to right. `alphabet` adds letters beyond those occurring in e.
Automaton standard_automaton(const Expr& e, std::string_view alphabet = "");

// Star-normal form of a Boolean expression: every starred subexpression has
// constant term zero afterwards, and the standard automaton is unchanged.
Expr star_normal_form(const Expr& e);
bool is_star_normal(const Expr& e);

// Boolean construction with spontaneous transitions, states numbered in
// post-order (operands before the states a node adds).
Automaton thompson(const Expr& e, std::string_view alphabet = "");

// Finite linear combination of expressions with nonzero coefficients, in
// insertion order.
class LinComb {
 public:
  explicit LinComb(SemiringTag tag) : tag_(tag) {}

  SemiringTag tag() const { return tag_; }
  const std::vector<std::pair<Expr, Weight>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Weight coeff(const Expr& e) const;

  void add(const Expr& e, const Weight& k);
  void add(const LinComb& other);

  std::string to_string() const;

  friend bool operator==(const LinComb& x, const LinComb& y);
  friend bool operator!=(const LinComb& x, const LinComb& y) { return !(x == y); }

 private:
  SemiringTag tag_;
  std::vector<std::pair<Expr, Weight>> terms_;
  std::unordered_map<Expr, std::size_t> index_;
};

LinComb derive(const Expr& e, char letter);
LinComb derive(const LinComb& x, char letter);
// Throws Error(EmptyWord) on an empty word.
LinComb derive_word(const Expr& e, std::string_view word);

// True derived terms, computed from the syntax alone.
std::vector<Expr> true_derived_terms(const Expr& e);
// e first, then the true derived terms in order of discovery.
std::vector<Expr> derived_terms(const Expr& e);

struct DerivedTermAutomaton {
  Automaton automaton;
  std::vector<Expr> terms;  // state i is terms[i]
};
DerivedTermAutomaton derived_term_automaton(const Expr& e, std::string_view alphabet = "");

// Expression attached to each state of the standard automaton: the whole
// expression for state 0, and for an atom occurrence what remains to be read
// after it.
using PositionMap = std::vector<Expr>;
PositionMap continuation_map(const Expr& e);
// The same map as state numbers of the derived-term automaton.
StateMap continuation_state_map(const PositionMap& positions, const std::vector<Expr>& terms);

// Boolean automaton whose loop complexity equals the star height of e when
// every starred subexpression denotes a nonempty word.
Automaton eggan_automaton(const Expr& e, std::string_view alphabet = "");

}  // namespace ratkit
