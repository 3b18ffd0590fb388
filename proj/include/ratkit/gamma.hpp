#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ratkit/automaton.hpp"
#include "ratkit/expr.hpp"

namespace ratkit {

using ExprMatrix = std::vector<std::vector<Expr>>;

// Transition matrix with entries sum_a <w>a, letters in alphabet order.
ExprMatrix letter_matrix(const Automaton& a);

// Removes the states in `order` (smallest first) from the automaton augmented
// with a fresh initial state i and final state t; removing q sets each label
// (p, r) to G + (K L*) H with G the old label, K = (p, q), L = (q, q),
// H = (q, r). Initial and final weights enter as <k>1 labels.
Expr state_elimination(const Automaton& a, const Order& order);

// The same computation phrased as the linear system L_p = sum_q E_pq L_q + T_p
// solved unknown by unknown with Arden's lemma.
Expr system_solution(const Automaton& a, const Order& order);

struct MnyResult {
  std::vector<ExprMatrix> steps;  // M(0) .. M(n), before the diagonal units
  ExprMatrix matrix;              // M(n) + 1 on the diagonal
  Expr aggregate;                 // sum_{p,q} <I_p> M_pq <T_q>
};
// With factor_stars, each new entry X + (Z Z*) X becomes Z* X and
// X + (X Z*) Z becomes X Z*.
MnyResult mcnaughton_yamada(const Automaton& a, const Order& order, bool factor_stars = false);

// Binary tree whose leaves are the states.
struct Division {
  std::size_t state = 0;
  std::vector<Division> parts;  // empty for a leaf, otherwise two subtrees

  bool leaf() const { return parts.empty(); }
};
Division balanced_division(std::size_t n);
// Nested pairs of state names, e.g. "((p,q),r)".
Division parse_division(std::string_view text, const Automaton& a);
std::string to_string(const Division& d, const Automaton& a);

struct RecursiveResult {
  ExprMatrix matrix;  // denotes E*
  Expr aggregate;     // I . E* . T
};
RecursiveResult recursive_method(const Automaton& a, const Division& division);

}  // namespace ratkit
