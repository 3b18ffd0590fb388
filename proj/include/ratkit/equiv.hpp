#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "ratkit/automaton.hpp"
#include "ratkit/expr.hpp"

namespace ratkit {

enum class EquivMethod { BooleanDfa, FieldSpan, Sampled };
const char* method_name(EquivMethod m);

struct Witness {
  std::string word;
  Weight left;
  Weight right;
};

struct Verdict {
  bool equivalent = false;
  std::optional<Witness> witness;  // present exactly when not equivalent
  EquivMethod method = EquivMethod::BooleanDfa;
};

// B: subset constructions explored in lockstep. N, Z, Q: span of the joint
// row vectors I.mu(w) computed over Q. Min-plus: truncated behaviours up to
// `sample_length`, reported as Sampled. Alphabets are merged first.
// Throws TagMismatch and EpsilonPresent.
Verdict equivalent_automata(const Automaton& a, const Automaton& b, std::size_t sample_length = 8);
// Compares the derived-term automata.
Verdict equivalent_exprs(const Expr& e, const Expr& f, std::size_t sample_length = 8);

}  // namespace ratkit
