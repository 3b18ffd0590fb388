#include "ratkit/delta.hpp"

namespace ratkit {

namespace {

const Weight kOne = Weight::one(SemiringTag::B);
const Weight kZero = Weight::zero(SemiringTag::B);

// The same automaton without the empty word: state 0 is no longer final.
Automaton without_unit(Automaton a) {
  a.set_final(0, kZero);
  return a;
}

// Normalised form: a fresh final state t that no edge leaves, entered by a
// copy of every edge entering a final state; t is the only final state.
// Returns the trimmed automaton and the index of t, if t survives.
std::pair<Automaton, std::optional<std::size_t>> normalised(const Automaton& a) {
  Automaton n = a;
  std::size_t t = n.add_state(kZero, kOne);
  for (const auto& [k, w] : a.edges())
    if (!a.final_weight(k.dst).is_zero()) n.add_edge(k.src, k.label, kOne, t);
  for (std::size_t p = 0; p < t; ++p) n.set_final(p, kZero);
  Automaton trimmed = trim(n);
  if (trimmed.size() == 0) return {std::move(trimmed), std::nullopt};
  return {std::move(trimmed), trimmed.size() - 1};
}

Automaton build(const Expr& e, const std::string& alphabet) {
  switch (e.kind()) {
    case Kind::Zero: return standard_zero(SemiringTag::B, alphabet);
    case Kind::One: return standard_one(SemiringTag::B, alphabet);
    case Kind::Atom: return standard_atom(SemiringTag::B, e.letter(), alphabet);
    case Kind::Sum: return standard_sum(build(e.left(), alphabet), build(e.right(), alphabet));
    case Kind::Prod: return standard_product(build(e.left(), alphabet), build(e.right(), alphabet));
    case Kind::Star: {
      Automaton a = build(e.child(), alphabet);
      auto [n, t] = normalised(a);
      // Stars of expressions denoting at most the empty word keep the plain
      // standard star.
      if (!t) return standard_star(a);
      // (N0 . A0)* with the junction t made final: every loop through the
      // new ball passes through t, which raises the loop complexity by one.
      Automaton b = standard_star(standard_product(without_unit(n), without_unit(a)));
      b.set_final(*t, kOne);
      return b;
    }
    default: throw Error(ErrorKind::NonBoolean, "weights in a Boolean expression");
  }
}

}  // namespace

Automaton eggan_automaton(const Expr& e, std::string_view alphabet) {
  if (e.tag() != SemiringTag::B) throw Error(ErrorKind::NonBoolean, "defined over B only");
  Automaton tmp(SemiringTag::B, letters(e));
  tmp.extend_alphabet(alphabet);
  return build(e, tmp.alphabet());
}

}  // namespace ratkit
