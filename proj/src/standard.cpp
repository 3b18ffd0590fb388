#include <string>

#include "ratkit/delta.hpp"

namespace ratkit {

namespace {

std::string merged(std::string_view x, std::string_view y) {
  Automaton tmp(SemiringTag::B, std::string(x));
  tmp.extend_alphabet(y);
  return tmp.alphabet();
}

void check_pair(const Automaton& a, const Automaton& b) {
  if (a.tag() != b.tag())
    throw Error(ErrorKind::TagMismatch, std::string(tag_name(a.tag())) + " vs " +
                                            std::string(tag_name(b.tag())));
}

// Copies the positions (states other than 0) of `from` into `into`, returning
// the new number of each state of `from`; state 0 maps to 0.
std::vector<std::size_t> copy_positions(const Automaton& from, Automaton& into) {
  std::vector<std::size_t> index(from.size(), 0);
  for (std::size_t p = 1; p < from.size(); ++p) index[p] = into.add_state(std::nullopt, from.final_weight(p));
  for (const auto& [k, w] : from.edges())
    if (k.src != 0) into.add_edge(index[k.src], k.label, w, index[k.dst]);
  return index;
}

}  // namespace

Automaton standard_zero(SemiringTag tag, std::string_view alphabet) {
  Automaton a(tag, std::string(alphabet));
  a.add_state(Weight::one(tag), Weight::zero(tag));
  return a;
}

Automaton standard_one(SemiringTag tag, std::string_view alphabet) {
  Automaton a(tag, std::string(alphabet));
  a.add_state(Weight::one(tag), Weight::one(tag));
  return a;
}

Automaton standard_atom(SemiringTag tag, char letter, std::string_view alphabet) {
  Automaton a(tag, std::string(alphabet) + letter);
  a.add_state(Weight::one(tag), Weight::zero(tag));
  a.add_state(Weight::zero(tag), Weight::one(tag));
  a.add_edge(0, letter, Weight::one(tag), 1);
  return a;
}

Automaton standard_sum(const Automaton& a, const Automaton& b) {
  check_pair(a, b);
  Automaton r(a.tag(), merged(a.alphabet(), b.alphabet()));
  r.add_state(Weight::one(a.tag()), add(a.final_weight(0), b.final_weight(0)));
  auto ia = copy_positions(a, r);
  auto ib = copy_positions(b, r);
  for (const auto& [k, w] : a.edges())
    if (k.src == 0) r.add_edge(0, k.label, w, ia[k.dst]);
  for (const auto& [k, w] : b.edges())
    if (k.src == 0) r.add_edge(0, k.label, w, ib[k.dst]);
  return r;
}

Automaton standard_product(const Automaton& a, const Automaton& b) {
  check_pair(a, b);
  SemiringTag tag = a.tag();
  const Weight& cb = b.final_weight(0);
  Automaton r(tag, merged(a.alphabet(), b.alphabet()));
  r.add_state(Weight::one(tag), mul(a.final_weight(0), cb));
  auto ia = copy_positions(a, r);
  for (std::size_t p = 1; p < a.size(); ++p) r.set_final(ia[p], mul(a.final_weight(p), cb));
  auto ib = copy_positions(b, r);
  for (const auto& [k, w] : a.edges())
    if (k.src == 0) r.add_edge(0, k.label, w, ia[k.dst]);
  // Initial edges of b leave every state of a in proportion to its final weight.
  for (std::size_t p = 0; p < a.size(); ++p) {
    const Weight& u = a.final_weight(p);
    if (u.is_zero()) continue;
    for (const auto& [k, w] : b.edges())
      if (k.src == 0) r.add_edge(ia[p], k.label, mul(u, w), ib[k.dst]);
  }
  return r;
}

Automaton standard_star(const Automaton& a) {
  SemiringTag tag = a.tag();
  const Weight& c = a.final_weight(0);
  if (!c.starable())
    throw Error(ErrorKind::InvalidExpression, "constant term " + c.to_string() + " has no star");
  Weight cs = star(c);
  Automaton r(tag, a.alphabet());
  r.add_state(Weight::one(tag), cs);
  auto ia = copy_positions(a, r);
  for (std::size_t p = 1; p < a.size(); ++p) r.set_final(ia[p], mul(a.final_weight(p), cs));
  for (const auto& [k, w] : a.edges())
    if (k.src == 0) r.add_edge(0, k.label, mul(cs, w), ia[k.dst]);
  for (std::size_t p = 1; p < a.size(); ++p) {
    const Weight& u = a.final_weight(p);
    if (u.is_zero()) continue;
    for (const auto& [k, w] : a.edges())
      if (k.src == 0) r.add_edge(ia[p], k.label, mul(mul(u, cs), w), ia[k.dst]);
  }
  return r;
}

Automaton standard_lweight(const Weight& k, const Automaton& a) {
  Automaton r(a.tag(), a.alphabet());
  r.add_state(Weight::one(a.tag()), mul(k, a.final_weight(0)));
  auto ia = copy_positions(a, r);
  for (const auto& [key, w] : a.edges())
    if (key.src == 0) r.add_edge(0, key.label, mul(k, w), ia[key.dst]);
  return r;
}

Automaton standard_rweight(const Automaton& a, const Weight& k) {
  Automaton r = a;
  for (std::size_t p = 0; p < r.size(); ++p) r.set_final(p, mul(a.final_weight(p), k));
  return r;
}

namespace {

Automaton build_standard(const Expr& e, const std::string& alphabet) {
  SemiringTag tag = e.tag();
  switch (e.kind()) {
    case Kind::Zero: return standard_zero(tag, alphabet);
    case Kind::One: return standard_one(tag, alphabet);
    case Kind::Atom: return standard_atom(tag, e.letter(), alphabet);
    case Kind::Sum: return standard_sum(build_standard(e.left(), alphabet), build_standard(e.right(), alphabet));
    case Kind::Prod:
      return standard_product(build_standard(e.left(), alphabet), build_standard(e.right(), alphabet));
    case Kind::Star:
      try {
        return standard_star(build_standard(e.child(), alphabet));
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::InvalidExpression) throw;
        throw Error(ErrorKind::InvalidExpression,
                    "constant term of " + to_string(e.child()) + " has no star");
      }
    case Kind::LWeight: return standard_lweight(e.weight(), build_standard(e.child(), alphabet));
    case Kind::RWeight: return standard_rweight(build_standard(e.child(), alphabet), e.weight());
  }
  return standard_zero(tag, alphabet);
}

}  // namespace

Automaton standard_automaton(const Expr& e, std::string_view alphabet) {
  return build_standard(e, merged(letters(e), alphabet));
}

namespace {

struct Ends {
  std::size_t initial;
  std::size_t final;
};

Ends build_thompson(const Expr& e, Automaton& a) {
  Weight one_w = Weight::one(SemiringTag::B);
  auto fresh = [&]() { return a.add_state(); };
  switch (e.kind()) {
    case Kind::Zero: {
      std::size_t i = fresh(), t = fresh();
      return {i, t};
    }
    case Kind::One: {
      std::size_t i = fresh(), t = fresh();
      a.add_edge(i, kEpsilon, one_w, t);
      return {i, t};
    }
    case Kind::Atom: {
      std::size_t i = fresh(), t = fresh();
      a.add_edge(i, e.letter(), one_w, t);
      return {i, t};
    }
    case Kind::Prod: {
      Ends f = build_thompson(e.left(), a);
      Ends g = build_thompson(e.right(), a);
      a.add_edge(f.final, kEpsilon, one_w, g.initial);
      return {f.initial, g.final};
    }
    case Kind::Sum: {
      Ends f = build_thompson(e.left(), a);
      Ends g = build_thompson(e.right(), a);
      std::size_t i = fresh(), t = fresh();
      a.add_edge(i, kEpsilon, one_w, f.initial);
      a.add_edge(i, kEpsilon, one_w, g.initial);
      a.add_edge(f.final, kEpsilon, one_w, t);
      a.add_edge(g.final, kEpsilon, one_w, t);
      return {i, t};
    }
    case Kind::Star: {
      Ends f = build_thompson(e.child(), a);
      std::size_t i = fresh(), t = fresh();
      a.add_edge(i, kEpsilon, one_w, f.initial);
      a.add_edge(f.final, kEpsilon, one_w, t);
      a.add_edge(i, kEpsilon, one_w, t);
      a.add_edge(f.final, kEpsilon, one_w, f.initial);
      return {i, t};
    }
    default: throw Error(ErrorKind::NonBoolean, "weights in a Boolean construction");
  }
}

}  // namespace

Automaton thompson(const Expr& e, std::string_view alphabet) {
  if (e.tag() != SemiringTag::B) throw Error(ErrorKind::NonBoolean, "thompson is defined over B only");
  Automaton a(SemiringTag::B, merged(letters(e), alphabet), 0, true);
  Ends ends = build_thompson(e, a);
  a.set_initial(ends.initial, Weight::one(SemiringTag::B));
  a.set_final(ends.final, Weight::one(SemiringTag::B));
  return a;
}

}  // namespace ratkit
