#include "ratkit/delta.hpp"

namespace ratkit {

namespace {

bool nullable(const Expr& e) { return constant_term(e).is_one(); }

Expr circle(const Expr& e);

// Removes the empty word from the language of every starred subexpression
// while keeping the standard automaton of F* unchanged when applied under a
// star.
Expr bullet(const Expr& e) {
  switch (e.kind()) {
    case Kind::Zero:
    case Kind::One: return zero(SemiringTag::B);
    case Kind::Atom: return e;
    case Kind::Sum: return sum(bullet(e.left()), bullet(e.right()));
    case Kind::Prod:
      if (nullable(e.left()) && nullable(e.right())) return sum(bullet(e.left()), bullet(e.right()));
      return prod(circle(e.left()), circle(e.right()));
    case Kind::Star: return bullet(e.child());
    default: throw Error(ErrorKind::NonBoolean, "weights in a Boolean expression");
  }
}

Expr circle(const Expr& e) {
  switch (e.kind()) {
    case Kind::Zero:
    case Kind::One:
    case Kind::Atom: return e;
    case Kind::Sum: return sum(circle(e.left()), circle(e.right()));
    case Kind::Prod: return prod(circle(e.left()), circle(e.right()));
    case Kind::Star: return star(bullet(e.child()));
    default: throw Error(ErrorKind::NonBoolean, "weights in a Boolean expression");
  }
}

void require_boolean(const Expr& e) {
  if (e.tag() != SemiringTag::B)
    throw Error(ErrorKind::NonBoolean, "star-normal form is defined over B only");
}

bool star_normal(const Expr& e) {
  switch (e.kind()) {
    case Kind::Zero:
    case Kind::One:
    case Kind::Atom: return true;
    case Kind::Sum:
    case Kind::Prod: return star_normal(e.left()) && star_normal(e.right());
    case Kind::Star: return constant_term(e.child()).is_zero() && star_normal(e.child());
    default: throw Error(ErrorKind::NonBoolean, "weights in a Boolean expression");
  }
}

}  // namespace

Expr star_normal_form(const Expr& e) {
  require_boolean(e);
  return circle(e);
}

bool is_star_normal(const Expr& e) {
  require_boolean(e);
  return star_normal(e);
}

}  // namespace ratkit
