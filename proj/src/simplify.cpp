#include <algorithm>
#include <vector>

#include "ratkit/expr.hpp"

namespace ratkit {

namespace {

void operands(const Expr& e, Kind kind, std::vector<Expr>& out) {
  if (e.kind() == kind) {
    operands(e.left(), kind, out);
    operands(e.right(), kind, out);
  } else {
    out.push_back(e);
  }
}

}  // namespace

Expr natural_simplify(const Expr& e) {
  bool boolean = e.tag() == SemiringTag::B;
  switch (e.kind()) {
    case Kind::Sum:
    case Kind::Prod: {
      std::vector<Expr> parts;
      operands(e, e.kind(), parts);
      std::vector<Expr> kept;
      for (const Expr& p : parts) {
        Expr s = natural_simplify(p);
        std::vector<Expr> inner;
        operands(s, e.kind(), inner);
        for (const Expr& q : inner) {
          if (e.kind() == Kind::Sum && boolean &&
              std::find(kept.begin(), kept.end(), q) != kept.end())
            continue;
          kept.push_back(q);
        }
      }
      Expr r = kept.front();
      for (std::size_t i = 1; i < kept.size(); ++i)
        r = e.kind() == Kind::Sum ? sum(r, kept[i]) : prod(r, kept[i]);
      return r;
    }
    case Kind::Star: {
      Expr c = natural_simplify(e.child());
      if (boolean && c.kind() == Kind::Star) return c;
      return star(c);
    }
    case Kind::LWeight: return lweight(e.weight(), natural_simplify(e.child()));
    case Kind::RWeight: return rweight(natural_simplify(e.child()), e.weight());
    default: return e;
  }
}

}  // namespace ratkit
