#include <algorithm>
#include <stdexcept>

#include "ratkit/delta.hpp"

namespace ratkit {

Weight LinComb::coeff(const Expr& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? Weight::zero(tag_) : terms_[it->second].second;
}

void LinComb::add(const Expr& e, const Weight& k) {
  if (e.tag() != tag_ || k.tag() != tag_)
    throw Error(ErrorKind::TagMismatch, "linear combination over " + std::string(tag_name(tag_)));
  if (k.is_zero() || e.is_zero()) return;
  auto it = index_.find(e);
  if (it == index_.end()) {
    index_.emplace(e, terms_.size());
    terms_.emplace_back(e, k);
    return;
  }
  Weight& w = terms_[it->second].second;
  w = ratkit::add(w, k);
  if (!w.is_zero()) return;
  terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(it->second));
  index_.clear();
  for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i].first, i);
}

void LinComb::add(const LinComb& other) {
  for (const auto& [e, k] : other.terms_) add(e, k);
}

std::string LinComb::to_string() const {
  if (terms_.empty()) return "\\z";
  std::string out;
  for (const auto& [e, k] : terms_) {
    if (!out.empty()) out += " + ";
    if (!k.is_one()) out += "<" + k.to_string() + ">";
    std::string s = ratkit::to_string(e);
    bool wrap = !k.is_one() && (e.kind() == Kind::Sum || e.kind() == Kind::Prod ||
                                e.kind() == Kind::LWeight);
    out += wrap ? "[" + s + "]" : s;
  }
  return out;
}

bool operator==(const LinComb& x, const LinComb& y) {
  if (x.tag_ != y.tag_ || x.terms_.size() != y.terms_.size()) return false;
  for (const auto& [e, k] : x.terms_)
    if (y.coeff(e) != k) return false;
  return true;
}

namespace {

LinComb times_expr(const LinComb& x, const Expr& f) {
  LinComb r(x.tag());
  for (const auto& [e, k] : x.terms()) r.add(prod(e, f), k);
  return r;
}

LinComb times_weight_right(const LinComb& x, const Weight& k) {
  LinComb r(x.tag());
  for (const auto& [e, h] : x.terms()) r.add(rweight(e, k), h);
  return r;
}

LinComb scale(const Weight& k, const LinComb& x) {
  LinComb r(x.tag());
  for (const auto& [e, h] : x.terms()) r.add(e, mul(k, h));
  return r;
}

}  // namespace

LinComb derive(const Expr& e, char letter) {
  SemiringTag tag = e.tag();
  LinComb r(tag);
  switch (e.kind()) {
    case Kind::Zero:
    case Kind::One: return r;
    case Kind::Atom:
      if (e.letter() == letter) r.add(one(tag), Weight::one(tag));
      return r;
    case Kind::Sum:
      r = derive(e.left(), letter);
      r.add(derive(e.right(), letter));
      return r;
    case Kind::Prod: {
      r = times_expr(derive(e.left(), letter), e.right());
      Weight c = constant_term(e.left());
      if (!c.is_zero()) r.add(scale(c, derive(e.right(), letter)));
      return r;
    }
    case Kind::Star: {
      Weight c = constant_term(e.child());
      if (!c.starable())
        throw Error(ErrorKind::InvalidExpression,
                    "constant term " + c.to_string() + " of " + to_string(e.child()) + " has no star");
      return scale(star(c), times_expr(derive(e.child(), letter), e));
    }
    case Kind::LWeight: return scale(e.weight(), derive(e.child(), letter));
    case Kind::RWeight: return times_weight_right(derive(e.child(), letter), e.weight());
  }
  return r;
}

LinComb derive(const LinComb& x, char letter) {
  LinComb r(x.tag());
  for (const auto& [e, k] : x.terms()) r.add(scale(k, derive(e, letter)));
  return r;
}

LinComb derive_word(const Expr& e, std::string_view word) {
  if (word.empty()) throw Error(ErrorKind::EmptyWord, "derivation needs a nonempty word");
  LinComb r = derive(e, word[0]);
  for (std::size_t i = 1; i < word.size(); ++i) r = derive(r, word[i]);
  return r;
}

namespace {

void push_unique(std::vector<Expr>& out, const Expr& e) {
  if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
}

}  // namespace

std::vector<Expr> true_derived_terms(const Expr& e) {
  std::vector<Expr> out;
  switch (e.kind()) {
    case Kind::Zero:
    case Kind::One: break;
    case Kind::Atom: out.push_back(one(e.tag())); break;
    case Kind::Sum:
      out = true_derived_terms(e.left());
      for (const Expr& k : true_derived_terms(e.right())) push_unique(out, k);
      break;
    case Kind::Prod:
      for (const Expr& k : true_derived_terms(e.left())) push_unique(out, prod(k, e.right()));
      for (const Expr& k : true_derived_terms(e.right())) push_unique(out, k);
      break;
    case Kind::Star:
      for (const Expr& k : true_derived_terms(e.child())) push_unique(out, prod(k, e));
      break;
    case Kind::LWeight: out = true_derived_terms(e.child()); break;
    case Kind::RWeight:
      for (const Expr& k : true_derived_terms(e.child())) push_unique(out, rweight(k, e.weight()));
      break;
  }
  return out;
}

std::vector<Expr> derived_terms(const Expr& e) {
  std::vector<Expr> out{e};
  for (const Expr& k : true_derived_terms(e)) push_unique(out, k);
  return out;
}

DerivedTermAutomaton derived_term_automaton(const Expr& e, std::string_view alphabet) {
  SemiringTag tag = e.tag();
  constant_term(e);  // validity
  std::vector<Expr> terms = derived_terms(e);
  std::unordered_map<Expr, std::size_t> index;
  for (std::size_t i = 0; i < terms.size(); ++i) index.emplace(terms[i], i);
  Automaton a(tag, letters(e), 0, false);
  a.extend_alphabet(alphabet);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    a.add_state(i == 0 ? Weight::one(tag) : Weight::zero(tag), constant_term(terms[i]));
  }
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (char c : a.alphabet()) {
      LinComb d = derive(terms[i], c);
      for (const auto& [k, w] : d.terms()) {
        auto it = index.find(k);
        if (it == index.end())
          throw std::logic_error("derivative " + to_string(k) + " is not a derived term of " +
                                 to_string(e));
        a.add_edge(i, c, w, it->second);
      }
    }
  return DerivedTermAutomaton{std::move(a), std::move(terms)};
}

namespace {

std::vector<Expr> continuations(const Expr& e) {
  std::vector<Expr> out;
  switch (e.kind()) {
    case Kind::Zero:
    case Kind::One: break;
    case Kind::Atom: out.push_back(one(e.tag())); break;
    case Kind::Sum: {
      out = continuations(e.left());
      auto r = continuations(e.right());
      out.insert(out.end(), r.begin(), r.end());
      break;
    }
    case Kind::Prod: {
      for (const Expr& k : continuations(e.left())) out.push_back(prod(k, e.right()));
      auto r = continuations(e.right());
      out.insert(out.end(), r.begin(), r.end());
      break;
    }
    case Kind::Star:
      for (const Expr& k : continuations(e.child())) out.push_back(prod(k, e));
      break;
    case Kind::LWeight: out = continuations(e.child()); break;
    case Kind::RWeight:
      for (const Expr& k : continuations(e.child())) out.push_back(rweight(k, e.weight()));
      break;
  }
  return out;
}

}  // namespace

PositionMap continuation_map(const Expr& e) {
  constant_term(e);  // validity
  PositionMap m{e};
  auto rest = continuations(e);
  m.insert(m.end(), rest.begin(), rest.end());
  return m;
}

StateMap continuation_state_map(const PositionMap& positions, const std::vector<Expr>& terms) {
  StateMap phi;
  for (const Expr& k : positions) {
    auto it = std::find(terms.begin(), terms.end(), k);
    if (it == terms.end())
      throw std::logic_error("continuation " + to_string(k) + " is not a derived term");
    phi.push_back(static_cast<std::size_t>(it - terms.begin()));
  }
  return phi;
}

}  // namespace ratkit
