#include "ratkit/expr.hpp"

namespace ratkit {

Weight TruncatedSeries::coeff(const std::string& word) const {
  auto it = coeffs_.find(word);
  return it == coeffs_.end() ? Weight::zero(tag_) : it->second;
}

void TruncatedSeries::accumulate(const std::string& word, const Weight& k) {
  if (word.size() > degree_ || k.is_zero()) return;
  auto it = coeffs_.find(word);
  if (it == coeffs_.end()) {
    coeffs_.emplace(word, k);
    return;
  }
  it->second = add(it->second, k);
  if (it->second.is_zero()) coeffs_.erase(it);
}

std::string TruncatedSeries::to_string() const {
  std::string out;
  for (const auto& [word, k] : coeffs_) {
    out += word.empty() ? "\\e" : word;
    out += ' ';
    out += k.to_string();
    out += '\n';
  }
  return out;
}

namespace {

using Series = TruncatedSeries;

Series plus(const Series& x, const Series& y) {
  Series r = x;
  for (const auto& [w, k] : y.coeffs()) r.accumulate(w, k);
  return r;
}

Series times(const Series& x, const Series& y) {
  Series r(x.tag(), x.degree());
  for (const auto& [u, h] : x.coeffs())
    for (const auto& [v, k] : y.coeffs())
      if (u.size() + v.size() <= x.degree()) r.accumulate(u + v, mul(h, k));
  return r;
}

Series scale_left(const Weight& k, const Series& x) {
  Series r(x.tag(), x.degree());
  for (const auto& [w, h] : x.coeffs()) r.accumulate(w, mul(k, h));
  return r;
}

Series scale_right(const Series& x, const Weight& k) {
  Series r(x.tag(), x.degree());
  for (const auto& [w, h] : x.coeffs()) r.accumulate(w, mul(h, k));
  return r;
}

// s* = (c* s_p)* c*, where c is the constant term and s_p the proper part.
Series star_of(const Series& s, const Expr& where) {
  Weight c = s.coeff("");
  if (!c.starable())
    throw Error(ErrorKind::InvalidExpression,
                "constant term " + c.to_string() + " of " + to_string(where) + " has no star");
  Weight cs = star(c);
  Series proper(s.tag(), s.degree());
  for (const auto& [w, k] : s.coeffs())
    if (!w.empty()) proper.accumulate(w, k);
  Series x = scale_left(cs, proper);
  Series total(s.tag(), s.degree());
  total.accumulate("", Weight::one(s.tag()));
  Series power = total;
  for (std::size_t i = 0; i < s.degree(); ++i) {
    power = times(power, x);
    if (power.coeffs().empty()) break;
    total = plus(total, power);
  }
  return scale_right(total, cs);
}

Series series_of(const Expr& e, std::size_t n) {
  Series r(e.tag(), n);
  switch (e.kind()) {
    case Kind::Zero: return r;
    case Kind::One: r.accumulate("", Weight::one(e.tag())); return r;
    case Kind::Atom: r.accumulate(std::string(1, e.letter()), Weight::one(e.tag())); return r;
    case Kind::Sum: return plus(series_of(e.left(), n), series_of(e.right(), n));
    case Kind::Prod: return times(series_of(e.left(), n), series_of(e.right(), n));
    case Kind::Star: return star_of(series_of(e.child(), n), e);
    case Kind::LWeight: return scale_left(e.weight(), series_of(e.child(), n));
    case Kind::RWeight: return scale_right(series_of(e.child(), n), e.weight());
  }
  return r;
}

}  // namespace

TruncatedSeries truncated_series(const Expr& e, std::size_t n) { return series_of(e, n); }

}  // namespace ratkit
