#include "generators.hpp"

#include <algorithm>
#include <numeric>

namespace ratkit::testing {

namespace {

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

Weight signed_rational(Rng& rng, SemiringTag tag, bool contracting) {
  long long den = uniform(rng, contracting ? 2 : 1, 4);
  long long num = 0;
  while (num == 0) num = contracting ? uniform(rng, -(den - 1), den - 1) : uniform(rng, -5, 5);
  if (tag == SemiringTag::Z) return Weight::from_int(tag, num);
  return Weight::from_rational(tag, Rational(num, den));
}

struct Constructors {
  Expr (*sum)(const Expr&, const Expr&);
  Expr (*prod)(const Expr&, const Expr&);
  Expr (*star)(const Expr&);
  Expr (*lweight)(const Weight&, const Expr&);
  Expr (*rweight)(const Expr&, const Weight&);
};

const Constructors kReducing{&ratkit::sum, &ratkit::prod, &ratkit::star, &ratkit::lweight,
                             &ratkit::rweight};
const Constructors kRaw{&raw::sum, &raw::prod, &raw::star, &raw::lweight, &raw::rweight};

Expr leaf(Rng& rng, SemiringTag tag, const ExprShape& shape) {
  if (shape.constants && coin(rng, 0.15)) return coin(rng, 0.6) ? one(tag) : zero(tag);
  std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(shape.letters.size()) - 1));
  return atom(tag, shape.letters[i]);
}

Expr build(Rng& rng, SemiringTag tag, const ExprShape& shape, std::size_t size,
           const Constructors& c) {
  Expr e;
  if (size <= 1) {
    e = leaf(rng, tag, shape);
  } else {
    std::size_t left = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(size) - 1));
    Expr x = build(rng, tag, shape, left, c);
    Expr y = build(rng, tag, shape, size - left, c);
    e = coin(rng, 0.5) ? c.sum(x, y) : c.prod(x, y);
  }
  if (coin(rng, shape.star_rate)) e = c.star(e);
  if (shape.weights && tag != SemiringTag::B && coin(rng, 0.25)) {
    Weight k = random_weight(rng, tag, tag == SemiringTag::Q && coin(rng, 0.5));
    e = coin(rng, 0.5) ? c.lweight(k, e) : c.rweight(e, k);
  }
  return e;
}

}  // namespace

Weight random_weight(Rng& rng, SemiringTag tag, bool contracting) {
  switch (tag) {
    case SemiringTag::B: return Weight::one(tag);
    case SemiringTag::N: return Weight::from_int(tag, uniform(rng, 1, 3));
    case SemiringTag::Z:
    case SemiringTag::Q: return signed_rational(rng, tag, contracting);
    case SemiringTag::MinPlus: return Weight::from_int(tag, uniform(rng, 0, 4));
  }
  return Weight::one(tag);
}

Expr random_expr(Rng& rng, SemiringTag tag, const ExprShape& shape) {
  return build(rng, tag, shape, shape.size, kReducing);
}

Expr random_valid_expr(Rng& rng, SemiringTag tag, const ExprShape& shape) {
  for (;;) {
    Expr e = random_expr(rng, tag, shape);
    if (is_valid(e)) return e;
  }
}

Expr random_raw_expr(Rng& rng, SemiringTag tag, const ExprShape& shape) {
  return build(rng, tag, shape, shape.size, kRaw);
}

Automaton random_automaton(Rng& rng, SemiringTag tag, const AutomatonShape& shape) {
  Automaton a(tag, shape.letters, shape.states);
  auto w = [&]() { return random_weight(rng, tag, shape.contracting); };
  for (std::size_t p = 0; p < shape.states; ++p) {
    if (coin(rng, shape.initial_rate)) a.set_initial(p, w());
    if (coin(rng, shape.final_rate)) a.set_final(p, w());
    for (char c : shape.letters)
      for (std::size_t q = 0; q < shape.states; ++q)
        if (coin(rng, shape.edge_rate)) a.set_edge(p, c, w(), q);
  }
  return a;
}

Order random_order(Rng& rng, std::size_t n) {
  Order o(n);
  std::iota(o.begin(), o.end(), std::size_t{0});
  std::shuffle(o.begin(), o.end(), rng);
  return o;
}

std::vector<Order> all_orders(std::size_t n) {
  std::vector<Order> out;
  Order o(n);
  std::iota(o.begin(), o.end(), std::size_t{0});
  do out.push_back(o);
  while (std::next_permutation(o.begin(), o.end()));
  return out;
}

std::vector<std::string> words_up_to(const std::string& letters, std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == n) continue;
    for (char c : letters) out.push_back(out[i] + c);
  }
  return out;
}

}  // namespace ratkit::testing
