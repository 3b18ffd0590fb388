#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "generators.hpp"

namespace ratkit::testing {

namespace {

struct CoeffOracle {
  const std::string& word;
  std::map<std::tuple<const void*, std::size_t, std::size_t>, Weight> memo;

  // Coefficient of word[i, j) in e.
  Weight at(const Expr& e, std::size_t i, std::size_t j) {
    auto key = std::make_tuple(static_cast<const void*>(detail::nodeptr(e)), i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Weight w = compute(e, i, j);
    memo.emplace(key, w);
    return w;
  }

  Weight compute(const Expr& e, std::size_t i, std::size_t j) {
    SemiringTag tag = e.tag();
    std::size_t len = j - i;
    switch (e.kind()) {
      case Kind::Zero: return Weight::zero(tag);
      case Kind::One: return len == 0 ? Weight::one(tag) : Weight::zero(tag);
      case Kind::Atom:
        return len == 1 && word[i] == e.letter() ? Weight::one(tag) : Weight::zero(tag);
      case Kind::Sum: return add(at(e.left(), i, j), at(e.right(), i, j));
      case Kind::Prod: {
        Weight s = Weight::zero(tag);
        for (std::size_t m = i; m <= j; ++m) s = add(s, mul(at(e.left(), i, m), at(e.right(), m, j)));
        return s;
      }
      case Kind::LWeight: return mul(e.weight(), at(e.child(), i, j));
      case Kind::RWeight: return mul(at(e.child(), i, j), e.weight());
      case Kind::Star: {
        // F* = c* (1 + F' F*) with F' the proper part of F.
        Weight c = at(e.child(), i, i);
        Weight cs = star(c);
        if (len == 0) return cs;
        Weight s = Weight::zero(tag);
        for (std::size_t m = i + 1; m <= j; ++m)
          s = add(s, mul(at(e.child(), i, m), at(e, m, j)));
        return mul(cs, s);
      }
    }
    return Weight::zero(tag);
  }
};

}  // namespace

Weight oracle_coeff(const Expr& e, const std::string& word) {
  CoeffOracle o{word, {}};
  return o.at(e, 0, word.size());
}

Weight oracle_eval(const Automaton& a, const std::string& word) {
  Weight total = Weight::zero(a.tag());
  std::vector<std::vector<std::pair<std::size_t, Weight>>> out(a.size() * 256);
  for (const auto& [k, w] : a.edges())
    out[k.src * 256 + static_cast<unsigned char>(k.label)].emplace_back(k.dst, w);
  std::function<void(std::size_t, std::size_t, Weight)> walk = [&](std::size_t p, std::size_t i,
                                                                  Weight acc) {
    if (i == word.size()) {
      total = add(total, mul(acc, a.final_weight(p)));
      return;
    }
    for (const auto& [q, w] : out[p * 256 + static_cast<unsigned char>(word[i])])
      walk(q, i + 1, mul(acc, w));
  };
  for (std::size_t p = 0; p < a.size(); ++p)
    if (!a.initial(p).is_zero()) walk(p, 0, a.initial(p));
  return total;
}

bool series_agree(const TruncatedSeries& s, const TruncatedSeries& t, const std::string& letters,
                  std::size_t n) {
  for (const std::string& w : words_up_to(letters, n))
    if (s.coeff(w) != t.coeff(w)) return false;
  return true;
}

bool expr_matches_series(const Expr& e, const TruncatedSeries& s, const std::string& letters,
                         std::size_t n) {
  for (const std::string& w : words_up_to(letters, n))
    if (oracle_coeff(e, w) != s.coeff(w)) return false;
  return true;
}

bool automaton_matches_series(const Automaton& a, const TruncatedSeries& s,
                              const std::string& letters, std::size_t n) {
  for (const std::string& w : words_up_to(letters, n))
    if (oracle_eval(a, w) != s.coeff(w)) return false;
  return true;
}

namespace {

// A redex is found by a predicate on one node; `rewrite` performs the step.
std::optional<Expr> step_at(const Expr& e) {
  SemiringTag tag = e.tag();
  auto weighted_one = [](const Expr& x) { return x.kind() == Kind::LWeight && x.child().is_one(); };
  switch (e.kind()) {
    case Kind::Sum:
      if (e.left().is_zero()) return e.right();
      if (e.right().is_zero()) return e.left();
      return std::nullopt;
    case Kind::Prod:
      if (e.left().is_zero() || e.right().is_zero()) return zero(tag);
      if (e.left().is_one()) return e.right();
      if (e.right().is_one()) return e.left();
      if (weighted_one(e.left())) return raw::lweight(e.left().weight(), e.right());
      if (weighted_one(e.right())) return raw::rweight(e.left(), e.right().weight());
      return std::nullopt;
    case Kind::Star:
      if (e.child().is_zero()) return one(tag);
      return std::nullopt;
    case Kind::LWeight:
      if (e.weight().is_zero() || e.child().is_zero()) return zero(tag);
      if (e.weight().is_one()) return e.child();
      if (e.child().kind() == Kind::LWeight)
        return raw::lweight(mul(e.weight(), e.child().weight()), e.child().child());
      return std::nullopt;
    case Kind::RWeight:
      if (e.weight().is_zero() || e.child().is_zero()) return zero(tag);
      if (e.weight().is_one()) return e.child();
      if (e.child().is_one()) return raw::lweight(e.weight(), e.child());
      if (e.child().kind() == Kind::RWeight)
        return raw::rweight(e.child().child(), mul(e.child().weight(), e.weight()));
      if (e.child().kind() == Kind::LWeight)
        return raw::lweight(e.child().weight(), raw::rweight(e.child().child(), e.weight()));
      return std::nullopt;
    default: return std::nullopt;
  }
}

std::size_t count_redexes(const Expr& e) {
  std::size_t n = step_at(e) ? 1 : 0;
  switch (e.kind()) {
    case Kind::Sum:
    case Kind::Prod: return n + count_redexes(e.left()) + count_redexes(e.right());
    case Kind::Star:
    case Kind::LWeight:
    case Kind::RWeight: return n + count_redexes(e.child());
    default: return n;
  }
}

// Rewrites the redex numbered `target` in pre-order.
Expr rewrite_nth(const Expr& e, std::size_t& target) {
  if (auto r = step_at(e)) {
    if (target == 0) {
      target = static_cast<std::size_t>(-1);
      return *r;
    }
    --target;
  }
  switch (e.kind()) {
    case Kind::Sum: {
      Expr l = rewrite_nth(e.left(), target);
      return raw::sum(l, rewrite_nth(e.right(), target));
    }
    case Kind::Prod: {
      Expr l = rewrite_nth(e.left(), target);
      return raw::prod(l, rewrite_nth(e.right(), target));
    }
    case Kind::Star: return raw::star(rewrite_nth(e.child(), target));
    case Kind::LWeight: return raw::lweight(e.weight(), rewrite_nth(e.child(), target));
    case Kind::RWeight: return raw::rweight(rewrite_nth(e.child(), target), e.weight());
    default: return e;
  }
}

}  // namespace

Expr oracle_rewrite(const Expr& e, std::mt19937_64& rng) {
  Expr cur = e;
  for (;;) {
    std::size_t n = count_redexes(cur);
    if (n == 0) return cur;
    std::size_t target = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    cur = rewrite_nth(cur, target);
  }
}

namespace {

using States = std::vector<bool>;

// Strongly connected components of the subgraph induced by `within` that
// contain at least one edge (the balls).
std::vector<States> balls(const std::vector<std::vector<bool>>& adj, const States& within) {
  std::size_t n = adj.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) reach[p][q] = within[p] && within[q] && adj[p][q];
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (reach[p][k] && reach[k][q]) reach[p][q] = true;
  std::vector<States> out;
  States done(n, false);
  for (std::size_t p = 0; p < n; ++p) {
    if (!within[p] || done[p] || !reach[p][p]) continue;
    States ball(n, false);
    for (std::size_t q = 0; q < n; ++q)
      if (q == p || (reach[p][q] && reach[q][p])) {
        ball[q] = true;
        done[q] = true;
      }
    out.push_back(ball);
  }
  return out;
}

int lc_of(const std::vector<std::vector<bool>>& adj, const States& within) {
  int best = 0;
  for (const States& ball : balls(adj, within)) {
    int least = -1;
    for (std::size_t s = 0; s < adj.size(); ++s) {
      if (!ball[s]) continue;
      States rest = ball;
      rest[s] = false;
      int v = lc_of(adj, rest);
      if (least < 0 || v < least) least = v;
    }
    best = std::max(best, 1 + least);
  }
  return best;
}

}  // namespace

int oracle_loop_complexity(const Automaton& a) {
  std::size_t n = a.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [k, w] : a.edges()) adj[k.src][k.dst] = true;
  return lc_of(adj, States(n, true));
}

bool oracle_isomorphic(const Automaton& a, const Automaton& b) {
  if (a.tag() != b.tag() || a.size() != b.size() || a.edges().size() != b.edges().size())
    return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t p = 0; ok && p < a.size(); ++p)
      ok = a.initial(p) == b.initial(perm[p]) && a.final_weight(p) == b.final_weight(perm[p]);
    for (auto it = a.edges().begin(); ok && it != a.edges().end(); ++it)
      ok = b.edge(perm[it->first.src], it->first.label, perm[it->first.dst]) == it->second;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace ratkit::testing
