#include "ratkit/equiv.hpp"

#include <deque>
#include <set>
#include <utility>
#include <vector>

#include "ratkit/delta.hpp"

namespace ratkit {

const char* method_name(EquivMethod m) {
  switch (m) {
    case EquivMethod::BooleanDfa: return "boolean-dfa";
    case EquivMethod::FieldSpan: return "field-span";
    case EquivMethod::Sampled: return "sampled";
  }
  return "?";
}

namespace {

Verdict differ(const Automaton& a, const Automaton& b, const std::string& word, EquivMethod m) {
  return Verdict{false, Witness{word, eval(a, word), eval(b, word)}, m};
}

using Subset = std::vector<bool>;

Subset initial_subset(const Automaton& a) {
  Subset s(a.size(), false);
  for (std::size_t p = 0; p < a.size(); ++p) s[p] = !a.initial(p).is_zero();
  return s;
}

bool accepts(const Automaton& a, const Subset& s) {
  for (std::size_t p = 0; p < a.size(); ++p)
    if (s[p] && !a.final_weight(p).is_zero()) return true;
  return false;
}

// Successor subsets for every letter, indexed by alphabet position.
std::vector<Subset> successors(const Automaton& a, const Subset& s, const std::string& alphabet) {
  std::vector<Subset> out(alphabet.size(), Subset(a.size(), false));
  for (const auto& [k, w] : a.edges()) {
    if (!s[k.src]) continue;
    auto pos = alphabet.find(k.label);
    out[pos][k.dst] = true;
  }
  return out;
}

Verdict boolean_equivalence(const Automaton& a, const Automaton& b) {
  const std::string& alphabet = a.alphabet();
  using Pair = std::pair<Subset, Subset>;
  std::set<Pair> seen;
  std::deque<std::pair<Pair, std::string>> queue;
  Pair start{initial_subset(a), initial_subset(b)};
  seen.insert(start);
  queue.emplace_back(start, "");
  while (!queue.empty()) {
    auto [pair, word] = std::move(queue.front());
    queue.pop_front();
    if (accepts(a, pair.first) != accepts(b, pair.second))
      return differ(a, b, word, EquivMethod::BooleanDfa);
    auto sa = successors(a, pair.first, alphabet);
    auto sb = successors(b, pair.second, alphabet);
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      Pair next{std::move(sa[i]), std::move(sb[i])};
      if (seen.insert(next).second) queue.emplace_back(std::move(next), word + alphabet[i]);
    }
  }
  return Verdict{true, std::nullopt, EquivMethod::BooleanDfa};
}

using Vec = std::vector<Rational>;

Rational as_rational(const Weight& w) { return w.value(); }

// Row vector times the transition matrix of `letter`, on the joint space.
Vec step(const Automaton& a, const Automaton& b, const Vec& v, char letter) {
  Vec out(v.size(), Rational(0));
  std::size_t offset = a.size();
  for (const auto& [k, w] : a.edges())
    if (k.label == letter && v[k.src] != 0) out[k.dst] += v[k.src] * as_rational(w);
  for (const auto& [k, w] : b.edges())
    if (k.label == letter && v[offset + k.src] != 0)
      out[offset + k.dst] += v[offset + k.src] * as_rational(w);
  return out;
}

// Echelon basis kept in insertion order; each row has a distinct pivot.
class SpanBasis {
 public:
  // Returns true when v is independent of the rows so far (and stores it).
  bool insert(Vec v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = v[pivots_[r]];
      if (c == 0) continue;
      Rational factor = c / rows_[r][pivots_[r]];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (rows_[r][j] != 0) v[j] -= factor * rows_[r][j];
    }
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        pivots_.push_back(j);
        rows_.push_back(std::move(v));
        return true;
      }
    return false;
  }

 private:
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

Verdict field_equivalence(const Automaton& a, const Automaton& b) {
  std::size_t n = a.size() + b.size();
  Vec functional(n), start(n);
  for (std::size_t p = 0; p < a.size(); ++p) {
    start[p] = as_rational(a.initial(p));
    functional[p] = as_rational(a.final_weight(p));
  }
  for (std::size_t p = 0; p < b.size(); ++p) {
    start[a.size() + p] = as_rational(b.initial(p));
    functional[a.size() + p] = -as_rational(b.final_weight(p));
  }
  SpanBasis basis;
  std::deque<std::pair<Vec, std::string>> queue;
  queue.emplace_back(start, "");
  while (!queue.empty()) {
    auto [v, word] = std::move(queue.front());
    queue.pop_front();
    if (!basis.insert(v)) continue;
    Rational value = 0;
    for (std::size_t j = 0; j < n; ++j) value += v[j] * functional[j];
    if (value != 0) return differ(a, b, word, EquivMethod::FieldSpan);
    for (char c : a.alphabet()) queue.emplace_back(step(a, b, v, c), word + c);
  }
  return Verdict{true, std::nullopt, EquivMethod::FieldSpan};
}

Verdict sampled_equivalence(const Automaton& a, const Automaton& b, std::size_t length) {
  TruncatedSeries x = truncated_behaviour(a, length);
  TruncatedSeries y = truncated_behaviour(b, length);
  // Shortest differing word first, then lexicographic.
  std::set<std::string> words;
  for (const auto& [w, k] : x.coeffs()) words.insert(w);
  for (const auto& [w, k] : y.coeffs()) words.insert(w);
  const std::string* best = nullptr;
  for (const std::string& w : words)
    if (x.coeff(w) != y.coeff(w) && (!best || w.size() < best->size())) best = &w;
  if (best) return differ(a, b, *best, EquivMethod::Sampled);
  return Verdict{true, std::nullopt, EquivMethod::Sampled};
}

}  // namespace

Verdict equivalent_automata(const Automaton& a, const Automaton& b, std::size_t sample_length) {
  if (a.tag() != b.tag())
    throw Error(ErrorKind::TagMismatch,
                std::string(tag_name(a.tag())) + " vs " + std::string(tag_name(b.tag())));
  if (a.has_epsilon_edges() || b.has_epsilon_edges())
    throw Error(ErrorKind::EpsilonPresent, "apply backward_closure first");
  Automaton x = a, y = b;
  x.extend_alphabet(b.alphabet());
  y.extend_alphabet(a.alphabet());
  switch (a.tag()) {
    case SemiringTag::B: return boolean_equivalence(x, y);
    case SemiringTag::MinPlus: return sampled_equivalence(x, y, sample_length);
    default: return field_equivalence(x, y);
  }
}

Verdict equivalent_exprs(const Expr& e, const Expr& f, std::size_t sample_length) {
  if (e.tag() != f.tag())
    throw Error(ErrorKind::TagMismatch,
                std::string(tag_name(e.tag())) + " vs " + std::string(tag_name(f.tag())));
  std::string alphabet = letters(e) + letters(f);
  return equivalent_automata(derived_term_automaton(e, alphabet).automaton,
                             derived_term_automaton(f, alphabet).automaton, sample_length);
}

}  // namespace ratkit
