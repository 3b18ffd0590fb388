#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratkit/expr.hpp"
#include "ratkit/semiring.hpp"

namespace ratkit {

// Label of a spontaneous transition.
inline constexpr char kEpsilon = '@';

struct EdgeKey {
  std::size_t src;
  char label;
  std::size_t dst;
  auto operator<=>(const EdgeKey&) const = default;
};

// Finite weighted automaton <Q, A, E, I, T> with states 0..n-1. Parallel
// edges with the same label are merged by adding their weights, and edges of
// weight zero are never stored.
class Automaton {
 public:
  Automaton(SemiringTag tag = SemiringTag::B, std::string alphabet = "", std::size_t states = 0,
            bool eps_allowed = false);

  SemiringTag tag() const { return tag_; }
  const std::string& alphabet() const { return alphabet_; }
  std::size_t size() const { return initial_.size(); }
  bool eps_allowed() const { return eps_allowed_; }

  const Weight& initial(std::size_t p) const { return initial_.at(p); }
  const Weight& final_weight(std::size_t p) const { return final_.at(p); }
  const std::vector<Weight>& initials() const { return initial_; }
  const std::vector<Weight>& finals() const { return final_; }
  const std::map<EdgeKey, Weight>& edges() const { return edges_; }
  Weight edge(std::size_t p, char label, std::size_t q) const;
  bool has_epsilon_edges() const;

  std::size_t add_state(std::optional<Weight> initial = std::nullopt,
                        std::optional<Weight> final = std::nullopt);
  void set_initial(std::size_t p, const Weight& w);
  void set_final(std::size_t p, const Weight& w);
  void add_edge(std::size_t p, char label, const Weight& w, std::size_t q);
  void set_edge(std::size_t p, char label, const Weight& w, std::size_t q);
  // Replaces the alphabet by its union with `letters`.
  void extend_alphabet(std::string_view letters);

  std::string state_name(std::size_t p) const;
  const std::vector<std::string>& state_names() const { return names_; }
  void set_state_names(std::vector<std::string> names);
  bool has_custom_names() const;
  std::optional<std::size_t> find_state(std::string_view name) const;

  friend bool operator==(const Automaton& x, const Automaton& y) {
    return x.tag_ == y.tag_ && x.alphabet_ == y.alphabet_ && x.eps_allowed_ == y.eps_allowed_ &&
           x.initial_ == y.initial_ && x.final_ == y.final_ && x.edges_ == y.edges_;
  }

 private:
  void check_state(std::size_t p) const;
  void check_weight(const Weight& w) const;
  void check_label(char label) const;

  SemiringTag tag_;
  std::string alphabet_;
  bool eps_allowed_;
  std::vector<Weight> initial_;
  std::vector<Weight> final_;
  std::map<EdgeKey, Weight> edges_;
  std::vector<std::string> names_;
};

// Text format, one directive per line, '#' starts a comment:
//   semiring Q | alphabet a b | states 3 (or: states p q r) | epsilon true
//   initial 0:1 | final 0:2 1:2 | edge 0 a 1/3 1
// A state weight may be omitted (one); an edge weight '_' means one; the
// letter '@' is a spontaneous transition.
Automaton parse_automaton(std::string_view text);
std::string to_text(const Automaton& a);
std::string to_dot(const Automaton& a);

// I . mu(w1) ... mu(wm) . T
Weight eval(const Automaton& a, std::string_view word);
TruncatedSeries truncated_behaviour(const Automaton& a, std::size_t n);

// Boolean removal of spontaneous transitions: (p,a,r) whenever p reaches q by
// spontaneous transitions and (q,a,r) is an edge; p is final when it reaches a
// final state that way.
Automaton backward_closure(const Automaton& a);
Automaton accessible_part(const Automaton& a);
Automaton trim(const Automaton& a);

using StateMap = std::vector<std::size_t>;

// Boolean automata: conditions phi(I) in I', phi(T) in T', edges map to
// edges; a quotient must also be surjective with phi(I) = I',
// phi^-1(T') = T, and every edge of B lifts from every preimage of its source.
// Other semirings (out-morphism): T_A(p) = T_B(phi(p)) and, for every p,
// letter a and state c of B, the weights from p into phi^-1(c) sum to the
// weight of (phi(p), a, c); a quotient must also be surjective with
// I_B(c) equal to the sum of I_A over phi^-1(c).
bool check_morphism(const Automaton& a, const Automaton& b, const StateMap& phi, bool as_quotient);

struct Quotient {
  Automaton automaton;
  StateMap map;
};
// Coarsest partition of the states that separates final weights and is
// stable under per-letter, per-class sums of outgoing weights.
Quotient minimal_quotient(const Automaton& a);

// A bijection preserving initial and final weights and every edge weight.
std::optional<StateMap> find_isomorphism(const Automaton& a, const Automaton& b);
inline bool isomorphic(const Automaton& a, const Automaton& b) {
  return find_isomorphism(a, b).has_value();
}

// States listed from smallest to greatest.
using Order = std::vector<std::size_t>;
Order identity_order(std::size_t n);
bool is_order(const Order& order, std::size_t n);

int loop_complexity(const Automaton& a, std::size_t bound = 14);

struct IndexedEdge {
  std::size_t src;
  std::size_t dst;
  int index;
};
struct IndexedGraph {
  std::size_t size = 0;
  std::vector<IndexedEdge> edges;
};
int loop_index(const IndexedGraph& g, const Order& order);
// Every edge of a letter-labelled automaton has index 0.
int loop_index(const Automaton& a, const Order& order);

}  // namespace ratkit
