#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "ratkit/automaton.hpp"

namespace ratkit {

namespace {

bool boolean_morphism(const Automaton& a, const Automaton& b, const StateMap& phi, bool quotient) {
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (!a.initial(p).is_zero() && b.initial(phi[p]).is_zero()) return false;  // (i)
    if (!a.final_weight(p).is_zero() && b.final_weight(phi[p]).is_zero()) return false;  // (ii)
  }
  for (const auto& [k, w] : a.edges())
    if (b.edge(phi[k.src], k.label, phi[k.dst]).is_zero()) return false;  // (iii)
  if (!quotient) return true;

  std::vector<bool> hit(b.size(), false), hit_initial(b.size(), false);
  for (std::size_t p = 0; p < a.size(); ++p) {
    hit[phi[p]] = true;
    if (!a.initial(p).is_zero()) hit_initial[phi[p]] = true;
    // (vi): p is final exactly when phi(p) is
    if (a.final_weight(p).is_zero() != b.final_weight(phi[p]).is_zero()) return false;
  }
  for (std::size_t r = 0; r < b.size(); ++r) {
    if (!hit[r]) return false;                                           // (iv)
    if (hit_initial[r] == b.initial(r).is_zero()) return false;          // (v)
  }
  for (const auto& [k, w] : b.edges()) {  // (vii)
    for (std::size_t p = 0; p < a.size(); ++p) {
      if (phi[p] != k.src) continue;
      bool lifted = false;
      for (auto it = a.edges().lower_bound(EdgeKey{p, 0, 0});
           it != a.edges().end() && it->first.src == p && !lifted; ++it)
        lifted = it->first.label == k.label && phi[it->first.dst] == k.dst;
      if (!lifted) return false;
    }
  }
  return true;
}

bool weighted_morphism(const Automaton& a, const Automaton& b, const StateMap& phi, bool quotient) {
  SemiringTag tag = a.tag();
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (a.final_weight(p) != b.final_weight(phi[p])) return false;
    std::map<std::pair<char, std::size_t>, Weight> out;
    for (auto it = a.edges().lower_bound(EdgeKey{p, 0, 0});
         it != a.edges().end() && it->first.src == p; ++it) {
      auto key = std::make_pair(it->first.label, phi[it->first.dst]);
      auto [pos, fresh] = out.emplace(key, it->second);
      if (!fresh) pos->second = add(pos->second, it->second);
    }
    for (const auto& [key, w] : out)
      if (w != b.edge(phi[p], key.first, key.second)) return false;
    for (auto it = b.edges().lower_bound(EdgeKey{phi[p], 0, 0});
         it != b.edges().end() && it->first.src == phi[p]; ++it) {
      auto found = out.find(std::make_pair(it->first.label, it->first.dst));
      if (found == out.end()) return false;
    }
  }
  if (!quotient) return true;
  std::vector<Weight> initial(b.size(), Weight::zero(tag));
  std::vector<bool> hit(b.size(), false);
  for (std::size_t p = 0; p < a.size(); ++p) {
    hit[phi[p]] = true;
    initial[phi[p]] = add(initial[phi[p]], a.initial(p));
  }
  for (std::size_t r = 0; r < b.size(); ++r)
    if (!hit[r] || initial[r] != b.initial(r)) return false;
  return true;
}

}  // namespace

bool check_morphism(const Automaton& a, const Automaton& b, const StateMap& phi, bool as_quotient) {
  if (a.tag() != b.tag())
    throw Error(ErrorKind::TagMismatch, std::string(tag_name(a.tag())) + " vs " +
                                            std::string(tag_name(b.tag())));
  if (phi.size() != a.size()) return false;
  for (std::size_t q : phi)
    if (q >= b.size()) return false;
  if (a.tag() == SemiringTag::B) return boolean_morphism(a, b, phi, as_quotient);
  return weighted_morphism(a, b, phi, as_quotient);
}

Quotient minimal_quotient(const Automaton& a) {
  std::size_t n = a.size();
  if (a.eps_allowed() && a.has_epsilon_edges())
    throw Error(ErrorKind::EpsilonPresent, "apply backward_closure first");
  std::vector<std::size_t> cls(n, 0);
  std::size_t count = 0;

  // Classes are numbered by their smallest state, which keeps output stable.
  auto renumber = [&](const auto& signature_of) {
    using Sig = decltype(signature_of(std::size_t{0}));
    std::map<Sig, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t p = 0; p < n; ++p) {
      auto [it, fresh] = ids.emplace(signature_of(p), ids.size());
      next[p] = it->second;
    }
    cls = std::move(next);
    std::size_t before = count;
    count = ids.size();
    return count != before;
  };

  renumber([&](std::size_t p) { return a.final_weight(p).to_string(); });
  for (;;) {
    bool changed = renumber([&](std::size_t p) {
      std::map<std::pair<char, std::size_t>, Weight> out;
      for (auto it = a.edges().lower_bound(EdgeKey{p, 0, 0});
           it != a.edges().end() && it->first.src == p; ++it) {
        auto key = std::make_pair(it->first.label, cls[it->first.dst]);
        auto [pos, fresh] = out.emplace(key, it->second);
        if (!fresh) pos->second = add(pos->second, it->second);
      }
      std::vector<std::tuple<char, std::size_t, std::string>> sig;
      for (const auto& [key, w] : out)
        if (!w.is_zero()) sig.emplace_back(key.first, key.second, w.to_string());
      return std::make_pair(cls[p], sig);
    });
    if (!changed) break;
  }

  Automaton q(a.tag(), a.alphabet(), count, false);
  std::vector<std::size_t> rep(count, n);
  std::vector<std::string> names(count);
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t c = cls[p];
    q.set_initial(c, add(q.initial(c), a.initial(p)));
    if (rep[c] == n) {
      rep[c] = p;
      names[c] = a.state_name(p);
    }
  }
  for (std::size_t c = 0; c < count; ++c) {
    q.set_final(c, a.final_weight(rep[c]));
    for (auto it = a.edges().lower_bound(EdgeKey{rep[c], 0, 0});
         it != a.edges().end() && it->first.src == rep[c]; ++it)
      q.add_edge(c, it->first.label, it->second, cls[it->first.dst]);
  }
  if (a.has_custom_names()) q.set_state_names(names);
  return Quotient{std::move(q), cls};
}

namespace {

// Colour refinement over the disjoint union of both automata.
std::vector<std::size_t> colours(const Automaton& a, const Automaton& b) {
  std::size_t na = a.size(), n = a.size() + b.size();
  auto aut = [&](std::size_t v) -> const Automaton& { return v < na ? a : b; };
  auto local = [&](std::size_t v) { return v < na ? v : v - na; };
  auto global = [&](std::size_t v, std::size_t q) { return v < na ? q : q + na; };
  std::vector<std::size_t> col(n, 0);
  std::size_t count = 0;
  for (;;) {
    using Sig = std::tuple<std::size_t, std::string, std::string,
                           std::vector<std::tuple<int, char, std::string, std::size_t>>>;
    std::map<Sig, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      const Automaton& x = aut(v);
      std::size_t p = local(v);
      std::vector<std::tuple<int, char, std::string, std::size_t>> adj;
      for (const auto& [k, w] : x.edges()) {
        if (k.src == p) adj.emplace_back(0, k.label, w.to_string(), col[global(v, k.dst)]);
        if (k.dst == p) adj.emplace_back(1, k.label, w.to_string(), col[global(v, k.src)]);
      }
      std::sort(adj.begin(), adj.end());
      Sig sig{col[v], x.initial(p).to_string(), x.final_weight(p).to_string(), std::move(adj)};
      next[v] = ids.emplace(std::move(sig), ids.size()).first->second;
    }
    col = std::move(next);
    if (ids.size() == count) return col;
    count = ids.size();
  }
}

}  // namespace

std::optional<StateMap> find_isomorphism(const Automaton& a, const Automaton& b) {
  if (a.tag() != b.tag() || a.size() != b.size()) return std::nullopt;
  if (a.edges().size() != b.edges().size()) return std::nullopt;
  std::size_t n = a.size();
  auto col = colours(a, b);
  {
    std::vector<std::size_t> ca(col.begin(), col.begin() + n), cb(col.begin() + n, col.end());
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }
  StateMap phi(n, n);
  std::vector<bool> used(n, false);

  auto consistent = [&](std::size_t p) {
    for (std::size_t q = 0; q <= p; ++q) {
      if (phi[q] == n) continue;
      for (char c : a.alphabet() + std::string(1, kEpsilon)) {
        if (a.edge(p, c, q) != b.edge(phi[p], c, phi[q])) return false;
        if (a.edge(q, c, p) != b.edge(phi[q], c, phi[p])) return false;
      }
    }
    return a.initial(p) == b.initial(phi[p]) && a.final_weight(p) == b.final_weight(phi[p]);
  };

  std::vector<std::size_t> order(n);
  for (std::size_t p = 0; p < n; ++p) order[p] = p;
  std::size_t depth = 0;
  std::vector<std::size_t> cursor(n, 0);
  // Iterative backtracking over the states of a in index order.
  while (true) {
    if (depth == n) return phi;
    std::size_t p = order[depth];
    bool placed = false;
    for (std::size_t& r = cursor[depth]; r < n; ++r) {
      if (used[r] || col[n + r] != col[p]) continue;
      phi[p] = r;
      if (consistent(p)) {
        used[r] = true;
        ++r;
        placed = true;
        break;
      }
      phi[p] = n;
    }
    if (placed) {
      ++depth;
      if (depth < n) cursor[depth] = 0;
      continue;
    }
    if (depth == 0) return std::nullopt;
    --depth;
    std::size_t prev = order[depth];
    used[phi[prev]] = false;
    phi[prev] = n;
  }
}

Order identity_order(std::size_t n) {
  Order o(n);
  for (std::size_t i = 0; i < n; ++i) o[i] = i;
  return o;
}

bool is_order(const Order& order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t p : order) {
    if (p >= n || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

}  // namespace ratkit
