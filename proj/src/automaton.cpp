#include "ratkit/automaton.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace ratkit {

Automaton::Automaton(SemiringTag tag, std::string alphabet, std::size_t states, bool eps_allowed)
    : tag_(tag), eps_allowed_(eps_allowed) {
  extend_alphabet(alphabet);
  for (std::size_t i = 0; i < states; ++i) add_state();
}

void Automaton::check_state(std::size_t p) const {
  if (p >= size())
    throw Error(ErrorKind::FormatError, "no state " + std::to_string(p));
}

void Automaton::check_weight(const Weight& w) const {
  if (w.tag() != tag_)
    throw Error(ErrorKind::TagMismatch, std::string(tag_name(w.tag())) + " weight in " +
                                            std::string(tag_name(tag_)) + " automaton");
}

void Automaton::check_label(char label) const {
  if (label == kEpsilon) {
    if (!eps_allowed_)
      throw Error(ErrorKind::EpsilonPresent, "spontaneous transition in an automaton without them");
    return;
  }
  if (alphabet_.find(label) == std::string::npos)
    throw Error(ErrorKind::UnknownLetter, "'" + std::string(1, label) + "'");
}

Weight Automaton::edge(std::size_t p, char label, std::size_t q) const {
  auto it = edges_.find(EdgeKey{p, label, q});
  return it == edges_.end() ? Weight::zero(tag_) : it->second;
}

bool Automaton::has_epsilon_edges() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const auto& e) { return e.first.label == kEpsilon; });
}

std::size_t Automaton::add_state(std::optional<Weight> initial, std::optional<Weight> final) {
  Weight i = initial.value_or(Weight::zero(tag_));
  Weight t = final.value_or(Weight::zero(tag_));
  check_weight(i);
  check_weight(t);
  initial_.push_back(i);
  final_.push_back(t);
  names_.push_back(std::to_string(names_.size()));
  return size() - 1;
}

void Automaton::set_initial(std::size_t p, const Weight& w) {
  check_state(p);
  check_weight(w);
  initial_[p] = w;
}

void Automaton::set_final(std::size_t p, const Weight& w) {
  check_state(p);
  check_weight(w);
  final_[p] = w;
}

void Automaton::add_edge(std::size_t p, char label, const Weight& w, std::size_t q) {
  check_state(p);
  check_state(q);
  check_label(label);
  check_weight(w);
  EdgeKey key{p, label, q};
  auto it = edges_.find(key);
  if (it == edges_.end()) {
    if (!w.is_zero()) edges_.emplace(key, w);
    return;
  }
  it->second = add(it->second, w);
  if (it->second.is_zero()) edges_.erase(it);
}

void Automaton::set_edge(std::size_t p, char label, const Weight& w, std::size_t q) {
  check_state(p);
  check_state(q);
  check_label(label);
  check_weight(w);
  EdgeKey key{p, label, q};
  if (w.is_zero())
    edges_.erase(key);
  else
    edges_[key] = w;
}

void Automaton::extend_alphabet(std::string_view letters) {
  std::set<char> all(alphabet_.begin(), alphabet_.end());
  for (char c : letters) {
    if (c == kEpsilon || c == ' ') continue;
    all.insert(c);
  }
  alphabet_.assign(all.begin(), all.end());
}

std::string Automaton::state_name(std::size_t p) const { return names_.at(p); }

void Automaton::set_state_names(std::vector<std::string> names) {
  if (names.size() != size()) throw Error(ErrorKind::FormatError, "wrong number of state names");
  names_ = std::move(names);
}

bool Automaton::has_custom_names() const {
  for (std::size_t p = 0; p < size(); ++p)
    if (names_[p] != std::to_string(p)) return true;
  return false;
}

std::optional<std::size_t> Automaton::find_state(std::string_view name) const {
  for (std::size_t p = 0; p < size(); ++p)
    if (names_[p] == name) return p;
  if (!name.empty() && std::all_of(name.begin(), name.end(), ::isdigit)) {
    std::size_t p = std::stoul(std::string(name));
    if (p < size()) return p;
  }
  return std::nullopt;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
  std::optional<SemiringTag> tag;
  std::string alphabet;
  bool eps = false;
  std::optional<Automaton> a;
  std::vector<std::string> names;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string line;

  auto fail = [&](const std::string& what) {
    return Error(ErrorKind::FormatError, "line " + std::to_string(lineno) + ": " + what);
  };
  auto need_states = [&]() -> Automaton& {
    if (!a) throw fail("'states' must come first");
    return *a;
  };
  auto state = [&](const std::string& tok) {
    auto p = need_states().find_state(tok);
    if (!p) throw fail("unknown state '" + tok + "'");
    return *p;
  };
  auto weight = [&](const std::string& tok) {
    if (tok == "_") return Weight::one(*tag);
    try {
      return Weight::parse(*tag, tok);
    } catch (const Error& e) {
      throw fail(e.what());
    }
  };
  auto state_weights = [&](const std::vector<std::string>& toks, bool initial) {
    Automaton& aut = need_states();
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const std::string& tok = toks[i];
      auto colon = tok.rfind(':');
      std::size_t p = state(colon == std::string::npos ? tok : tok.substr(0, colon));
      Weight w = colon == std::string::npos ? Weight::one(*tag) : weight(tok.substr(colon + 1));
      if (initial)
        aut.set_initial(p, w);
      else
        aut.set_final(p, w);
    }
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& cmd = toks[0];
    if (cmd == "semiring") {
      if (toks.size() != 2 || a) throw fail("bad 'semiring' line");
      try {
        tag = parse_tag(toks[1]);
      } catch (const Error& e) {
        throw fail(e.what());
      }
    } else if (cmd == "alphabet") {
      if (a) throw fail("'alphabet' must precede 'states'");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].size() != 1 || toks[i][0] == kEpsilon) throw fail("bad letter '" + toks[i] + "'");
        alphabet += toks[i];
      }
    } else if (cmd == "epsilon") {
      if (a || toks.size() != 2 || (toks[1] != "true" && toks[1] != "false"))
        throw fail("bad 'epsilon' line");
      eps = toks[1] == "true";
    } else if (cmd == "states") {
      if (a || toks.size() < 2) throw fail("bad 'states' line");
      if (!tag) tag = SemiringTag::B;
      bool numeric = toks.size() == 2 && std::all_of(toks[1].begin(), toks[1].end(), ::isdigit);
      if (numeric) {
        a.emplace(*tag, alphabet, std::stoul(toks[1]), eps);
      } else {
        a.emplace(*tag, alphabet, toks.size() - 1, eps);
        std::vector<std::string> given(toks.begin() + 1, toks.end());
        std::set<std::string> unique(given.begin(), given.end());
        if (unique.size() != given.size()) throw fail("duplicate state name");
        a->set_state_names(given);
      }
    } else if (cmd == "initial") {
      state_weights(toks, true);
    } else if (cmd == "final") {
      state_weights(toks, false);
    } else if (cmd == "edge") {
      if (toks.size() != 5 || toks[2].size() != 1) throw fail("expected 'edge src letter weight dst'");
      Automaton& aut = need_states();
      try {
        aut.add_edge(state(toks[1]), toks[2][0], weight(toks[3]), state(toks[4]));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::FormatError) throw;
        throw fail(e.what());
      }
    } else {
      throw fail("unknown directive '" + cmd + "'");
    }
  }
  if (!a) throw Error(ErrorKind::FormatError, "missing 'states' line");
  return *a;
}

std::string to_text(const Automaton& a) {
  std::ostringstream out;
  out << "semiring " << tag_name(a.tag()) << '\n';
  out << "alphabet";
  for (char c : a.alphabet()) out << ' ' << c;
  out << '\n';
  if (a.eps_allowed()) out << "epsilon true\n";
  if (a.has_custom_names()) {
    out << "states";
    for (const auto& n : a.state_names()) out << ' ' << n;
    out << '\n';
  } else {
    out << "states " << a.size() << '\n';
  }
  auto weights = [&](const char* what, const std::vector<Weight>& ws) {
    out << what;
    for (std::size_t p = 0; p < ws.size(); ++p) {
      if (ws[p].is_zero()) continue;
      out << ' ' << a.state_name(p);
      if (!ws[p].is_one()) out << ':' << ws[p].to_string();
    }
    out << '\n';
  };
  weights("initial", a.initials());
  weights("final", a.finals());
  for (const auto& [k, w] : a.edges())
    out << "edge " << a.state_name(k.src) << ' ' << k.label << ' '
        << (w.is_one() ? std::string("_") : w.to_string()) << ' ' << a.state_name(k.dst) << '\n';
  return out.str();
}

std::string to_dot(const Automaton& a) {
  std::ostringstream out;
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  out << "digraph {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t p = 0; p < a.size(); ++p) out << "  " << quote(a.state_name(p)) << ";\n";
  for (std::size_t p = 0; p < a.size(); ++p) {
    const Weight& i = a.initial(p);
    if (!i.is_zero()) {
      out << "  I" << p << " [shape=point];\n  I" << p << " -> " << quote(a.state_name(p));
      if (!i.is_one()) out << " [label=" << quote("<" + i.to_string() + ">") << "]";
      out << ";\n";
    }
    const Weight& t = a.final_weight(p);
    if (!t.is_zero()) {
      out << "  F" << p << " [shape=point];\n  " << quote(a.state_name(p)) << " -> F" << p;
      if (!t.is_one()) out << " [label=" << quote("<" + t.to_string() + ">") << "]";
      out << ";\n";
    }
  }
  for (const auto& [k, w] : a.edges()) {
    std::string label = k.label == kEpsilon ? std::string("\\\\e") : std::string(1, k.label);
    if (!w.is_one()) label = "<" + w.to_string() + ">" + label;
    out << "  " << quote(a.state_name(k.src)) << " -> " << quote(a.state_name(k.dst))
        << " [label=" << quote(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

void require_no_epsilon(const Automaton& a) {
  if (a.eps_allowed() && a.has_epsilon_edges())
    throw Error(ErrorKind::EpsilonPresent, "apply backward_closure first");
}

using Row = std::vector<Weight>;

Row step(const Automaton& a, const Row& v, char letter) {
  Row r(a.size(), Weight::zero(a.tag()));
  for (const auto& [k, w] : a.edges())
    if (k.label == letter && !v[k.src].is_zero()) r[k.dst] = add(r[k.dst], mul(v[k.src], w));
  return r;
}

Weight apply_final(const Automaton& a, const Row& v) {
  Weight s = Weight::zero(a.tag());
  for (std::size_t p = 0; p < a.size(); ++p)
    if (!v[p].is_zero()) s = add(s, mul(v[p], a.final_weight(p)));
  return s;
}

}  // namespace

Weight eval(const Automaton& a, std::string_view word) {
  require_no_epsilon(a);
  for (char c : word)
    if (a.alphabet().find(c) == std::string::npos)
      throw Error(ErrorKind::UnknownLetter, "'" + std::string(1, c) + "'");
  Row v = a.initials();
  for (char c : word) v = step(a, v, c);
  return apply_final(a, v);
}

TruncatedSeries truncated_behaviour(const Automaton& a, std::size_t n) {
  require_no_epsilon(a);
  TruncatedSeries s(a.tag(), n);
  std::deque<std::pair<std::string, Row>> queue;
  queue.emplace_back("", a.initials());
  while (!queue.empty()) {
    auto [word, v] = std::move(queue.front());
    queue.pop_front();
    s.accumulate(word, apply_final(a, v));
    if (word.size() == n) continue;
    for (char c : a.alphabet()) {
      Row next = step(a, v, c);
      if (std::all_of(next.begin(), next.end(), [](const Weight& w) { return w.is_zero(); }))
        continue;
      queue.emplace_back(word + c, std::move(next));
    }
  }
  return s;
}

Automaton backward_closure(const Automaton& a) {
  if (a.tag() != SemiringTag::B)
    throw Error(ErrorKind::NonBooleanEpsilon, "backward closure is defined over B only");
  std::size_t n = a.size();
  std::vector<std::vector<std::size_t>> eps(n);
  for (const auto& [k, w] : a.edges())
    if (k.label == kEpsilon) eps[k.src].push_back(k.dst);
  Automaton b(a.tag(), a.alphabet(), n, false);
  b.set_state_names(a.state_names());
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{p};
    seen[p] = true;
    while (!stack.empty()) {
      std::size_t q = stack.back();
      stack.pop_back();
      for (std::size_t r : eps[q])
        if (!seen[r]) {
          seen[r] = true;
          stack.push_back(r);
        }
    }
    b.set_initial(p, a.initial(p));
    for (std::size_t q = 0; q < n; ++q) {
      if (!seen[q]) continue;
      if (!a.final_weight(q).is_zero()) b.set_final(p, Weight::one(a.tag()));
      for (auto it = a.edges().lower_bound(EdgeKey{q, 0, 0});
           it != a.edges().end() && it->first.src == q; ++it)
        if (it->first.label != kEpsilon) b.add_edge(p, it->first.label, it->second, it->first.dst);
    }
  }
  return b;
}

namespace {

std::vector<bool> reach(const Automaton& a, bool forward) {
  std::size_t n = a.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [k, w] : a.edges()) {
    if (forward)
      adj[k.src].push_back(k.dst);
    else
      adj[k.dst].push_back(k.src);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack;
  for (std::size_t p = 0; p < n; ++p) {
    const Weight& w = forward ? a.initial(p) : a.final_weight(p);
    if (!w.is_zero()) {
      seen[p] = true;
      stack.push_back(p);
    }
  }
  while (!stack.empty()) {
    std::size_t p = stack.back();
    stack.pop_back();
    for (std::size_t q : adj[p])
      if (!seen[q]) {
        seen[q] = true;
        stack.push_back(q);
      }
  }
  return seen;
}

Automaton restrict_to(const Automaton& a, const std::vector<bool>& keep) {
  std::vector<std::size_t> index(a.size(), a.size());
  Automaton b(a.tag(), a.alphabet(), 0, a.eps_allowed());
  std::vector<std::string> names;
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (!keep[p]) continue;
    index[p] = b.add_state(a.initial(p), a.final_weight(p));
    names.push_back(a.state_name(p));
  }
  b.set_state_names(names);
  for (const auto& [k, w] : a.edges())
    if (keep[k.src] && keep[k.dst]) b.add_edge(index[k.src], k.label, w, index[k.dst]);
  return b;
}

}  // namespace

Automaton accessible_part(const Automaton& a) { return restrict_to(a, reach(a, true)); }

Automaton trim(const Automaton& a) {
  auto fwd = reach(a, true);
  auto bwd = reach(a, false);
  std::vector<bool> keep(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) keep[p] = fwd[p] && bwd[p];
  return restrict_to(a, keep);
}

}  // namespace ratkit
