#include "ratkit/gamma.hpp"

#include <cctype>
#include <set>

namespace ratkit {

namespace {

void require_letters_only(const Automaton& a) {
  if (a.eps_allowed() && a.has_epsilon_edges())
    throw Error(ErrorKind::EpsilonPresent, "apply backward_closure first");
}

void require_order(const Automaton& a, const Order& order) {
  if (!is_order(order, a.size())) throw Error(ErrorKind::FormatError, "not an order on the states");
}

ExprMatrix zero_matrix(SemiringTag tag, std::size_t n) {
  return ExprMatrix(n, std::vector<Expr>(n, zero(tag)));
}

Expr weighted_one(const Weight& k) { return lweight(k, one(k.tag())); }

}  // namespace

ExprMatrix letter_matrix(const Automaton& a) {
  require_letters_only(a);
  ExprMatrix m = zero_matrix(a.tag(), a.size());
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = 0; q < a.size(); ++q)
      for (char c : a.alphabet()) {
        Weight w = a.edge(p, c, q);
        if (!w.is_zero()) m[p][q] = sum(m[p][q], lweight(w, atom(a.tag(), c)));
      }
  return m;
}

Expr state_elimination(const Automaton& a, const Order& order) {
  require_letters_only(a);
  require_order(a, order);
  std::size_t n = a.size(), i = n, t = n + 1;
  // Labels of the generalized automaton on Q + {i, t}.
  ExprMatrix label = zero_matrix(a.tag(), n + 2);
  ExprMatrix letters = letter_matrix(a);
  for (std::size_t p = 0; p < n; ++p) {
    label[i][p] = weighted_one(a.initial(p));
    label[p][t] = weighted_one(a.final_weight(p));
    for (std::size_t q = 0; q < n; ++q) label[p][q] = letters[p][q];
  }
  std::vector<bool> gone(n + 2, false);
  std::vector<std::size_t> sources{i}, targets;
  for (std::size_t p = 0; p < n; ++p) {
    sources.push_back(p);
    targets.push_back(p);
  }
  targets.push_back(t);
  for (std::size_t q : order) {
    Expr loop = star(label[q][q]);
    for (std::size_t p : sources) {
      if (gone[p] || p == q || label[p][q].is_zero()) continue;
      Expr k = prod(label[p][q], loop);
      for (std::size_t r : targets) {
        if (gone[r] || r == q || label[q][r].is_zero()) continue;
        label[p][r] = sum(label[p][r], prod(k, label[q][r]));
      }
    }
    gone[q] = true;
  }
  return label[i][t];
}

Expr system_solution(const Automaton& a, const Order& order) {
  require_letters_only(a);
  require_order(a, order);
  std::size_t n = a.size();
  SemiringTag tag = a.tag();
  // behaviour = sum_p G_p L_p + H ;  L_p = sum_q F_pq L_q + K_p
  std::vector<Expr> g(n), k(n);
  Expr h = zero(tag);
  ExprMatrix f = letter_matrix(a);
  for (std::size_t p = 0; p < n; ++p) {
    g[p] = weighted_one(a.initial(p));
    k[p] = weighted_one(a.final_weight(p));
  }
  std::vector<bool> solved(n, false);
  for (std::size_t q : order) {
    // L_q = F_qq* (sum_{r != q} F_qr L_r + K_q), substituted everywhere.
    Expr fq = star(f[q][q]);
    solved[q] = true;
    if (!g[q].is_zero()) {
      Expr gq = prod(g[q], fq);
      for (std::size_t r = 0; r < n; ++r)
        if (!solved[r] && !f[q][r].is_zero()) g[r] = sum(g[r], prod(gq, f[q][r]));
      if (!k[q].is_zero()) h = sum(h, prod(gq, k[q]));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (solved[r] || f[r][q].is_zero()) continue;
      Expr rq = prod(f[r][q], fq);
      for (std::size_t p = 0; p < n; ++p)
        if (!solved[p] && !f[q][p].is_zero()) f[r][p] = sum(f[r][p], prod(rq, f[q][p]));
      if (!k[q].is_zero()) k[r] = sum(k[r], prod(rq, k[q]));
    }
  }
  return h;
}

MnyResult mcnaughton_yamada(const Automaton& a, const Order& order, bool factor_stars) {
  require_letters_only(a);
  require_order(a, order);
  std::size_t n = a.size();
  MnyResult result;
  ExprMatrix m = letter_matrix(a);
  result.steps.push_back(m);
  for (std::size_t k : order) {
    ExprMatrix next = m;
    Expr loop = star(m[k][k]);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Expr& x = m[p][k];
        const Expr& y = m[k][q];
        if (x.is_zero() || y.is_zero()) continue;
        const Expr& old = m[p][q];
        if (factor_stars && old == y && x == m[k][k]) {
          next[p][q] = prod(loop, y);
        } else if (factor_stars && old == x && y == m[k][k]) {
          next[p][q] = prod(x, loop);
        } else {
          next[p][q] = sum(old, prod(prod(x, loop), y));
        }
      }
    m = std::move(next);
    result.steps.push_back(m);
  }
  for (std::size_t p = 0; p < n; ++p) m[p][p] = sum(m[p][p], one(a.tag()));
  Expr total = zero(a.tag());
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      total = sum(total, lweight(a.initial(p), rweight(m[p][q], a.final_weight(q))));
  result.matrix = std::move(m);
  result.aggregate = total;
  return result;
}

namespace {

Division balanced(std::size_t lo, std::size_t hi) {
  Division d;
  if (hi - lo == 1) {
    d.state = lo;
    return d;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  d.parts.push_back(balanced(lo, mid));
  d.parts.push_back(balanced(mid, hi));
  return d;
}

void leaves(const Division& d, std::vector<std::size_t>& out) {
  if (d.leaf()) {
    out.push_back(d.state);
    return;
  }
  for (const auto& part : d.parts) leaves(part, out);
}

class DivisionParser {
 public:
  DivisionParser(std::string_view text, const Automaton& a) : text_(text), a_(a) {}

  Division run() {
    Division d = node();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::FormatError,
                "division at position " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  Division node() {
    skip();
    Division d;
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      d.parts.push_back(node());
      expect(',');
      d.parts.push_back(node());
      expect(')');
      return d;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a state");
    auto p = a_.find_state(text_.substr(start, pos_ - start));
    if (!p) fail("unknown state");
    d.state = *p;
    return d;
  }

  std::string_view text_;
  const Automaton& a_;
  std::size_t pos_ = 0;
};

ExprMatrix block(const ExprMatrix& m, std::size_t r0, std::size_t rows, std::size_t c0,
                 std::size_t cols) {
  ExprMatrix out(rows, std::vector<Expr>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[i][j] = m[r0 + i][c0 + j];
  return out;
}

ExprMatrix plus(const ExprMatrix& x, const ExprMatrix& y) {
  ExprMatrix out = x;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x[i].size(); ++j) out[i][j] = sum(x[i][j], y[i][j]);
  return out;
}

ExprMatrix times(const ExprMatrix& x, const ExprMatrix& y, SemiringTag tag) {
  std::size_t rows = x.size(), inner = y.size(), cols = y.empty() ? 0 : y[0].size();
  ExprMatrix out(rows, std::vector<Expr>(cols, zero(tag)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < inner; ++k) out[i][j] = sum(out[i][j], prod(x[i][k], y[k][j]));
  return out;
}

// m is indexed by the leaves of d in left-to-right order.
ExprMatrix matrix_star(const ExprMatrix& m, const Division& d, SemiringTag tag) {
  if (d.leaf()) return ExprMatrix{{star(m[0][0])}};
  std::vector<std::size_t> left;
  leaves(d.parts[0], left);
  std::size_t a = left.size(), b = m.size() - a;
  ExprMatrix f = block(m, 0, a, 0, a), g = block(m, 0, a, a, b);
  ExprMatrix h = block(m, a, b, 0, a), k = block(m, a, b, a, b);
  ExprMatrix fs = matrix_star(f, d.parts[0], tag);
  ExprMatrix ks = matrix_star(k, d.parts[1], tag);
  ExprMatrix top = matrix_star(plus(f, times(times(g, ks, tag), h, tag)), d.parts[0], tag);
  ExprMatrix bottom = matrix_star(plus(k, times(times(h, fs, tag), g, tag)), d.parts[1], tag);
  ExprMatrix upper_right = times(times(fs, g, tag), bottom, tag);
  ExprMatrix lower_left = times(times(ks, h, tag), top, tag);
  ExprMatrix out(a + b, std::vector<Expr>(a + b));
  for (std::size_t i = 0; i < a + b; ++i)
    for (std::size_t j = 0; j < a + b; ++j) {
      if (i < a && j < a) out[i][j] = top[i][j];
      else if (i < a) out[i][j] = upper_right[i][j - a];
      else if (j < a) out[i][j] = lower_left[i - a][j];
      else out[i][j] = bottom[i - a][j - a];
    }
  return out;
}

}  // namespace

Division balanced_division(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::FormatError, "no states to divide");
  return balanced(0, n);
}

Division parse_division(std::string_view text, const Automaton& a) {
  Division d = DivisionParser(text, a).run();
  std::vector<std::size_t> all;
  leaves(d, all);
  std::set<std::size_t> unique(all.begin(), all.end());
  if (all.size() != a.size() || unique.size() != all.size())
    throw Error(ErrorKind::FormatError, "division must list every state exactly once");
  return d;
}

std::string to_string(const Division& d, const Automaton& a) {
  if (d.leaf()) return a.state_name(d.state);
  return "(" + to_string(d.parts[0], a) + "," + to_string(d.parts[1], a) + ")";
}

RecursiveResult recursive_method(const Automaton& a, const Division& division) {
  require_letters_only(a);
  RecursiveResult result;
  result.aggregate = zero(a.tag());
  std::size_t n = a.size();
  if (n == 0) return result;
  std::vector<std::size_t> order;
  leaves(division, order);
  if (!is_order(order, n)) throw Error(ErrorKind::FormatError, "division must cover the states");
  ExprMatrix e = letter_matrix(a);
  ExprMatrix local(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) local[i][j] = e[order[i]][order[j]];
  ExprMatrix s = matrix_star(local, division, a.tag());
  result.matrix = zero_matrix(a.tag(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) result.matrix[order[i]][order[j]] = s[i][j];
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      result.aggregate = sum(result.aggregate, lweight(a.initial(p), rweight(result.matrix[p][q],
                                                                              a.final_weight(q))));
  return result;
}

}  // namespace ratkit
