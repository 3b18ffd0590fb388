#include "ratkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ratkit/automaton.hpp"
#include "ratkit/delta.hpp"
#include "ratkit/equiv.hpp"
#include "ratkit/expr.hpp"
#include "ratkit/gamma.hpp"

namespace ratkit {

namespace {

std::string read_source(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FormatError, "cannot open " + path);
  buf << in.rdbuf();
  return buf.str();
}

Automaton load_automaton(const std::string& path) { return parse_automaton(read_source(path)); }

Order parse_order(const std::string& text, const Automaton& a) {
  if (text.empty()) return identity_order(a.size());
  Order order;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto p = a.find_state(item);
    if (!p) throw Error(ErrorKind::FormatError, "unknown state '" + item + "' in order");
    order.push_back(*p);
  }
  if (!is_order(order, a.size()))
    throw Error(ErrorKind::FormatError, "order must list every state exactly once");
  return order;
}

std::string display(const Expr& e, const std::string& simplify) {
  return to_string(simplify == "natural" ? natural_simplify(e) : e);
}

void print_automaton(std::ostream& out, const Automaton& a, bool dot) {
  out << (dot ? to_dot(a) : to_text(a));
}

void print_matrix(std::ostream& out, const ExprMatrix& m, const Automaton& a,
                  const std::string& simplify) {
  for (std::size_t p = 0; p < m.size(); ++p)
    for (std::size_t q = 0; q < m[p].size(); ++q)
      out << a.state_name(p) << ' ' << a.state_name(q) << ": " << display(m[p][q], simplify)
          << '\n';
}

// Options shared by the subcommands; each subcommand registers the ones it uses.
struct Options {
  std::string semiring = "B";
  std::string expr, other;
  std::vector<std::string> files;
  std::string method;
  std::string order;
  std::string division;
  std::string simplify = "trivial";
  std::string word;
  std::size_t length = 4;
  bool dot = false;
  bool matrix = false;
  bool factor_stars = false;
};

Expr the_expr(const Options& o, const std::string& text) {
  return parse_expr(text, parse_tag(o.semiring));
}

void add_semiring(CLI::App* cmd, Options& o) {
  cmd->add_option("-W,--semiring", o.semiring, "Semiring: B, N, Z, Q or MinPlus")
      ->capture_default_str();
}

void add_simplify(CLI::App* cmd, Options& o) {
  cmd->add_option("--simplify", o.simplify, "Display simplification")
      ->check(CLI::IsMember({"trivial", "natural"}))
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conversions between rational expressions and weighted automata", "ratkit"};
  app.require_subcommand(1);
  Options o;

  auto* parse = app.add_subcommand("parse", "Parse an expression and print it reduced");
  add_semiring(parse, o);
  add_simplify(parse, o);
  parse->add_option("-E,--expr", o.expr, "Expression")->required();

  auto* exp2aut = app.add_subcommand("exp2aut", "Build an automaton from an expression");
  add_semiring(exp2aut, o);
  exp2aut->add_option("-E,--expr", o.expr, "Expression")->required();
  exp2aut->add_option("--method", o.method, "standard, derived, thompson, snf or eggan")
      ->check(CLI::IsMember({"standard", "derived", "thompson", "snf", "eggan"}));
  exp2aut->add_flag("--dot", o.dot, "Emit Graphviz DOT");

  auto* aut2exp = app.add_subcommand("aut2exp", "Compute an expression from an automaton");
  aut2exp->add_option("file", o.files, "Automaton file, '-' for stdin")->required()->expected(1);
  aut2exp->add_option("--method", o.method, "se, system, mny or recursive")
      ->check(CLI::IsMember({"se", "system", "mny", "recursive"}));
  aut2exp->add_option("--order", o.order, "Comma-separated states, smallest first");
  aut2exp->add_option("--division", o.division, "Nested pairs of states, e.g. ((p,q),r)");
  aut2exp->add_flag("--factor-stars", o.factor_stars, "Factored entries in McNaughton-Yamada");
  aut2exp->add_flag("--matrix", o.matrix, "Print the matrix instead of the aggregate");
  add_simplify(aut2exp, o);

  auto* evalc = app.add_subcommand("eval", "Weight of a word");
  add_semiring(evalc, o);
  evalc->add_option("-E,--expr", o.expr, "Expression (instead of an automaton file)");
  evalc->add_option("file", o.files, "Automaton file")->expected(0, 1);
  evalc->add_option("-w,--word", o.word, "Word (empty by default)");

  auto* series = app.add_subcommand("series", "Coefficients of all words up to a length");
  add_semiring(series, o);
  series->add_option("-E,--expr", o.expr, "Expression (instead of an automaton file)");
  series->add_option("file", o.files, "Automaton file")->expected(0, 1);
  series->add_option("-n,--length", o.length, "Maximal word length")->capture_default_str();

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two expressions or automata");
  add_semiring(equiv, o);
  equiv->add_option("-E,--expr", o.expr, "First expression");
  equiv->add_option("-F,--other", o.other, "Second expression");
  equiv->add_option("files", o.files, "Automaton files")->expected(0, 2);
  equiv->add_option("-n,--length", o.length, "Sample length for min-plus");
  equiv->get_option("--length")->default_val(8);

  auto* snf = app.add_subcommand("snf", "Star-normal form of a Boolean expression");
  add_semiring(snf, o);
  snf->add_option("-E,--expr", o.expr, "Expression")->required();

  auto* derive_cmd = app.add_subcommand("derive", "Derivative with respect to a word");
  add_semiring(derive_cmd, o);
  derive_cmd->add_option("-E,--expr", o.expr, "Expression")->required();
  derive_cmd->add_option("-w,--word", o.word, "Nonempty word")->required();

  auto* terms = app.add_subcommand("terms", "Derived terms, one per line");
  add_semiring(terms, o);
  terms->add_option("-E,--expr", o.expr, "Expression")->required();

  auto* lc = app.add_subcommand("lc", "Loop complexity of an automaton");
  lc->add_option("file", o.files, "Automaton file")->required()->expected(1);

  auto* index = app.add_subcommand("index", "Loop index of an automaton for an order");
  index->add_option("file", o.files, "Automaton file")->required()->expected(1);
  index->add_option("--order", o.order, "Comma-separated states, smallest first");

  auto* height = app.add_subcommand("height", "Star height of an expression");
  add_semiring(height, o);
  height->add_option("-E,--expr", o.expr, "Expression")->required();

  auto* quotient = app.add_subcommand("quotient", "Minimal quotient of an automaton");
  quotient->add_option("file", o.files, "Automaton file")->required()->expected(1);
  quotient->add_flag("--dot", o.dot, "Emit Graphviz DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (parse->parsed()) {
      out << display(the_expr(o, o.expr), o.simplify) << '\n';
    } else if (exp2aut->parsed()) {
      Expr e = the_expr(o, o.expr);
      std::string m = o.method.empty() ? "standard" : o.method;
      Automaton a;
      if (m == "standard") a = standard_automaton(e);
      else if (m == "derived") a = derived_term_automaton(e).automaton;
      else if (m == "thompson") a = thompson(e);
      else if (m == "snf") a = standard_automaton(star_normal_form(e));
      else a = eggan_automaton(e);
      print_automaton(out, a, o.dot);
    } else if (aut2exp->parsed()) {
      Automaton a = load_automaton(o.files[0]);
      if (a.has_epsilon_edges()) a = backward_closure(a);
      std::string m = o.method.empty() ? "se" : o.method;
      Order order = parse_order(o.order, a);
      if (m == "se") {
        out << display(state_elimination(a, order), o.simplify) << '\n';
      } else if (m == "system") {
        out << display(system_solution(a, order), o.simplify) << '\n';
      } else if (m == "mny") {
        MnyResult r = mcnaughton_yamada(a, order, o.factor_stars);
        if (o.matrix) print_matrix(out, r.matrix, a, o.simplify);
        else out << display(r.aggregate, o.simplify) << '\n';
      } else {
        Division d = o.division.empty() ? balanced_division(a.size()) : parse_division(o.division, a);
        RecursiveResult r = recursive_method(a, d);
        if (o.matrix) print_matrix(out, r.matrix, a, o.simplify);
        else out << display(r.aggregate, o.simplify) << '\n';
      }
    } else if (evalc->parsed() || series->parsed()) {
      Automaton a;
      if (!o.expr.empty()) a = standard_automaton(the_expr(o, o.expr));
      else if (!o.files.empty()) a = load_automaton(o.files[0]);
      else throw Error(ErrorKind::FormatError, "give -E or an automaton file");
      if (a.has_epsilon_edges()) a = backward_closure(a);
      if (evalc->parsed()) out << eval(a, o.word).to_string() << '\n';
      else out << truncated_behaviour(a, o.length).to_string();
    } else if (equiv->parsed()) {
      std::vector<Automaton> sides;
      std::string alphabet;
      for (const std::string* text : {&o.expr, &o.other})
        if (!text->empty()) alphabet += letters(the_expr(o, *text));
      for (const std::string* text : {&o.expr, &o.other})
        if (!text->empty()) sides.push_back(derived_term_automaton(the_expr(o, *text), alphabet).automaton);
      for (const std::string& f : o.files) {
        Automaton a = load_automaton(f);
        sides.push_back(a.has_epsilon_edges() ? backward_closure(a) : a);
      }
      if (sides.size() != 2) throw Error(ErrorKind::FormatError, "equiv needs exactly two inputs");
      Verdict v = equivalent_automata(sides[0], sides[1], o.length);
      if (v.equivalent && v.method == EquivMethod::Sampled) {
        out << "equivalent on all words up to length " << o.length << " (sampled)\n";
        return kExitSampled;
      }
      if (v.equivalent) {
        out << "equivalent\n";
        return kExitOk;
      }
      out << "not equivalent: \"" << v.witness->word << "\" has weight " << v.witness->left.to_string()
          << " vs " << v.witness->right.to_string() << '\n';
      return kExitDifferent;
    } else if (snf->parsed()) {
      out << to_string(star_normal_form(the_expr(o, o.expr))) << '\n';
    } else if (derive_cmd->parsed()) {
      out << derive_word(the_expr(o, o.expr), o.word).to_string() << '\n';
    } else if (terms->parsed()) {
      for (const Expr& k : derived_terms(the_expr(o, o.expr))) out << to_string(k) << '\n';
    } else if (lc->parsed()) {
      out << loop_complexity(load_automaton(o.files[0])) << '\n';
    } else if (index->parsed()) {
      Automaton a = load_automaton(o.files[0]);
      out << loop_index(a, parse_order(o.order, a)) << '\n';
    } else if (height->parsed()) {
      out << star_height(the_expr(o, o.expr)) << '\n';
    } else if (quotient->parsed()) {
      print_automaton(out, minimal_quotient(load_automaton(o.files[0])).automaton, o.dot);
    }
  } catch (const Error& e) {
    err << "ratkit: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "ratkit: internal error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

}  // namespace ratkit
