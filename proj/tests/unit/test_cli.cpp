#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "ratkit/automaton.hpp"
#include "ratkit/cli.hpp"
#include "ratkit/expr.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "ratkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = ratkit::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kD3 = std::string(RATKIT_TEST_DATA) + "/d3.aut";

}  // namespace

TEST_CASE("aut2exp eliminates states in the given order") {
  Result r = call({"aut2exp", "--method", "se", "--order", "r,p,q", kD3});
  CHECK(r.code == 0);
  CHECK(r.out == "a*+a*b(ab*a+ba*b)*(ba*)\n");
  Result n = call({"aut2exp", "--order", "r,p,q", "--simplify", "natural", kD3});
  CHECK(n.out == "a*+a*b(ab*a+ba*b)*ba*\n");
  Result s = call({"aut2exp", "--method", "system", "--order", "2,0,1", kD3});
  CHECK(s.out == r.out);
  Result m = call({"aut2exp", "--method", "recursive", "--division", "((p,q),r)", "--matrix", kD3});
  CHECK(m.code == 0);
  CHECK(m.out.find("p p: ") == 0);
}

TEST_CASE("equiv reports verdicts through the exit code") {
  Result r = call({"equiv", "-W", "B", "-E", "(a*b*)*", "-F", "(a+b)*"});
  CHECK(r.code == 0);
  CHECK(r.out == "equivalent\n");
  Result d = call({"equiv", "-E", "a*", "-F", "(aa)*"});
  CHECK(d.code == 1);
  CHECK(d.out == "not equivalent: \"a\" has weight 1 vs 0\n");
  Result s = call({"equiv", "-W", "MinPlus", "-E", "<1>a*", "-F", "<1>a*"});
  CHECK(s.code == 3);
}

TEST_CASE("expression commands") {
  CHECK(call({"height", "-E", "a*(ba*)*"}).out == "2\n");
  CHECK(call({"snf", "-E", "(a*b*)*"}).out == "(a+b)*\n");
  CHECK(call({"parse", "-W", "Q", "-E", "<1>(a+\\z)"}).out == "a\n");
  CHECK(call({"terms", "-E", "(a*b+bb*a)*"}).out ==
        "(a*b+bb*a)*\na*b(a*b+bb*a)*\nb*a(a*b+bb*a)*\n");
  CHECK(call({"derive", "-W", "Z", "-E", "(\\e+<-1>a)a*", "-w", "a"}).out == "\\z\n");
  CHECK(call({"eval", "-W", "Q", "-E", "(<1/6>a*+<1/3>b*)*", "-w", "a"}).out == "2/3\n");
  CHECK(call({"series", "-E", "ab", "-n", "2"}).out == "ab 1\n");
}

TEST_CASE("automaton commands") {
  CHECK(call({"lc", kD3}).out == "2\n");
  CHECK(call({"index", "--order", "r,p,q", kD3}).out == "2\n");
  CHECK(call({"index", "--order", "p,q,r", kD3}).out == "3\n");
  Result q = call({"quotient", kD3});
  CHECK(q.code == 0);
  CHECK(ratkit::parse_automaton(q.out).size() == 3);
  Result a = call({"exp2aut", "-W", "Z", "-E", "(\\e+<-1>a)a*"});
  CHECK(a.out ==
        "semiring Z\nalphabet a\nstates 3\ninitial 0\nfinal 0 1 2\n"
        "edge 0 a -1 1\nedge 0 a _ 2\nedge 1 a _ 2\nedge 2 a _ 2\n");
  Result t = call({"exp2aut", "--method", "thompson", "-E", "a", "--dot"});
  CHECK(t.out.find("digraph") == 0);
}

TEST_CASE("outputs re-parse through the matching reader") {
  Result e = call({"aut2exp", "--order", "p,q,r", kD3});
  ratkit::Expr x = ratkit::parse_expr(e.out.substr(0, e.out.size() - 1), ratkit::SemiringTag::B);
  CHECK(ratkit::to_string(x) + "\n" == e.out);
  Result a = call({"exp2aut", "--method", "derived", "-W", "Q", "-E", "(<1/6>a*+<1/3>b*)*"});
  CHECK(ratkit::to_text(ratkit::parse_automaton(a.out)) == a.out);
}

TEST_CASE("errors exit with code 2 and name their kind") {
  Result r = call({"parse", "-E", "(a+"});
  CHECK(r.code == 2);
  CHECK(r.err.find("SyntaxError") != std::string::npos);
  CHECK(call({"snf", "-W", "Q", "-E", "a"}).code == 2);
  CHECK(call({"aut2exp", "/no/such/file"}).code == 2);
  CHECK(call({"aut2exp", "--order", "p,q", kD3}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"--help"}).code == 0);
}
