#include <gtest/gtest.h>

#include <array>
#include <map>
#include <tuple>
#include <sys/wait.h>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "noeth/io.hpp"
#include "noeth/render.hpp"
#include "test_util.hpp"

using namespace noeth;
using namespace noeth::testing;

namespace {

const char* kParabola = "ring x, y; order deglex; ideal y^2, x^2 - y;";
const char* kFatLine = "ring x, y | t; order lex; ideal x^2, y^2, -x*t + y;";
const char* kPde =
    "ring x, y;\n"
    "order lex;\n"
    "component center 0, 0 module [x, 1], [y, x], [0, y];\n"
    "component center 1, 0 module [x - 1, 1], [y, 0], [y, x - 1];\n"
    "dual z, t;\n";

Command command(std::string name, std::string arg = {}) {
  Command c;
  c.name = std::move(name);
  c.argument = std::move(arg);
  return c;
}

std::vector<std::string> strings(const Section& s, const std::string& key) {
  const FieldValue* v = s.get(key);
  if (v == nullptr) return {};
  return std::get<std::vector<std::string>>(*v);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Captured {
  std::string out;
  int status;
};

Captured run_cli(const std::string& args) {
  const std::string line = std::string(NOETH_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(line.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe.release());
  return {out, WEXITSTATUS(raw)};
}

std::string example(const std::string& name) { return std::string(EXAMPLES_DIR) + "/" + name; }

}  // namespace

TEST(ParseProblem, Parabola) {
  const ProblemSpec spec = parse_problem(kParabola);
  EXPECT_EQ(spec.ring->names(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(spec.ring->t_count(), 0);
  ASSERT_EQ(spec.generators.size(), 2u);
  EXPECT_EQ(render(spec.generators[0]), "y^2");
  EXPECT_EQ(render(spec.generators[1]), "x^2 - y");
}

TEST(ParseProblem, ParameterBlock) {
  const ProblemSpec spec = parse_problem(kFatLine);
  EXPECT_EQ(spec.ring->x_count(), 2);
  EXPECT_EQ(spec.ring->t_count(), 1);
  EXPECT_EQ(spec.order.name(), "lex");
  ASSERT_EQ(spec.generators.size(), 3u);
  EXPECT_EQ(render(spec.generators[2]), "-x*t + y");
}

TEST(ParseProblem, ComponentsAndDualNames) {
  const ProblemSpec spec = parse_problem(kPde);
  ASSERT_EQ(spec.components.size(), 2u);
  EXPECT_EQ(spec.components[1].center, point({1, 0}));
  EXPECT_EQ(spec.dual_names, (std::vector<std::string>{"z", "t"}));
  EXPECT_EQ(spec.ring->rank(), 2);
}

TEST(ParseProblem, ErrorAtDanglingPlus) {
  try {
    parse_problem("ideal x +");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 9);
  }
  try {
    parse_problem("ring x, y;\nideal x +");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 9);
  }
}

TEST(Dispatch, ParabolaForward) {
  Command c = command("noether");
  c.method = Method::Forward;
  const OutputDocument doc = cmd_dispatch(parse_problem(kParabola), c);
  EXPECT_EQ(doc.command, "noether --method forward");
  EXPECT_EQ(doc.main.operator_text, (std::vector<std::string>{"1", "dx", "1/2 dx^2 + dy", "1/6 dx^3 + dx dy"}));
  EXPECT_EQ(std::get<long>(*doc.main.get("multiplicity")), 4);
  EXPECT_EQ(strings(doc.main, "staircase"), (std::vector<std::string>{"1", "y", "x", "x*y"}));
}

TEST(Dispatch, CheckAllOnCornerIdeal) {
  Command c = command("noether");
  c.method = Method::Backward;
  c.check_all = true;
  const OutputDocument doc = cmd_dispatch(parse_problem("ring x, y, z; ideal x^2 - z, y^2 - z, z^2;"), c);
  EXPECT_TRUE(std::get<bool>(*doc.main.get("spans_agree")));
  EXPECT_EQ(doc.main.operator_text.size(), 8u);
  EXPECT_EQ(doc.main.operator_text.back(), "1/6 dx^3 dy + 1/6 dx dy^3 + dx dy dz");
}

TEST(Dispatch, TranslatesToCenter) {
  // (y - x^2) moved to (1, 1): generators in the original coordinates.
  const auto doc = cmd_dispatch(
      parse_problem("ring x, y; ideal (y - 1)^2, (x - 1)^2 - (y - 1); center 1, 1;"), command("noether"));
  EXPECT_EQ(strings(doc.main, "center"), (std::vector<std::string>{"1", "1"}));
  EXPECT_EQ(doc.main.operator_text, (std::vector<std::string>{"1", "dx", "1/2 dx^2 + dy", "1/6 dx^3 + dx dy"}));
}

TEST(Dispatch, PositiveDimensional) {
  const OutputDocument doc = cmd_dispatch(parse_problem(kFatLine), command("noether-posdim"));
  EXPECT_EQ(strings(doc.main, "raw_operators"), (std::vector<std::string>{"t", "dx + t dy"}));
  EXPECT_EQ(doc.main.operator_text, (std::vector<std::string>{"1", "dx + t dy"}));
  EXPECT_EQ(std::get<std::string>(*doc.main.get("gamma")), "t");
}

TEST(Dispatch, MemberAndNormalForm) {
  const ProblemSpec spec = parse_problem(kParabola);
  EXPECT_TRUE(std::get<bool>(*cmd_dispatch(spec, command("member", "x^4")).main.get("member")));
  EXPECT_FALSE(std::get<bool>(*cmd_dispatch(spec, command("member", "x^3")).main.get("member")));
  // x^3 = x*(x^2 - y) + x*y
  EXPECT_EQ(std::get<std::string>(*cmd_dispatch(spec, command("nf", "x^3")).main.get("normal_form")), "x*y");

  const ProblemSpec pos = parse_problem(kFatLine);
  EXPECT_TRUE(std::get<bool>(*cmd_dispatch(pos, command("member", "x*y")).main.get("member")));
  EXPECT_FALSE(std::get<bool>(*cmd_dispatch(pos, command("member", "x")).main.get("member")));
}

TEST(Dispatch, GbStaircaseCorners) {
  const ProblemSpec spec = parse_problem(kParabola);
  EXPECT_EQ(strings(cmd_dispatch(spec, command("gb")).main, "groebner_basis"),
            (std::vector<std::string>{"x^2 - y", "y^2"}));
  EXPECT_EQ(strings(cmd_dispatch(spec, command("corners")).main, "corners"), (std::vector<std::string>{"x*y"}));
}

TEST(Dispatch, PerComponent) {
  const OutputDocument doc = cmd_dispatch(parse_problem(kPde), command("noether"));
  ASSERT_EQ(doc.components.size(), 2u);
  EXPECT_EQ(doc.components[0].operator_text,
            (std::vector<std::string>{"(1, 0)", "(-dx, 1)", "(1/2 dx^2 + dy, -dx)"}));
  EXPECT_EQ(doc.components[1].operator_text, (std::vector<std::string>{"(1, 0)", "(-dx, 1)"}));
  EXPECT_EQ(strings(doc.components[1], "center"), (std::vector<std::string>{"1", "0"}));
}

TEST(EpSolution, PdeSystem) {
  const OutputDocument doc = cmd_dispatch(parse_problem(kPde), command("ep-solution"));
  EXPECT_EQ(strings(doc.main, "solution"),
            (std::vector<std::string>{"u_1 = A - B*z + 1/2*C*z^2 + C*t + D*e^z - E*z*e^z",
                                      "u_2 = B - C*z + E*e^z"}));
}

TEST(EpSolution, SinglePointGivesConstants) {
  const auto doc = cmd_dispatch(parse_problem("ring x, y; component ideal x, y;"), command("ep-solution"));
  EXPECT_EQ(strings(doc.main, "solution"), (std::vector<std::string>{"u = A"}));
  const auto shifted =
      cmd_dispatch(parse_problem("ring x, y; component center 2, -1 ideal x - 2, y + 1;"), command("ep-solution"));
  EXPECT_EQ(strings(shifted.main, "solution"), (std::vector<std::string>{"u = A*e^(2*x - y)"}));
}

TEST(EpSolution, PositiveDimensionalIntegrals) {
  const auto doc = cmd_dispatch(parse_problem("ring x, y | t; order lex; component ideal x^2, y^2, -x*t + y;"),
                                command("ep-solution"));
  EXPECT_EQ(strings(doc.main, "solution"),
            (std::vector<std::string>{"u = Integral e^(t*s_t) dmu1(s_t) + Integral (x + s_t*y)*e^(t*s_t) dmu2(s_t)"}));
}

TEST(EpSolution, FamilySolvesTheSystem) {
  // Each member of the family, read as a vector of exponential
  // polynomials, is killed by P(d/dz, d/dt).  Check it on the structured
  // terms: x -> d/dz, y -> d/dt acting on z^a t^b e^(pz).
  const ProblemSpec spec = parse_problem(kPde);
  std::vector<NoetherianBasis> bases;
  for (const auto& c : spec.components) {
    bases.push_back(noetherian_basis(c.generators, spec.module_order(), c.center, Method::Forward));
  }
  const EpFamily fam = ep_family(bases, {"z", "t"});
  // Rows read off the PDE system, entries as polynomials in x, y.  The
  // last row is f_t - g_zz + g_z + g_t.
  const auto r = ring_of({"x", "y"});
  const ModuleOrder o;
  const std::vector<std::array<std::string, 2>> rows = {
      {"x^2 - x + y", "2*x - 1"}, {"x*y", "y"}, {"y^2", "x*y - y"}, {"y", "-x^2 + x + y"}};
  // d/dz^i d/dt^j of z^a t^b e^(pz), evaluated as coefficients of z^c t^d e^(pz).
  using Key = std::tuple<std::string, int, int, std::string>;  // constant, z-power, t-power, p
  for (const auto& row : rows) {
    std::map<Key, Rational> total;
    for (int k = 0; k < 2; ++k) {
      const Poly entry = parse_polynomial(row[static_cast<std::size_t>(k)], r, o);
      for (const auto& term : fam.components[static_cast<std::size_t>(k)]) {
        for (const auto& pt : entry.terms()) {
          const int i = pt.mono.exp[0], j = pt.mono.exp[1];
          const int a = term.power[0], b = term.power[1];
          if (j > b) continue;
          const Rational p = term.point[0];
          // d/dz^i (z^a e^{pz}) = sum_m C(i,m) a!/(a-m)! z^(a-m) p^(i-m) e^{pz}
          for (int m = 0; m <= std::min(i, a); ++m) {
            Rational c = pt.coeff * term.coeff * binomial(i, m) * factorial(a) / factorial(a - m) *
                         factorial(b) / factorial(b - j);
            Rational pw = 1;
            for (int q = 0; q < i - m; ++q) pw *= p;
            total[Key{term.constant, a - m, b - j, p.get_str()}] += c * pw;
          }
        }
      }
    }
    for (const auto& [key, c] : total) EXPECT_EQ(c, 0) << std::get<0>(key) << " in row " << row[0];
  }
}

TEST(Dispatch, Errors) {
  EXPECT_THROW(cmd_dispatch(parse_problem(kParabola), command("ep-solution")), DomainError);
  EXPECT_THROW(cmd_dispatch(parse_problem("ring x | t; order lex; ideal x^2 - t, x*t - 1;"),
                            command("noether-posdim")),
               DomainError);
  EXPECT_THROW(cmd_dispatch(parse_problem(kFatLine), command("noether")), DomainError);
  EXPECT_THROW(cmd_dispatch(parse_problem("ring x, y; ideal x;"), command("staircase")), InfiniteStaircase);

  const RunResult parse_fail = run("ring x; ideal x +", command("gb"));
  EXPECT_EQ(parse_fail.status, 2);
  const RunResult domain_fail = run("ring x, y; ideal x;", command("noether"));
  EXPECT_EQ(domain_fail.status, 1);
  const RunResult bad_arg = run(kParabola, command("nf", "x +"));
  EXPECT_EQ(bad_arg.status, 2);
}

TEST(Json, ParabolaFirstRecord) {
  const std::string js = emit_json(cmd_dispatch(parse_problem(kParabola), command("noether")));
  EXPECT_NE(js.find("\"operators\":[{\"terms\":[{\"pos\":1,\"alpha\":[0,0],\"coeff\":\"1\"}]},"), std::string::npos);
  const OutputDocument back = parse_json(js);
  EXPECT_EQ(back.main.operators.size(), 4u);
  EXPECT_EQ(back.main.operators[2].terms[0], (OperatorTerm{1, {2, 0}, "1/2"}));
}

TEST(Json, ErrorDocument) {
  const RunResult r = run("ring x, y; ideal x;", command("staircase"));
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(emit_json(r.doc), "{\"error\":\"infinite staircase\"}\n");
  EXPECT_EQ(parse_json(emit_json(r.doc)), r.doc);
}

TEST(Json, RoundTripsEveryCommand) {
  const std::vector<std::pair<const char*, Command>> cases = {
      {kParabola, command("gb")},          {kParabola, command("staircase")},
      {kParabola, command("corners")},     {kParabola, command("nf", "x^5 + y")},
      {kParabola, command("member", "x^4")}, {kParabola, command("noether")},
      {kFatLine, command("noether-posdim")}, {kPde, command("noether")},
      {kPde, command("ep-solution")},
  };
  for (const auto& [text, cmd] : cases) {
    const OutputDocument doc = cmd_dispatch(parse_problem(text), cmd);
    const std::string js = emit_json(doc);
    EXPECT_EQ(parse_json(js), doc) << cmd.echo();
    EXPECT_EQ(emit_json(parse_json(js)), js);
  }
}

TEST(Json, RoundTripsRandomIdeals) {
  std::mt19937 rng(41);
  const auto r = ring_of({"x", "y"});
  const ModuleOrder o;
  for (int i = 0; i < 10; ++i) {
    std::string text = "ring x, y; ideal ";
    const auto gens = random_primary_ideal(rng, r, o, 8);
    for (std::size_t k = 0; k < gens.size(); ++k) text += (k ? ", " : "") + render(gens[k]);
    text += ";";
    const OutputDocument doc = cmd_dispatch(parse_problem(text), command("noether"));
    EXPECT_EQ(parse_json(emit_json(doc)), doc);
  }
}

TEST(Text, Layout) {
  const std::string t = emit_text(cmd_dispatch(parse_problem(kParabola), command("mult")));
  EXPECT_EQ(t, "command: mult\nmultiplicity: 4\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("noether " + example("parabola.noeth")).status, 0);
  EXPECT_EQ(run_cli("noether-posdim " + example("abnormal.noeth")).status, 1);
  EXPECT_EQ(run_cli("staircase " + example("posdim.noeth")).status, 1);
  const std::string bad = ::testing::TempDir() + "bad.noeth";
  std::ofstream(bad) << "ring x, y;\nideal x +\n";
  EXPECT_EQ(run_cli("gb " + bad).status, 2);
  EXPECT_EQ(run_cli("gb /nonexistent/file").status, 2);
}

TEST(Cli, Deterministic) {
  for (const std::string args : {"noether --json " + example("parabola.noeth"),
                                 "ep-solution " + example("pde_system.noeth"),
                                 "noether-posdim --json " + example("posdim.noeth"),
                                 "noether --method backward --check-all " + example("corner.noeth")}) {
    const Captured a = run_cli(args), b = run_cli(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, JsonMatchesLibrary) {
  const Captured c = run_cli("--json noether " + example("parabola.noeth"));
  const OutputDocument doc = cmd_dispatch(parse_problem(read_file(example("parabola.noeth"))), command("noether"));
  EXPECT_EQ(c.out, emit_json(doc));
}
