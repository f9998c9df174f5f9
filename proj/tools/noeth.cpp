// noeth <command> [flags] <file>

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "noeth/io.hpp"

namespace {

int finish(const noeth::RunResult& r, bool as_json) {
  if (as_json) {
    std::cout << noeth::emit_json(r.doc);
  } else if (r.doc.error) {
    std::cerr << noeth::emit_text(r.doc);
  } else {
    std::cout << noeth::emit_text(r.doc);
  }
  return r.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noetherian operators of primary ideals and modules"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  noeth::Command cmd;
  std::string file, method = "forward";

  auto add = [&](const std::string& name, const std::string& help, bool takes_poly) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", as_json, "emit JSON instead of text");
    if (takes_poly) sub->add_option("poly", cmd.argument, "polynomial or module vector")->required();
    sub->add_option("file", file, "problem file")->required();
    sub->callback([&, name] { cmd.name = name; });
    return sub;
  };
  add("gb", "reduced Groebner basis", false);
  add("nf", "normal form of a polynomial", true);
  add("mult", "multiplicity (number of standard monomials)", false);
  add("staircase", "standard monomials", false);
  add("corners", "corner monomials of the staircase", false);
  add("member", "ideal membership", true);
  CLI::App* noether = add("noether", "Noetherian operators of a zero-dimensional primary ideal", false);
  noether->add_option("--method", method, "forward | backward | linear")
      ->check(CLI::IsMember({"forward", "backward", "linear"}));
  noether->add_flag("--check-all", cmd.check_all, "run all three methods and compare spans");
  CLI::App* posdim = add("noether-posdim", "Noetherian operators over the parameter field", false);
  posdim->add_flag("--fast", cmd.fast, "multiply by t^(mu*gamma) first");
  CLI::App* ep = add("ep-solution", "exponential-polynomial solution of the PDE system", false);
  ep->add_option("--method", method, "forward | backward | linear")
      ->check(CLI::IsMember({"forward", "backward", "linear"}));

  CLI11_PARSE(app, argc, argv);
  cmd.method = noeth::parse_method(method);

  std::ifstream in(file);
  if (!in) {
    noeth::RunResult r;
    r.doc.error = "cannot read " + file;
    r.status = 2;
    return finish(r, as_json);
  }
  std::stringstream text;
  text << in.rdbuf();
  return finish(noeth::run(text.str(), cmd), as_json);
}
