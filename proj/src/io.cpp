#include "noeth/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "noeth/render.hpp"

namespace noeth {

using json = nlohmann::ordered_json;

const FieldValue* Section::get(const std::string& key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string Command::echo() const {
  std::string out = name;
  if (!argument.empty()) out += " " + argument;
  if (name == "noether") out += " --method " + method_name(method);
  if (check_all) out += " --check-all";
  if (fast) out += " --fast";
  return out;
}

namespace {

std::vector<std::string> render_all(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(render(p));
  return out;
}

std::vector<std::string> render_monomials(const std::vector<Monomial>& ms, const RingPtr& ring,
                                          const ModuleOrder& order) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(render(Poly::monomial(ring, order, m, Rational(1))));
  return out;
}

std::vector<std::string> render_point(const std::vector<Rational>& p) {
  std::vector<std::string> out;
  for (const auto& c : p) out.push_back(c.get_str());
  return out;
}

Rational alpha_factorial(const Exponents& a) {
  Rational f = 1;
  for (int e : a) f *= factorial(e);
  return f;
}

template <class C>
std::vector<std::pair<Monomial, C>> sorted_terms(const DiffOp<C>& L, const ModuleOrder& order) {
  const ModuleOrder ko = key_order(order);
  std::vector<std::pair<Monomial, C>> terms(L.terms.begin(), L.terms.end());
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    if (a.first.pos != b.first.pos) return a.first.pos < b.first.pos;
    return ko.compare(a.first, b.first) > 0;
  });
  return terms;
}

template <class C>
OperatorRecord record_of(const DiffOp<C>& L, const ModuleOrder& order) {
  OperatorRecord r;
  for (const auto& [key, c] : sorted_terms(L, order)) {
    const Rational inv = 1 / alpha_factorial(key.exp);
    r.terms.push_back(OperatorTerm{key.pos + 1, key.exp, render(C(c * inv))});
  }
  return r;
}

template <class C>
void put_operators(Section& s, const std::vector<DiffOp<C>>& ops, const ModuleOrder& order) {
  s.has_operators = true;
  for (const auto& L : ops) {
    s.operators.push_back(record_of(L, order));
    s.operator_text.push_back(render(L, order));
  }
}

// Sum of signed pieces: "a - b + c".
std::string join_signed(const std::vector<std::string>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (const auto& p : pieces) {
    if (out.empty()) {
      out = p;
    } else if (p.front() == '-') {
      out += " - " + p.substr(1);
    } else {
      out += " + " + p;
    }
  }
  return out;
}

bool compound(const std::string& s) {
  return s.find(' ') != std::string::npos;
}

std::string exponential(const std::string& exponent) {
  if (exponent == "0") return "";
  const bool plain = std::all_of(exponent.begin(), exponent.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
  return plain ? "e^" + exponent : "e^(" + exponent + ")";
}

std::string constant_name(int i) {
  std::string s(1, static_cast<char>('A' + i % 26));
  if (i >= 26) s += std::to_string(i / 26);
  return s;
}

struct Target {
  std::vector<Poly> gens;
  std::vector<Rational> center;
};

std::vector<Target> targets(const ProblemSpec& spec) {
  std::vector<Target> out;
  if (!spec.components.empty()) {
    for (const auto& c : spec.components) out.push_back({c.generators, c.center});
  } else {
    out.push_back({spec.generators, spec.center});
  }
  return out;
}

// Center over the x-block; parameters must sit at zero.
std::vector<Rational> x_center(const RingPtr& ring, const std::vector<Rational>& center) {
  if (center.empty()) return std::vector<Rational>(static_cast<std::size_t>(ring->x_count()), Rational(0));
  std::vector<Rational> out(center.begin(), center.begin() + ring->x_count());
  for (std::size_t i = out.size(); i < center.size(); ++i) {
    if (center[i] != 0) throw DomainError("center must be 0 in the parameter variables");
  }
  return out;
}

bool is_origin(const std::vector<Rational>& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; });
}

void fill_noether(Section& s, const Target& tg, const ProblemSpec& spec, const Command& cmd,
                  std::vector<std::string>& diagnostics) {
  const ModuleOrder order = spec.module_order();
  const auto center = x_center(spec.ring, tg.center);
  NoetherianBasis B = noetherian_basis(tg.gens, order, center, cmd.method);
  s.set("center", render_point(center));
  s.set("groebner_basis", render_all(buchberger(tg.gens, order).elements));
  s.set("multiplicity", static_cast<long>(B.multiplicity));
  s.set("staircase", render_monomials(staircase(B.source).residual_monomials, spec.ring, order));
  s.set("method", method_name(B.method));
  if (cmd.check_all) {
    bool agree = true;
    for (Method m : {Method::Forward, Method::Backward, Method::Linear}) {
      if (m == B.method) continue;
      const NoetherianBasis other = noetherian_basis(tg.gens, order, center, m);
      if (!same_span(B.operators, other.operators)) {
        agree = false;
        diagnostics.push_back(method_name(m) + " and " + method_name(B.method) + " span different spaces");
      }
    }
    s.set("spans_agree", agree);
    if (!agree) throw DomainError("methods disagree");
  }
  put_operators(s, B.operators, order);
}

void fill_posdim(Section& s, const Target& tg, const ProblemSpec& spec, const Command& cmd) {
  const ModuleOrder order = spec.module_order();
  if (!is_origin(tg.center)) throw DomainError("noether-posdim needs the variety at the origin");
  const PositiveBasis P =
      noetherian_positive(tg.gens, order, cmd.fast ? Schedule::FastPath : Schedule::Incremental);
  std::vector<std::string> tnames(spec.ring->names().begin() + spec.ring->x_count(), spec.ring->names().end());
  const std::string gamma = render_power_product(P.gamma, tnames);
  s.set("groebner_basis", render_all(P.source.elements));
  s.set("multiplicity", static_cast<long>(P.multiplicity));
  s.set("gamma", gamma.empty() ? std::string("1") : gamma);
  s.set("schedule", std::string(cmd.fast ? "fast" : "incremental"));
  s.set("rounds", static_cast<long>(P.rounds));
  std::vector<std::string> raw;
  for (const auto& L : P.operators) raw.push_back(render(L, order));
  s.set("raw_operators", raw);
  put_operators(s, cleanup_operators(P.operators), order);
}

void fill(Section& s, const Target& tg, const ProblemSpec& spec, const Command& cmd,
          std::vector<std::string>& diagnostics) {
  const ModuleOrder order = spec.module_order();
  const std::string& c = cmd.name;
  if (!spec.components.empty() && c != "noether") s.set("center", render_point(x_center(spec.ring, tg.center)));
  if (c == "gb") {
    s.set("groebner_basis", render_all(buchberger(tg.gens, order).elements));
  } else if (c == "mult" || c == "staircase" || c == "corners") {
    const auto G = buchberger(tg.gens, order);
    const Staircase S = staircase(G);
    s.set("multiplicity", static_cast<long>(S.multiplicity()));
    if (c != "mult") s.set("staircase", render_monomials(S.residual_monomials, spec.ring, order));
    if (c == "corners") s.set("corners", render_monomials(corner_monomials(S, G), spec.ring, order));
  } else if (c == "nf") {
    const Poly f = parse_polynomial(cmd.argument, spec.ring, order);
    s.set("input", render(f));
    s.set("normal_form", render(normal_form(f, buchberger(tg.gens, order))));
  } else if (c == "member") {
    const Poly f = parse_polynomial(cmd.argument, spec.ring, order);
    s.set("input", render(f));
    if (spec.ring->t_count() > 0) {
      const auto ops = cleanup_operators(noetherian_positive(tg.gens, order).operators);
      s.set("member", member_positive(f, ops));
      s.set("test", std::string("operators"));
    } else {
      s.set("member", is_member(f, buchberger(tg.gens, order)));
      s.set("test", std::string("normal form"));
    }
  } else if (c == "noether") {
    fill_noether(s, tg, spec, cmd, diagnostics);
  } else if (c == "noether-posdim") {
    fill_posdim(s, tg, spec, cmd);
  } else {
    throw DomainError("unknown command '" + c + "'");
  }
}

void fill_ep(OutputDocument& doc, const ProblemSpec& spec, const Command& cmd) {
  if (spec.components.empty()) throw DomainError("ep-solution needs a primary decomposition (component clauses)");
  const ModuleOrder order = spec.module_order();
  const RingPtr& ring = spec.ring;
  std::vector<std::string> xd(spec.dual_names.begin(), spec.dual_names.begin() + ring->x_count());
  std::vector<std::string> lines;
  if (ring->t_count() == 0) {
    std::vector<NoetherianBasis> bases;
    for (const auto& c : spec.components) {
      bases.push_back(noetherian_basis(c.generators, order, x_center(ring, c.center), cmd.method));
      Section s;
      s.set("center", render_point(bases.back().center));
      s.set("multiplicity", static_cast<long>(bases.back().multiplicity));
      put_operators(s, bases.back().operators, order);
      doc.components.push_back(std::move(s));
    }
    lines = render_ep_family(ep_family(bases, xd));
  } else {
    std::vector<std::string> integrals;
    int index = 1;
    for (const auto& c : spec.components) {
      if (!is_origin(c.center)) throw DomainError("positive-dimensional components must sit at the origin");
      const auto ops = cleanup_operators(noetherian_positive(c.generators, order).operators);
      Section s;
      s.set("multiplicity", static_cast<long>(ops.size()));
      put_operators(s, ops, order);
      doc.components.push_back(std::move(s));
      for (auto& line : render_ep_integrals(ops, order, spec.dual_names, index)) integrals.push_back(std::move(line));
      index += static_cast<int>(ops.size());
    }
    std::string sum;
    for (const auto& i : integrals) sum += (sum.empty() ? "" : " + ") + i;
    lines.push_back("u = " + sum);
  }
  doc.main.set("variables", std::vector<std::string>(spec.dual_names));
  doc.main.set("solution", lines);
}

}  // namespace

OperatorRecord operator_record(const DiffOp<Rational>& L, const ModuleOrder& order) { return record_of(L, order); }
OperatorRecord operator_record(const DiffOp<RationalFunction>& L, const ModuleOrder& order) {
  return record_of(L, order);
}

OutputDocument cmd_dispatch(const ProblemSpec& spec, const Command& cmd) {
  OutputDocument doc;
  doc.command = cmd.echo();
  if (cmd.name == "ep-solution") {
    fill_ep(doc, spec, cmd);
    return doc;
  }
  if ((cmd.name == "nf" || cmd.name == "member") && cmd.argument.empty()) {
    throw DomainError(cmd.name + " needs a polynomial argument");
  }
  const auto tgs = targets(spec);
  if (spec.components.empty()) {
    fill(doc.main, tgs.front(), spec, cmd, doc.diagnostics);
  } else {
    for (const auto& tg : tgs) {
      Section s;
      fill(s, tg, spec, cmd, doc.diagnostics);
      doc.components.push_back(std::move(s));
    }
  }
  return doc;
}

RunResult run(std::string_view problem_text, const Command& cmd) {
  RunResult r;
  try {
    r.doc = cmd_dispatch(parse_problem(problem_text), cmd);
  } catch (const ParseError& e) {
    r.doc = OutputDocument{};
    r.doc.error = e.what();
    r.status = 2;
  } catch (const std::exception& e) {
    r.doc = OutputDocument{};
    r.doc.error = e.what();
    r.status = 1;
  }
  return r;
}

// --- JSON -----------------------------------------------------------------

namespace {

json section_json(const Section& s) {
  json j = json::object();
  for (const auto& [k, v] : s.fields) {
    std::visit([&, key = k](const auto& x) { j[key] = x; }, v);
  }
  if (s.has_operators) {
    json ops = json::array();
    for (const auto& r : s.operators) {
      json terms = json::array();
      for (const auto& t : r.terms) terms.push_back(json{{"pos", t.pos}, {"alpha", t.alpha}, {"coeff", t.coeff}});
      ops.push_back(json{{"terms", terms}});
    }
    j["operators"] = ops;
    j["operator_text"] = s.operator_text;
  }
  return j;
}

void read_field(Section& s, const std::string& key, const json& v) {
  if (key == "operators") {
    s.has_operators = true;
    for (const auto& r : v) {
      OperatorRecord rec;
      for (const auto& t : r.at("terms")) {
        rec.terms.push_back(OperatorTerm{t.at("pos").get<int>(), t.at("alpha").get<std::vector<int>>(),
                                         t.at("coeff").get<std::string>()});
      }
      s.operators.push_back(std::move(rec));
    }
  } else if (key == "operator_text") {
    s.operator_text = v.get<std::vector<std::string>>();
  } else if (v.is_boolean()) {
    s.set(key, v.get<bool>());
  } else if (v.is_number_integer()) {
    s.set(key, v.get<long>());
  } else if (v.is_string()) {
    s.set(key, v.get<std::string>());
  } else if (v.is_array()) {
    s.set(key, v.get<std::vector<std::string>>());
  } else {
    throw DomainError("unexpected JSON value for '" + key + "'");
  }
}

}  // namespace

std::string emit_json(const OutputDocument& doc) {
  if (doc.error) return json{{"error", *doc.error}}.dump() + "\n";
  json j = json::object();
  j["command"] = doc.command;
  const json main = section_json(doc.main);
  for (const auto& [k, v] : main.items()) j[k] = v;
  if (!doc.components.empty()) {
    json comps = json::array();
    for (const auto& s : doc.components) comps.push_back(section_json(s));
    j["components"] = comps;
  }
  j["diagnostics"] = doc.diagnostics;
  return j.dump() + "\n";
}

OutputDocument parse_json(const std::string& text) {
  const json j = json::parse(text);
  OutputDocument doc;
  if (j.contains("error")) {
    doc.error = j.at("error").get<std::string>();
    return doc;
  }
  for (const auto& [k, v] : j.items()) {
    if (k == "command") {
      doc.command = v.get<std::string>();
    } else if (k == "diagnostics") {
      doc.diagnostics = v.get<std::vector<std::string>>();
    } else if (k == "components") {
      for (const auto& c : v) {
        Section s;
        for (const auto& [ck, cv] : c.items()) read_field(s, ck, cv);
        doc.components.push_back(std::move(s));
      }
    } else {
      read_field(doc.main, k, v);
    }
  }
  return doc;
}

// --- text -----------------------------------------------------------------

namespace {

void section_text(std::ostream& os, const Section& s, const std::string& indent) {
  for (const auto& [k, v] : s.fields) {
    if (const auto* list = std::get_if<std::vector<std::string>>(&v)) {
      if (list->empty()) {
        os << indent << k << ": (none)\n";
        continue;
      }
      os << indent << k << ":\n";
      for (const auto& item : *list) os << indent << "  " << item << "\n";
    } else if (const auto* b = std::get_if<bool>(&v)) {
      os << indent << k << ": " << (*b ? "true" : "false") << "\n";
    } else if (const auto* n = std::get_if<long>(&v)) {
      os << indent << k << ": " << *n << "\n";
    } else {
      os << indent << k << ": " << std::get<std::string>(v) << "\n";
    }
  }
  if (s.has_operators) {
    os << indent << "operators:\n";
    for (const auto& t : s.operator_text) os << indent << "  " << t << "\n";
  }
}

}  // namespace

std::string emit_text(const OutputDocument& doc) {
  if (doc.error) return "error: " + *doc.error + "\n";
  std::ostringstream os;
  os << "command: " << doc.command << "\n";
  section_text(os, doc.main, "");
  for (std::size_t i = 0; i < doc.components.size(); ++i) {
    os << "component " << i + 1 << ":\n";
    section_text(os, doc.components[i], "  ");
  }
  for (const auto& d : doc.diagnostics) os << "note: " << d << "\n";
  return os.str();
}

// --- Ehrenpreis-Palamodov output --------------------------------------------

EpFamily ep_family(const std::vector<NoetherianBasis>& bases, const std::vector<std::string>& dual_names) {
  EpFamily fam;
  fam.variables = dual_names;
  int next = 0;
  for (const auto& B : bases) {
    for (const auto& L : B.operators) {
      const std::string K = constant_name(next++);
      if (fam.components.size() < static_cast<std::size_t>(L.ring->rank())) {
        fam.components.resize(static_cast<std::size_t>(L.ring->rank()));
      }
      for (const auto& [key, c] : sorted_terms(L, B.source.order)) {
        fam.components[static_cast<std::size_t>(key.pos)].push_back(
            EpTerm{K, c / alpha_factorial(key.exp), key.exp, B.center});
      }
    }
  }
  return fam;
}

std::vector<std::string> render_ep_family(const EpFamily& family) {
  const RingPtr dual = make_ring(family.variables, static_cast<int>(family.variables.size()));
  const ModuleOrder order{TermOrder::deglex()};
  std::vector<std::string> lines;
  for (std::size_t k = 0; k < family.components.size(); ++k) {
    std::vector<std::string> pieces;
    for (const auto& t : family.components[k]) {
      std::vector<Term<Rational>> lin;
      for (std::size_t i = 0; i < t.point.size(); ++i) {
        Exponents e(family.variables.size(), 0);
        e[i] = 1;
        lin.push_back({Monomial{0, e}, t.point[i]});
      }
      const std::string ex = exponential(render(Poly::from_terms(dual, order, std::move(lin))));
      std::vector<std::string> factors;
      const Rational a = abs(t.coeff);
      if (a != 1) factors.push_back(a.get_str());
      factors.push_back(t.constant);
      const std::string zp = render_power_product(t.power, family.variables);
      if (!zp.empty()) factors.push_back(zp);
      if (!ex.empty()) factors.push_back(ex);
      std::string piece = sgn(t.coeff) < 0 ? "-" : "";
      for (std::size_t i = 0; i < factors.size(); ++i) piece += (i ? "*" : "") + factors[i];
      pieces.push_back(piece);
    }
    const std::string lhs = family.components.size() == 1 ? "u" : "u_" + std::to_string(k + 1);
    lines.push_back(lhs + " = " + join_signed(pieces));
  }
  return lines;
}

std::vector<std::string> render_ep_integrals(const std::vector<RDiffOp>& ops, const ModuleOrder& op_order,
                                             const std::vector<std::string>& dual_names, int first_index) {
  std::vector<std::string> out;
  if (ops.empty()) return out;
  const RingPtr& ring = ops.front().ring;
  const int nx = ring->x_count();
  const auto& names = ring->names();
  std::vector<std::string> params, tdual;
  for (std::size_t i = static_cast<std::size_t>(nx); i < names.size(); ++i) {
    params.push_back("s_" + names[i]);
    tdual.push_back(dual_names[i]);
  }
  const RingPtr sring = make_ring(params, static_cast<int>(params.size()));
  std::vector<std::string> xdual(dual_names.begin(), dual_names.begin() + nx);

  std::string ex;
  {
    std::vector<std::string> pieces;
    for (std::size_t i = 0; i < params.size(); ++i) pieces.push_back(tdual[i] + "*" + params[i]);
    ex = exponential(join_signed(pieces));
  }
  std::string measure_args;
  for (std::size_t i = 0; i < params.size(); ++i) measure_args += (i ? ", " : "") + params[i];

  const ModuleOrder order(TermOrder::deglex());
  for (std::size_t j = 0; j < ops.size(); ++j) {
    const RDiffOp& L = ops[j];
    std::vector<std::string> comps;
    for (int k = 0; k < ring->rank(); ++k) {
      std::vector<std::string> pieces;
      for (const auto& [key, c] : sorted_terms(L, op_order)) {
        if (key.pos != k) continue;
        if (!c.den().is_constant()) throw DomainError("operator coefficients must be polynomial in the parameters");
        const Rational scale = 1 / (c.den().terms().front().coeff * alpha_factorial(key.exp));
        std::vector<Term<Rational>> cs;
        for (const auto& t : c.num().terms()) cs.push_back({Monomial{0, t.mono.exp}, t.coeff * scale});
        std::string coeff = render(Poly::from_terms(sring, order, std::move(cs)));
        const std::string zp = render_power_product(key.exp, xdual);
        if (zp.empty()) {
          pieces.push_back(coeff);
          continue;
        }
        if (coeff == "1") {
          pieces.push_back(zp);
        } else if (coeff == "-1") {
          pieces.push_back("-" + zp);
        } else {
          pieces.push_back((compound(coeff) ? "(" + coeff + ")" : coeff) + "*" + zp);
        }
      }
      comps.push_back(join_signed(pieces));
    }
    std::string integrand;
    if (comps.size() == 1) {
      integrand = comps.front() == "1" ? "" : compound(comps.front()) ? "(" + comps.front() + ")" : comps.front();
    } else {
      integrand = "(";
      for (std::size_t k = 0; k < comps.size(); ++k) integrand += (k ? ", " : "") + comps[k];
      integrand += ")";
    }
    std::string body = integrand;
    if (!ex.empty()) body += (body.empty() ? "" : "*") + ex;
    if (body.empty()) body = "1";
    out.push_back("Integral " + body + " dmu" + std::to_string(first_index + static_cast<int>(j)) + "(" +
                  measure_args + ")");
  }
  return out;
}

}  // namespace noeth
