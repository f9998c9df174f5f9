#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "noeth/noetherian_posdim.hpp"
#include "noeth/noetherian_zero.hpp"
#include "noeth/parser.hpp"

namespace noeth {

/// One term of an operator: coeff * d^alpha on component pos (1-based).
/// The coefficient is the one printed in the text form, i.e. already
/// divided by alpha!.
struct OperatorTerm {
  int pos = 1;
  std::vector<int> alpha;
  std::string coeff;
  friend bool operator==(const OperatorTerm&, const OperatorTerm&) = default;
};

struct OperatorRecord {
  std::vector<OperatorTerm> terms;
  friend bool operator==(const OperatorRecord&, const OperatorRecord&) = default;
};

using FieldValue = std::variant<bool, long, std::string, std::vector<std::string>>;

/// Named fields plus an optional operator list; the top level of a
/// document and each component share this shape.
struct Section {
  std::vector<std::pair<std::string, FieldValue>> fields;
  bool has_operators = false;
  std::vector<OperatorRecord> operators;
  std::vector<std::string> operator_text;

  void set(std::string key, FieldValue v) { fields.emplace_back(std::move(key), std::move(v)); }
  const FieldValue* get(const std::string& key) const;
  friend bool operator==(const Section&, const Section&) = default;
};

struct OutputDocument {
  std::string command;
  Section main;
  std::vector<Section> components;
  std::vector<std::string> diagnostics;
  std::optional<std::string> error;  // when set, nothing else is emitted

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

struct Command {
  std::string name;
  std::string argument;  // the polynomial of nf / member
  Method method = Method::Forward;
  bool check_all = false;
  bool fast = false;

  std::string echo() const;
};

OutputDocument cmd_dispatch(const ProblemSpec& spec, const Command& cmd);

/// Parses and dispatches, turning errors into an error document.
/// Status: 0 ok, 1 domain error, 2 parse error.
struct RunResult {
  OutputDocument doc;
  int status = 0;
};
RunResult run(std::string_view problem_text, const Command& cmd);

std::string emit_json(const OutputDocument& doc);
OutputDocument parse_json(const std::string& text);
std::string emit_text(const OutputDocument& doc);

/// Terms in the same order as the text form.
OperatorRecord operator_record(const DiffOp<Rational>& L, const ModuleOrder& order);
OperatorRecord operator_record(const DiffOp<RationalFunction>& L, const ModuleOrder& order);

/// One summand c * K * z^a * e^(<z, p>) of an exponential-polynomial
/// solution, K a free constant.
struct EpTerm {
  std::string constant;
  Rational coeff;
  Exponents power;             // over the dual variables
  std::vector<Rational> point; // exponent of the exponential
};

struct EpFamily {
  std::vector<std::string> variables;
  std::vector<std::vector<EpTerm>> components;  // one list per vector entry
};

/// The family sum_j K_j L_j(e^<z, x>) at x = center for zero-dimensional
/// components; constants A, B, ... in operator order.
EpFamily ep_family(const std::vector<NoetherianBasis>& bases, const std::vector<std::string>& dual_names);

/// Lines `u = ...` (or `u_k = ...` for modules).
std::vector<std::string> render_ep_family(const EpFamily& family);

/// Integral form for operators over Q(t): one line per operator,
/// `Integral (x + s_t*y)*e^(t*s_t) dmu2(s_t)`, indices starting at
/// `first_index`.
std::vector<std::string> render_ep_integrals(const std::vector<RDiffOp>& ops, const ModuleOrder& order,
                                             const std::vector<std::string>& dual_names, int first_index = 1);

}  // namespace noeth
