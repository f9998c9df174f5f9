#include "noeth/render.hpp"

#include <algorithm>

namespace noeth {

std::string render_power_product(const Exponents& exp, const std::vector<std::string>& names,
                                 const char* separator) {
  std::string out;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] == 0) continue;
    if (!out.empty()) out += separator;
    out += names[i];
    if (exp[i] > 1) out += "^" + std::to_string(exp[i]);
  }
  return out;
}

namespace {

std::string render_scalar_terms(const std::vector<const Term<Rational>*>& terms,
                                const std::vector<std::string>& names) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto* t : terms) {
    std::string mono = render_power_product(t->mono.exp, names);
    std::string piece;
    if (mono.empty()) {
      piece = t->coeff.get_str();
    } else if (t->coeff == 1) {
      piece = mono;
    } else if (t->coeff == -1) {
      piece = "-" + mono;
    } else {
      piece = t->coeff.get_str() + "*" + mono;
    }
    if (out.empty()) {
      out = piece;
    } else if (piece.front() == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

}  // namespace

std::string render(const Poly& f) {
  const auto& names = f.ring().names();
  if (f.ring().rank() == 1) {
    std::vector<const Term<Rational>*> all;
    for (const auto& t : f.terms()) all.push_back(&t);
    return render_scalar_terms(all, names);
  }
  std::string out = "[";
  for (int k = 0; k < f.ring().rank(); ++k) {
    std::vector<const Term<Rational>*> at;
    for (const auto& t : f.terms()) {
      if (t.mono.pos == k) at.push_back(&t);
    }
    if (k > 0) out += ", ";
    out += render_scalar_terms(at, names);
  }
  return out + "]";
}

std::string render(const RationalFunction& c) {
  if (c.is_zero()) return "0";
  if (c.den().is_constant()) return render(c.num());
  return "(" + render(c.num()) + ")/(" + render(c.den()) + ")";
}

std::string render(const Rational& c) { return c.get_str(); }

namespace {

bool compound(const std::string& s) {
  return s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos || s.find(")/(") != std::string::npos;
}

template <class C>
std::string render_op(const DiffOp<C>& L, const ModuleOrder& order) {
  const ModuleOrder ko = key_order(order);
  std::vector<std::string> dnames;
  for (int i = 0; i < L.ring->x_count(); ++i) dnames.push_back("d" + L.ring->names()[static_cast<std::size_t>(i)]);
  auto component = [&](int k) {
    std::vector<std::pair<Monomial, C>> terms;
    for (const auto& [key, c] : L.terms) {
      if (key.pos == k) terms.emplace_back(key, c);
    }
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return ko.compare(a.first, b.first) > 0; });
    if (terms.empty()) return std::string("0");
    std::string out;
    for (const auto& [key, c] : terms) {
      Rational fact = 1;
      for (int e : key.exp) fact *= factorial(e);
      std::string coeff = render(C(c * Rational(1 / fact)));
      const std::string d = render_power_product(key.exp, dnames, " ");
      if (compound(coeff)) coeff = "(" + coeff + ")";
      std::string piece;
      if (d.empty()) {
        piece = coeff;
      } else if (coeff == "1") {
        piece = d;
      } else if (coeff == "-1") {
        piece = "-" + d;
      } else {
        piece = coeff + " " + d;
      }
      if (out.empty()) {
        out = piece;
      } else if (piece.front() == '-') {
        out += " - " + piece.substr(1);
      } else {
        out += " + " + piece;
      }
    }
    return out;
  };
  if (L.ring->rank() == 1) return component(0);
  std::string out = "(";
  for (int k = 0; k < L.ring->rank(); ++k) {
    if (k > 0) out += ", ";
    out += component(k);
  }
  return out + ")";
}

}  // namespace

std::string render(const DiffOp<Rational>& L, const ModuleOrder& order) { return render_op(L, order); }

std::string render(const DiffOp<RationalFunction>& L, const ModuleOrder& order) { return render_op(L, order); }

}  // namespace noeth
