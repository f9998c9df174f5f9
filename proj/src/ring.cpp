#include "noeth/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "noeth/error.hpp"
#include "noeth/rational.hpp"

namespace noeth {

int total_degree(std::span<const int> exps) {
  return std::accumulate(exps.begin(), exps.end(), 0);
}

bool Monomial::divides(const Monomial& other) const {
  if (pos != other.pos || exp.size() != other.exp.size()) return false;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Exponents Monomial::quotient_of(const Monomial& other) const {
  Exponents q(exp.size());
  for (std::size_t i = 0; i < exp.size(); ++i) q[i] = other.exp[i] - exp[i];
  return q;
}

Exponents lcm(std::span<const int> a, std::span<const int> b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(std::span<const int> a, std::span<const int> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

RingDescriptor::RingDescriptor(std::vector<std::string> names, int x_count, int rank)
    : names_(std::move(names)), x_count_(x_count), rank_(rank) {
  if (x_count_ < 0 || x_count_ > nvars()) throw DomainError("x-block larger than the ring");
  if (rank_ < 1) throw DomainError("module rank must be at least 1");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw DomainError("variable names must be distinct");
}

int RingDescriptor::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

RingPtr RingDescriptor::with_rank(int rank) const {
  return std::make_shared<const RingDescriptor>(names_, x_count_, rank);
}

RingPtr RingDescriptor::x_ring() const {
  std::vector<std::string> xs(names_.begin(), names_.begin() + x_count_);
  return std::make_shared<const RingDescriptor>(xs, x_count_, rank_);
}

RingPtr RingDescriptor::t_ring() const {
  std::vector<std::string> ts(names_.begin() + x_count_, names_.end());
  const int n = static_cast<int>(ts.size());
  return std::make_shared<const RingDescriptor>(ts, n, 1);
}

RingPtr make_ring(std::vector<std::string> names, int x_count, int rank) {
  return std::make_shared<const RingDescriptor>(std::move(names), x_count, rank);
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace noeth
