#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace noeth {

using Exponents = std::vector<int>;

int total_degree(std::span<const int> exps);

/// Module term x^exp * e_pos. Positions are 0-based internally and
/// rendered 1-based. Comparison here is structural only; term orders
/// live in order.hpp.
struct Monomial {
  int pos = 0;
  Exponents exp;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  int degree() const { return total_degree(exp); }
  bool divides(const Monomial& other) const;
  /// Requires divides(other). Result has position 0.
  Exponents quotient_of(const Monomial& other) const;
};

Exponents lcm(std::span<const int> a, std::span<const int> b);
bool coprime(std::span<const int> a, std::span<const int> b);

/// Variable names split into a leading x-block (differential variables)
/// and a trailing t-block (parameters), plus the module rank.
class RingDescriptor {
public:
  RingDescriptor(std::vector<std::string> names, int x_count, int rank = 1);

  const std::vector<std::string>& names() const { return names_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  int x_count() const { return x_count_; }
  int t_count() const { return nvars() - x_count_; }
  int rank() const { return rank_; }

  /// Index of the variable called `name`, or -1.
  int index_of(const std::string& name) const;

  bool same_variables(const RingDescriptor& other) const {
    return names_ == other.names_ && x_count_ == other.x_count_;
  }
  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

  std::shared_ptr<const RingDescriptor> with_rank(int rank) const;
  /// The x-block alone, as a ring with no parameters.
  std::shared_ptr<const RingDescriptor> x_ring() const;
  /// The t-block alone, as a ring whose variables are all "x" (no split).
  std::shared_ptr<const RingDescriptor> t_ring() const;

private:
  std::vector<std::string> names_;
  int x_count_;
  int rank_;
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

RingPtr make_ring(std::vector<std::string> names, int x_count, int rank = 1);

}  // namespace noeth
