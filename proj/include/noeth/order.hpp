#pragma once

#include <compare>
#include <span>
#include <string>

#include "noeth/ring.hpp"

namespace noeth {

enum class OrderKind { Lex, DegLex, DegRevLex, Product };

/// Term ordering on exponent vectors. All orders assume variables are
/// ranked in ring order (first variable largest).
class TermOrder {
public:
  static TermOrder lex() { return TermOrder(OrderKind::Lex); }
  static TermOrder deglex() { return TermOrder(OrderKind::DegLex); }
  static TermOrder degrevlex() { return TermOrder(OrderKind::DegRevLex); }
  /// Block order: compare the first `split` exponents with `inner_x`,
  /// break ties on the rest with `inner_t`.
  static TermOrder product(OrderKind inner_x, OrderKind inner_t, int split);

  OrderKind kind() const { return kind_; }
  OrderKind inner_x() const { return inner_x_; }
  OrderKind inner_t() const { return inner_t_; }
  int split() const { return split_; }

  std::strong_ordering compare(std::span<const int> a, std::span<const int> b) const;

  /// The order the x-block inherits when t-variables become coefficients.
  TermOrder x_part() const;

  /// Throws DomainError when the order does not fit the ring (product
  /// orders need a matching non-empty t-block).
  void check_ring(const RingDescriptor& ring) const;

  std::string name() const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
  explicit TermOrder(OrderKind kind) : kind_(kind) {}

  OrderKind kind_;
  OrderKind inner_x_ = OrderKind::Lex;
  OrderKind inner_t_ = OrderKind::Lex;
  int split_ = 0;
};

std::strong_ordering compare_simple(OrderKind kind, std::span<const int> a, std::span<const int> b);
std::string kind_name(OrderKind kind);

enum class Precedence { TermOverPosition, PositionOverTerm };

/// Order on module terms. Lower position index ranks higher (e_1 > e_2).
class ModuleOrder {
public:
  ModuleOrder(TermOrder base = TermOrder::deglex(),
              Precedence precedence = Precedence::TermOverPosition)
      : base_(base), precedence_(precedence) {}

  const TermOrder& base() const { return base_; }
  Precedence precedence() const { return precedence_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const ModuleOrder&, const ModuleOrder&) = default;

private:
  TermOrder base_;
  Precedence precedence_;
};

/// True when the order provably has the elimination property for the
/// x-block: LT(f) free of x implies f free of x.
bool is_elimination_for(const TermOrder& ord, const RingDescriptor& ring);

}  // namespace noeth
