#include "noeth/order.hpp"

#include "noeth/error.hpp"

namespace noeth {

namespace {

std::strong_ordering lex_compare(std::span<const int> a, std::span<const int> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_simple(OrderKind kind, std::span<const int> a,
                                    std::span<const int> b) {
  switch (kind) {
    case OrderKind::Lex:
      return lex_compare(a, b);
    case OrderKind::DegLex: {
      auto d = total_degree(a) <=> total_degree(b);
      return d != 0 ? d : lex_compare(a, b);
    }
    case OrderKind::DegRevLex: {
      auto d = total_degree(a) <=> total_degree(b);
      if (d != 0) return d;
      // Smaller exponent in the last differing variable wins.
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
    }
    case OrderKind::Product:
      break;
  }
  throw DomainError("nested product orders are not supported");
}

std::string kind_name(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::Product: return "product";
  }
  return "?";
}

TermOrder TermOrder::product(OrderKind inner_x, OrderKind inner_t, int split) {
  if (inner_x == OrderKind::Product || inner_t == OrderKind::Product) {
    throw DomainError("product order blocks must be lex, deglex or degrevlex");
  }
  TermOrder ord(OrderKind::Product);
  ord.inner_x_ = inner_x;
  ord.inner_t_ = inner_t;
  ord.split_ = split;
  return ord;
}

std::strong_ordering TermOrder::compare(std::span<const int> a, std::span<const int> b) const {
  if (kind_ != OrderKind::Product) return compare_simple(kind_, a, b);
  const auto s = static_cast<std::size_t>(split_);
  auto c = compare_simple(inner_x_, a.first(s), b.first(s));
  if (c != 0) return c;
  return compare_simple(inner_t_, a.subspan(s), b.subspan(s));
}

TermOrder TermOrder::x_part() const {
  return kind_ == OrderKind::Product ? TermOrder(inner_x_) : TermOrder(kind_);
}

void TermOrder::check_ring(const RingDescriptor& ring) const {
  if (kind_ != OrderKind::Product) return;
  if (ring.t_count() == 0) throw DomainError("product order requires a parameter block");
  if (split_ != ring.x_count()) throw DomainError("product order split does not match the ring");
}

std::string TermOrder::name() const {
  if (kind_ != OrderKind::Product) return kind_name(kind_);
  return "product(" + kind_name(inner_x_) + "," + kind_name(inner_t_) + ")";
}

std::strong_ordering ModuleOrder::compare(const Monomial& a, const Monomial& b) const {
  // e_1 > e_2 > ...: a smaller index is the larger term.
  auto by_pos = b.pos <=> a.pos;
  if (precedence_ == Precedence::PositionOverTerm) {
    if (by_pos != 0) return by_pos;
    return base_.compare(a.exp, b.exp);
  }
  auto c = base_.compare(a.exp, b.exp);
  return c != 0 ? c : by_pos;
}

bool is_elimination_for(const TermOrder& ord, const RingDescriptor& ring) {
  if (ring.t_count() == 0) return true;
  switch (ord.kind()) {
    case OrderKind::Product:
      return ord.split() == ring.x_count();
    case OrderKind::Lex:
      // The x-block is always the initial segment of the ring.
      return true;
    default:
      return false;
  }
}

}  // namespace noeth
