#include <gtest/gtest.h>

#include "noeth/noetherian_zero.hpp"
#include "noeth/render.hpp"
#include "test_util.hpp"

using namespace noeth;
using namespace noeth::testing;

namespace {

const ModuleOrder kDegLex{TermOrder::deglex()};
const ModuleOrder kLexPos{TermOrder::lex(), Precedence::TermOverPosition};

std::vector<std::string> texts(const std::vector<DiffOp<Rational>>& ops, const ModuleOrder& order) {
  std::vector<std::string> out;
  for (const auto& L : ops) out.push_back(render(L, order));
  return out;
}

struct Fixture {
  RingPtr ring;
  ModuleOrder order;
  std::vector<Poly> gens;
  std::vector<Rational> center;
};

Fixture parabola() {
  auto r = ring_of({"x", "y"});
  return {r, kDegLex, polys(r, kDegLex, {"y^2", "x^2 - y"}), {}};
}

Fixture corner_ideal() {
  auto r = ring_of({"x", "y", "z"});
  return {r, kDegLex, polys(r, kDegLex, {"x^2 - z", "y^2 - z", "z^2"}), {}};
}

Fixture module_m1() {
  auto r = ring_of({"x", "y"}, {}, 2);
  return {r, kLexPos, polys(r, kLexPos, {"[x, 1]", "[y, x]", "[0, y]"}), {}};
}

Fixture module_m2() {
  auto r = ring_of({"x", "y"}, {}, 2);
  return {r, kLexPos, polys(r, kLexPos, {"[x - 1, 1]", "[y, 0]", "[y, x - 1]"}), point({1, 0})};
}

std::vector<Fixture> zero_dim_fixtures() {
  std::vector<Fixture> out{parabola(), corner_ideal(), module_m1(), module_m2()};
  std::mt19937 rng(2024);
  auto r2 = ring_of({"x", "y"});
  auto r3 = ring_of({"x", "y", "z"});
  for (int i = 0; i < 3; ++i) out.push_back({r2, kDegLex, random_primary_ideal(rng, r2, kDegLex, 12), {}});
  for (int i = 0; i < 3; ++i) out.push_back({r3, kDegLex, random_primary_ideal(rng, r3, kDegLex, 12), {}});
  ModuleOrder drl(TermOrder::degrevlex());
  out.push_back({r3, drl, random_primary_ideal(rng, r3, drl, 12), {}});
  ModuleOrder lex(TermOrder::lex());
  out.push_back({r2, lex, random_primary_ideal(rng, r2, lex, 12), {}});
  // the parabola moved to (1, -2)
  auto moved = translate_to_origin(parabola().gens, point({-1, 2}));
  out.push_back({r2, kDegLex, moved, point({1, -2})});
  return out;
}

}  // namespace

TEST(Sigma, Examples) {
  auto r = ring_of({"x", "y"});
  // d_xy + 1/6 d_x^3 in the D-basis is D(1,1) + D(3,0)
  auto L2 = op(r, {{0, {1, 1}, 1}, {0, {3, 0}, 1}});
  EXPECT_EQ(sigma(L2, 0), op(r, {{0, {0, 1}, 1}, {0, {2, 0}, 1}}));
  EXPECT_TRUE(sigma(op(r, {{0, {0, 4}, 1}}), 0).is_zero());
  EXPECT_EQ(sigma(sigma(op(r, {{0, {1, 1}, 1}}), 0), 1), op(r, {{0, {0, 0}, 1}}));
}

TEST(Rho, Examples) {
  auto r = ring_of({"x", "y"});
  EXPECT_EQ(rho(op(r, {{0, {0, 1}, 1}, {0, {2, 0}, 1}}), 0), op(r, {{0, {1, 1}, 1}, {0, {3, 0}, 1}}));
  EXPECT_EQ(rho(op(r, {{0, {0, 0}, 1}}), 1), op(r, {{0, {0, 1}, 1}}));
}

TEST(Rho, SigmaUndoesRho) {
  std::mt19937 rng(5);
  auto r = ring_of({"x", "y", "z"}, {}, 2);
  for (int i = 0; i < 100; ++i) {
    DiffOp<Rational> L = dual_of_polynomial(random_poly(rng, r, kDegLex, 4, 5));
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(sigma(rho(L, j), j), L);
      bool all_have_j = true;
      for (const auto& [k, c] : L.terms) all_have_j = all_have_j && k.exp[static_cast<std::size_t>(j)] > 0;
      if (all_have_j) EXPECT_EQ(rho(sigma(L, j), j), L);
    }
  }
}

TEST(ApplyAt, Examples) {
  auto r = ring_of({"x", "y"});
  auto P = [&](const char* s) { return parse_polynomial(s, r, kDegLex); };
  auto dx = op(r, {{0, {1, 0}, 1}});
  EXPECT_EQ(apply_at(dx, P("x^2 - y")), 0);
  EXPECT_EQ(apply_at(dx, P("y^2")), 0);
  auto L = op(r, {{0, {0, 1}, 1}, {0, {2, 0}, 1}});
  EXPECT_EQ(apply_at(L, P("x^2 - y")), 0);
  EXPECT_EQ(apply_at(L, P("x^2")), 1);
  EXPECT_EQ(apply_at(L, P("-y")), -1);
  auto one = op(r, {{0, {0, 0}, 1}}, point({2, -1}));
  EXPECT_EQ(apply_at(one, P("x^2*y + 3")), evaluate(P("x^2*y + 3"), point({2, -1}))[0]);
  EXPECT_EQ(apply_at(L, P("0")), 0);
}

TEST(ApplyAt, MatchesDerivativeAtCenter) {
  // D(a) f at p is the coefficient of (x - p)^a; check against the
  // explicit derivative of a monomial.
  auto r = ring_of({"x", "y"});
  auto f = parse_polynomial("x^3*y^2", r, kDegLex);
  auto L = op(r, {{0, {2, 1}, 1}}, point({2, 3}));
  // (1/2!)(1/1!) d^2/dx^2 d/dy x^3 y^2 = 3x * 2y, at (2, 3): 36
  EXPECT_EQ(apply_at(L, f), 36);
}

TEST(DualOfPolynomial, Examples) {
  auto r = ring_of({"x", "y", "z"});
  auto g = parse_polynomial("x^3*y + x*y^3 + x*y*z", r, kDegLex);
  auto L = dual_of_polynomial(g);
  EXPECT_EQ(render(L, kDegLex), "1/6 dx^3 dy + 1/6 dx dy^3 + dx dy dz");
  EXPECT_EQ(dual_of_polynomial(parse_polynomial("1", r, kDegLex)), op(r, {{0, {0, 0, 0}, 1}}));
  EXPECT_EQ(render(dual_of_polynomial(parse_polynomial("x^2", r, kDegLex)), kDegLex), "1/2 dx^2");
  EXPECT_TRUE(dual_of_polynomial(parse_polynomial("0", r, kDegLex)).is_zero());
}

TEST(Forward, Parabola) {
  auto F = parabola();
  auto B = noetherian_forward(buchberger(F.gens, F.order));
  EXPECT_EQ(B.multiplicity, 4);
  EXPECT_EQ(texts(B.operators, F.order),
            (std::vector<std::string>{"1", "dx", "1/2 dx^2 + dy", "1/6 dx^3 + dx dy"}));
  auto r = F.ring;
  EXPECT_EQ(B.operators[2], op(r, {{0, {0, 1}, 1}, {0, {2, 0}, 1}}, point({0, 0})));
  EXPECT_EQ(B.operators[3], op(r, {{0, {1, 1}, 1}, {0, {3, 0}, 1}}, point({0, 0})));
}

TEST(Forward, ModuleM1) {
  auto F = module_m1();
  auto G = buchberger(F.gens, F.order);
  auto B = noetherian_forward(G);
  EXPECT_EQ(B.multiplicity, 3);
  EXPECT_EQ(texts(B.operators, F.order),
            (std::vector<std::string>{"(1, 0)", "(-dx, 1)", "(1/2 dx^2 + dy, -dx)"}));
}

TEST(Forward, ModuleM2AtShiftedCenter) {
  auto F = module_m2();
  auto B = noetherian_forward(buchberger(F.gens, F.order), F.center);
  EXPECT_EQ(B.multiplicity, 2);
  EXPECT_EQ(B.center, point({1, 0}));
  // Dual-basis normalization gives (-dx, 1); (dx, -1) is the same line.
  EXPECT_EQ(texts(B.operators, F.order), (std::vector<std::string>{"(1, 0)", "(-dx, 1)"}));
  auto alt = op(F.ring, {{0, {1, 0}, 1}, {1, {0, 0}, -1}}, F.center);
  EXPECT_EQ(B.operators[1].scaled(-1), alt);
  for (const auto& g : F.gens) {
    for (const auto& L : B.operators) EXPECT_EQ(apply_at(L, g), 0);
  }
}

TEST(BackwardStep, Examples) {
  auto r = ring_of({"x", "y"});
  auto P = [&](const char* s) { return parse_polynomial(s, r, kDegLex); };
  const Term<Rational> xy{Monomial{0, {1, 1}}, 1};
  EXPECT_EQ(*backward_step(xy, P("x^2 - y")), P("x^3"));
  EXPECT_EQ(*backward_step(xy, P("x^2 + x*y - 2*y")), P("1/2*x^3 + 1/2*x^2*y"));
  EXPECT_FALSE(backward_step(xy, P("x^2 - y^2")).has_value());
}

TEST(Backward, CornerIdeal) {
  auto F = corner_ideal();
  auto G = buchberger(F.gens, F.order);
  auto S = staircase(G);
  auto corners = corner_monomials(S, G);
  ASSERT_EQ(corners, (std::vector<Monomial>{Monomial{0, {1, 1, 1}}}));
  Poly g = backward_polynomial(G, corners[0], S.multiplicity());
  EXPECT_EQ(g, parse_polynomial("x^3*y + x*y^3 + x*y*z", F.ring, F.order));
  EXPECT_EQ(render(dual_of_polynomial(g), F.order), "1/6 dx^3 dy + 1/6 dx dy^3 + dx dy dz");

  auto back = noetherian_backward(G);
  auto fwd = noetherian_forward(G);
  EXPECT_EQ(back.multiplicity, 8);
  EXPECT_EQ(span_dimension(back.operators), 8);
  EXPECT_TRUE(same_span(back.operators, fwd.operators));
}

TEST(Backward, LinearIdealHasOnlyIdentity) {
  auto r = ring_of({"x"});
  auto B = noetherian_backward(buchberger(polys(r, kDegLex, {"x"}), kDegLex));
  EXPECT_EQ(texts(B.operators, kDegLex), (std::vector<std::string>{"1"}));
}

TEST(Backward, ParabolaSpansForward) {
  auto F = parabola();
  auto G = buchberger(F.gens, F.order);
  EXPECT_EQ(corner_monomials(staircase(G), G), (std::vector<Monomial>{Monomial{0, {1, 1}}}));
  auto back = noetherian_backward(G);
  EXPECT_TRUE(same_span(back.operators, noetherian_forward(G).operators));
  EXPECT_EQ(back.operators, noetherian_forward(G).operators);
}

TEST(Linear, Parabola) {
  auto F = parabola();
  auto B = noetherian_linear(F.gens, F.order, 4);
  EXPECT_EQ(texts(B.operators, F.order),
            (std::vector<std::string>{"1", "dx", "1/2 dx^2 + dy", "1/6 dx^3 + dx dy"}));
}

TEST(Linear, MaximalIdeal) {
  auto r = ring_of({"x", "y"});
  auto B = noetherian_linear(polys(r, kDegLex, {"x", "y"}), kDegLex, 1);
  EXPECT_EQ(texts(B.operators, kDegLex), (std::vector<std::string>{"1"}));
}

TEST(Linear, RunsOutOfSolutionsWhenMultiplicityTooLarge) {
  auto F = parabola();
  EXPECT_THROW(noetherian_linear(F.gens, F.order, 5), DomainError);
}

TEST(Closure, Examples) {
  auto r = ring_of({"x", "y"});
  std::vector<DiffOp<Rational>> parabola_ops{op(r, {{0, {0, 0}, 1}}), op(r, {{0, {1, 0}, 1}}),
                                             op(r, {{0, {0, 1}, 1}, {0, {2, 0}, 1}}),
                                             op(r, {{0, {1, 1}, 1}, {0, {3, 0}, 1}})};
  EXPECT_TRUE(is_closed(parabola_ops));

  std::vector<DiffOp<Rational>> dx{op(r, {{0, {1, 0}, 1}})};
  EXPECT_FALSE(is_closed(dx));
  auto c = closure(dx);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_TRUE(same_span(c, {op(r, {{0, {0, 0}, 1}}), op(r, {{0, {1, 0}, 1}})}));

  // a dx + b dxy: sigma_x gives a + b dy, which is outside
  std::vector<DiffOp<Rational>> rejected{op(r, {{0, {1, 0}, 2}, {0, {1, 1}, 3}})};
  EXPECT_FALSE(is_closed(rejected));
  EXPECT_FALSE(SpanBuilder<Rational>().contains(sigma(rejected[0], 0)));
}

TEST(IdealFromConditions, Examples) {
  auto F = parabola();
  auto B = noetherian_forward(buchberger(F.gens, F.order));
  auto I = ideal_from_conditions(B.operators, 4, F.order);
  EXPECT_EQ(I, buchberger(F.gens, F.order).elements);

  auto r = F.ring;
  auto m = ideal_from_conditions({op(r, {{0, {0, 0}, 1}})}, 2, kDegLex);
  EXPECT_EQ(m, polys(r, kDegLex, {"x", "y"}));

  auto ops = std::vector<DiffOp<Rational>>{op(r, {{0, {0, 0}, 1}}), op(r, {{0, {1, 0}, 1}})};
  auto J = ideal_from_conditions(ops, 3, kDegLex);
  EXPECT_EQ(J, polys(r, kDegLex, {"x^2", "y"}));
  // brute force: every monomial of degree <= 3 except 1 and x is killed
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; a + b <= 3; ++b) {
      Poly mono = make_monomial(r, kDegLex, {a, b});
      const bool killed = apply_at(ops[0], mono) == 0 && apply_at(ops[1], mono) == 0;
      EXPECT_EQ(killed, is_member(mono, buchberger(J, kDegLex)));
    }
  }

  EXPECT_THROW(ideal_from_conditions({op(r, {{0, {1, 0}, 1}})}, 2, kDegLex), DomainError);
}

TEST(TranslateToOrigin, Examples) {
  auto F = module_m2();
  auto moved = translate_to_origin(F.gens, F.center);
  EXPECT_EQ(moved, polys(F.ring, F.order, {"[x, 1]", "[y, 0]", "[y, x]"}));
  EXPECT_EQ(translate_to_origin(F.gens, point({0, 0})), F.gens);

  std::mt19937 rng(9);
  auto r = ring_of({"x", "y", "z"});
  for (int i = 0; i < 30; ++i) {
    std::vector<Poly> gens{random_poly(rng, r, kDegLex, 4, 4), random_poly(rng, r, kDegLex, 3, 4)};
    std::vector<Rational> p{random_rational(rng), random_rational(rng), random_rational(rng)};
    std::vector<Rational> minus;
    for (const auto& c : p) minus.push_back(-c);
    EXPECT_EQ(translate_to_origin(translate_to_origin(gens, p), minus), gens);
  }
}

TEST(Preconditions, RejectsBadInput) {
  auto r = ring_of({"x", "y"});
  // center off the variety
  EXPECT_THROW(noetherian_forward(buchberger(polys(r, kDegLex, {"y^2", "x^2 - y"}), kDegLex), point({1, 1})),
               DomainError);
  // not primary: two points
  EXPECT_THROW(noetherian_forward(buchberger(polys(r, kDegLex, {"x^2 - x", "y"}), kDegLex)), DomainError);
  // positive dimensional
  EXPECT_THROW(noetherian_forward(buchberger(polys(r, kDegLex, {"x^2"}), kDegLex)), InfiniteStaircase);
}

TEST(Invariants, EveryBasisIsClosedAndSmall) {
  for (const auto& F : zero_dim_fixtures()) {
    for (Method m : {Method::Forward, Method::Backward, Method::Linear}) {
      auto B = noetherian_basis(F.gens, F.order, F.center, m);
      SCOPED_TRACE(method_name(m) + " " + render(F.gens.front()));
      EXPECT_EQ(static_cast<int>(B.operators.size()), B.multiplicity);
      EXPECT_EQ(span_dimension(B.operators), B.multiplicity);
      EXPECT_TRUE(is_closed(B.operators));
      for (const auto& L : B.operators) EXPECT_LT(L.degree(), B.multiplicity);
      // the identity on some component belongs to the span
      bool has_identity = false;
      for (int k = 0; k < F.ring->rank(); ++k) {
        auto probe = B.operators;
        probe.push_back(DiffOp<Rational>::identity(F.ring, Rational(1), k));
        has_identity = has_identity || span_dimension(probe) == B.multiplicity;
      }
      EXPECT_TRUE(has_identity);
    }
  }
}

TEST(Invariants, AlgorithmsAgree) {
  for (const auto& F : zero_dim_fixtures()) {
    auto fwd = noetherian_basis(F.gens, F.order, F.center, Method::Forward);
    auto back = noetherian_basis(F.gens, F.order, F.center, Method::Backward);
    auto lin = noetherian_basis(F.gens, F.order, F.center, Method::Linear);
    EXPECT_TRUE(same_span(fwd.operators, back.operators));
    EXPECT_TRUE(same_span(fwd.operators, lin.operators));
    // canonical form makes them literally equal
    EXPECT_EQ(fwd.operators, back.operators);
    EXPECT_EQ(fwd.operators, lin.operators);
  }
}

TEST(Invariants, MembershipEquivalence) {
  std::mt19937 rng(77);
  for (const auto& F : zero_dim_fixtures()) {
    auto B = noetherian_basis(F.gens, F.order, F.center, Method::Forward);
    auto G = buchberger(F.gens, F.order);
    const auto S = staircase(B.source);
    int members = 0;
    for (int i = 0; i < 200; ++i) {
      Poly f(F.ring, F.order);
      const int kind = i % 3;
      if (kind != 2) {
        for (const auto& g : F.gens) {
          Poly c = random_poly(rng, F.ring->with_rank(1), F.order, B.multiplicity + 2 - g.degree(), 3);
          f = f + c.with_ring(F.ring->with_rank(1)) * g;
        }
      }
      if (kind == 1) {
        // a shifted residual monomial breaks membership
        auto m = S.residual_monomials[static_cast<std::size_t>(i) % S.residual_monomials.size()];
        std::vector<Rational> back;
        for (const auto& c : B.center) back.push_back(-c);
        f = f + substitute_affine(Poly::monomial(F.ring, F.order, m, 1), back);
      }
      if (kind == 2) f = random_poly(rng, F.ring, F.order, B.multiplicity + 2, 4);
      const bool nf_zero = is_member(f, G);
      bool killed = true;
      for (const auto& L : B.operators) killed = killed && apply_at(L, f) == 0;
      EXPECT_EQ(nf_zero, killed) << render(f);
      members += nf_zero;
    }
    EXPECT_GE(members, 60);
  }
}

TEST(Invariants, DualityRoundTrip) {
  for (const auto& F : zero_dim_fixtures()) {
    auto B = noetherian_basis(F.gens, F.order, F.center, Method::Forward);
    EXPECT_EQ(ideal_from_conditions(B.operators, B.multiplicity, F.order), buchberger(F.gens, F.order).elements);
  }
}
