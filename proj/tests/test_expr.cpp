#include <gtest/gtest.h>

#include <random>

#include "qsuper/expr.hpp"
#include "qsuper/json_io.hpp"

using namespace qsuper;

namespace {

Grade G(std::initializer_list<int> v) {
  Grade g{};
  int i = 0;
  for (int x : v) g[i++] = x;
  return g;
}

Element random_element(const Algebra& A, std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> kind(0, 3), gen(0, A.rank() - 1), coef(-3, 3), kexp(-2, 2);
  Element u = A.one();
  for (int t = 0; t < len; ++t) {
    int i = gen(rng);
    switch (kind(rng)) {
      case 0: u = u * A.E(i); break;
      case 1: u = u * A.F(i); break;
      case 2: u = u * A.K_simple(i, kexp(rng)); break;
      default: u = u * A.scalar(A.datum().qpow(Rat(kexp(rng))) + Scalar(coef(rng))); break;
    }
  }
  return u;
}

std::size_t error_position(const Algebra& A, const std::string& s) {
  try {
    parse_expression(A, s);
  } catch (const ParseError& e) {
    return e.position;
  }
  return std::string::npos;
}

}  // namespace

TEST(Expr, GrammarExamples) {
  Algebra A(RootDatum::make("A(1,0)"));
  Element comm = parse_expression(A, "E1*F1 - F1*E1");
  EXPECT_EQ(comm, (A.K_simple(0) - A.K_simple(0, -1)) * A.qq_minus(0).inverse());
  EXPECT_EQ(parse_expression(A, "K[0,0]"), A.one());
  Scalar qq = A.datum().qpow(Rat(1)) - A.datum().qpow(Rat(-1));
  EXPECT_EQ(parse_expression(A, "(q - q^-1)*F1*F2"), A.F(0) * A.F(1) * qq);
  EXPECT_EQ(parse_expression(A, " E1 *E2-q^-1 * E2*E1 "), A.E(0) * A.E(1) - A.E(1) * A.E(0) * A.datum().qpow(Rat(-1)));
  EXPECT_EQ(parse_expression(A, "K[1,-2]^-2"), A.K(G({-2, 4})));
  EXPECT_EQ(parse_expression(A, "(2*q)^-1"), A.scalar(Scalar::rational(1, 2) * A.datum().qpow(Rat(-1))));
  EXPECT_EQ(parse_expression(A, "-E1^2"), -(A.E(0) * A.E(0)));
  EXPECT_EQ(parse_expression(A, "3/4*F2"), A.F(1) * Scalar::rational(3, 4));
  EXPECT_TRUE(parse_expression(A, "E2^2").is_zero());
  Algebra B(RootDatum::make("B(0,1)"));  // q = v^2, so q^(1/2) = v
  EXPECT_EQ(parse_expression(B, "q^(1/2)"), B.scalar(Scalar::vpow(1)));
  EXPECT_EQ(parse_expression(B, "q^(-3/2)*q^(3/2)"), B.one());
}

TEST(Expr, Errors) {
  Algebra A(RootDatum::make("A(1,0)"));
  EXPECT_EQ(error_position(A, "E1 + E3"), 6u);
  EXPECT_EQ(error_position(A, "K[1,2,3]"), 0u);
  EXPECT_EQ(error_position(A, "E1 * (F1"), 8u);
  EXPECT_EQ(error_position(A, "E1 $ F1"), 3u);
  EXPECT_EQ(error_position(A, ""), 0u);
  EXPECT_NE(error_position(A, "E1^-1"), std::string::npos);
  EXPECT_NE(error_position(A, "E1/F1"), std::string::npos);
  EXPECT_NE(error_position(A, "E1/0"), std::string::npos);
  EXPECT_NE(error_position(A, "E1^(1/2)"), std::string::npos);
  EXPECT_NE(error_position(A, "q^(1/3)"), std::string::npos);  // not a power of v
  EXPECT_NE(error_position(A, "E0"), std::string::npos);
  EXPECT_EQ(error_position(A, "F2*K[1,1]*E1"), std::string::npos);
}

TEST(Expr, RenderParsesBack) {
  for (const char* t : {"A(1,0)", "B(0,1)", "B(1,1)", "G(3)"}) {
    Algebra A(RootDatum::make(t));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      Element e = random_element(A, rng, 4) + random_element(A, rng, 3);
      std::string s = render(e);
      Element back = parse_expression(A, s);
      EXPECT_EQ(back, e) << t << ": " << s;
      EXPECT_EQ(render(back), s);
    }
  }
}

TEST(Expr, RenderShapes) {
  Algebra A(RootDatum::make("A(1,0)"));
  EXPECT_EQ(render(A.zero()), "0");
  EXPECT_EQ(render(A.one()), "1");
  EXPECT_EQ(render(-A.one()), "-1");
  EXPECT_EQ(render(A.E(0) * Scalar(-2)), "-2*E1");
  EXPECT_EQ(render(A.F(1) * A.K(G({1, -1})) * A.E(0)), "F2*K[1,-1]*E1");
  EXPECT_EQ(render(A.F(0) * (A.datum().qpow(Rat(1)) + Scalar(1))), "(q+1)*F1");
}

TEST(Json, ElementAndInvariantRoundTrip) {
  Algebra A(RootDatum::make("B(1,1)"));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Element e = random_element(A, rng, 4);
    json j = element_to_json(e);
    EXPECT_EQ(element_from_json(A, j), e);
    EXPECT_EQ(element_from_json(A, json::parse(j.dump())), e);
    EXPECT_EQ(parse_expression(A, j.at("expr").get<std::string>()), e);
  }
  LaurentInvariant h{{G({2, 0}), Scalar(3)}, {G({-2, 2}), A.datum().qpow(Rat(1, 2))}};
  EXPECT_EQ(laurent_from_json(A, laurent_to_json(A, h)), h);
  EXPECT_EQ(ratvec_from_json(ratvec_to_json(RatVec{Rat(1, 2), Rat(-3)})), (RatVec{Rat(1, 2), Rat(-3)}));
  EXPECT_EQ(parse_rat("-7/14"), Rat(-1, 2));
  EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rat("x"), std::invalid_argument);
  json d = datum_to_json(A.datum());
  EXPECT_EQ(d.at("rank"), 2);
  EXPECT_EQ(d.at("positive_isotropic_roots").size(), 2u);
}
