#include <gtest/gtest.h>

#include "koszul/error.hpp"
#include "koszul/parser.hpp"
#include "koszul/pborel.hpp"
#include "koszul/serialize.hpp"

using namespace koszul;

TEST(Parser, ExamplesEvaluate) {
  const auto bi = parse_ideal("n=4; (x1,x2)*(x1,x2,x3,x4)[2]").evaluate();
  EXPECT_EQ(bi, product(MonomialIdeal::prefix(4, 2), frobenius_power(MonomialIdeal::maximal(4), 2)));
  EXPECT_EQ(parse_ideal("n=3; pborel(x3^3; 2)").evaluate(),
            product(MonomialIdeal::maximal(3), frobenius_power(MonomialIdeal::maximal(3), 2)));
  EXPECT_EQ(parse_ideal("n=2; (x1,x2)^4").evaluate().size(), 5u);
  EXPECT_EQ(parse_ideal("n=2;(x1^2*x2 , x2^3)").evaluate().size(), 2u);
  EXPECT_TRUE(parse_ideal("n=2; (1)").evaluate().is_unit());
}

TEST(Parser, PostfixBindsTighterThanProduct) {
  const auto a = parse_ideal("n=2; (x1)*(x1,x2)^2").evaluate();
  const auto b = product(MonomialIdeal(2, {Monomial({1, 0})}), power(MonomialIdeal::maximal(2), 2));
  EXPECT_EQ(a, b);
}

TEST(Parser, ErrorsCarryPositions) {
  try {
    parse_ideal("n=2; (x1, x3)");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 11u);
  }
  try {
    parse_ideal("n=2;\n(x1 x2)");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_ideal("n=2; (x1^-1)"), ParseError);
  EXPECT_THROW(parse_ideal("(x1)"), ParseError);
  EXPECT_THROW(parse_ideal("n=2; pborel(x2; 4)"), ParseError);
  EXPECT_THROW(parse_ideal("n=2; (x1))"), ParseError);
  EXPECT_THROW(parse_ideal("n=0; (1)"), ParseError);
}

TEST(Parser, RenderParseRoundTrip) {
  for (const char* text : {"n=4; (x1,x2)*(x1,x2,x3,x4)[2]", "n=3; pborel(x2*x3^2; 3)^2", "n=2; (x1^3, x2)"}) {
    const auto e = parse_ideal(text);
    const auto r = e.render();
    EXPECT_EQ(parse_ideal(r).render(), r);
    EXPECT_EQ(parse_ideal(r).evaluate(), e.evaluate());
    const auto I = e.evaluate();
    EXPECT_EQ(parse_ideal(render_ideal(I)).evaluate(), I);
    EXPECT_EQ(render_ideal(parse_ideal(render_ideal(I)).evaluate()), render_ideal(I));
  }
}

TEST(Parser, MonomialsAndExponentVectors) {
  EXPECT_EQ(parse_monomial("x1^2*x3", 3), Monomial({2, 0, 1}));
  EXPECT_EQ(parse_exponents("2,0,1", 3), Monomial({2, 0, 1}));
  EXPECT_THROW(parse_exponents("2,0", 3), DimensionMismatch);
  EXPECT_THROW(parse_exponents("2,a,1", 3), ParseError);
}

TEST(Serialize, IdealAndChainRoundTrip) {
  const auto I = parse_ideal("n=3; (x1^2, x2*x3)").evaluate();
  const auto j = to_json(I);
  EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
  EXPECT_EQ(ideal_from_json(j), I);
  const KoszulComplex K(I, FieldSpec::rationals());
  const auto z = K.chain(2, {{Scalar(3, 2), Monomial({1, 0, 0}), IndexSubset{1, 2}},
                             {-1, Monomial({0, 1, 0}), IndexSubset{1, 3}}});
  EXPECT_EQ(chain_from_json(to_json(z), K), z);
  nlohmann::json bad = {{"n", 2}, {"gens", {{1, 0, 0}}}};
  EXPECT_THROW(ideal_from_json(bad), DimensionMismatch);
}

TEST(Serialize, BettiTextAndJson) {
  const auto I = parse_ideal("n=2; (x1^2, x2^3)").evaluate();
  const auto t = betti_table(I, FieldSpec::prime(2));
  const auto j = to_json(t);
  EXPECT_EQ(j.at("field"), "GF(2)");
  EXPECT_EQ(j.at("entries").size(), 4u);
  const auto text = render_betti_text(t);
  EXPECT_NE(text.find("total:"), std::string::npos);
  EXPECT_EQ(to_json(principal_p_borel(Monomial({0, 3}), 2)).at("p"), 2);
}
