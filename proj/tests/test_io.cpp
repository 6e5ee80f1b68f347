#include "phall/io.hpp"

#include <gtest/gtest.h>

using namespace phall;

namespace {

const IsoClassId kF{DimVector({1}), 0};

RunConfig config(const std::string& quiver, int m, std::vector<int> max_dim = {}) {
  RunConfig c;
  c.quiver = quiver;
  c.m = m;
  c.max_dim = std::move(max_dim);
  return c;
}

std::size_t error_position(RepCategory& cat, int m, const std::string& text) {
  try {
    parse_periodic_literal(cat, m, text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return 0;
}

}  // namespace

TEST(Literals, PeriodicGrammar) {
  RepCategory cat(Quiver::a1(), 2);
  const PeriodicBasisElt b = parse_periodic_literal(cat, 3, "d(1)#0@0 * K[1]@2");
  EXPECT_EQ(b.classes[0], kF);
  EXPECT_TRUE(b.classes[2].is_zero());
  EXPECT_EQ(b.kappa[2], KClass(std::vector<int>{1}));
  EXPECT_EQ(periodic_label(b), "d(1)#0@0 * K(1)@2");
  EXPECT_EQ(parse_periodic_literal(cat, 3, periodic_label(b)), b);
  EXPECT_EQ(periodic_label(parse_periodic_literal(cat, 3, " 1 ")), "1");
  EXPECT_EQ(parse_periodic_literal(cat, 3, "K[-1]@1").kappa[1], KClass(std::vector<int>{-1}));
}

TEST(Literals, ErrorsCarryPositions) {
  RepCategory cat(Quiver::a1(), 2);
  EXPECT_EQ(error_position(cat, 3, "d(1)#0@0 * d(1)#0@0"), 11u);
  EXPECT_EQ(error_position(cat, 3, "d(1)#0@0 * K[1@1"), 11u);
  EXPECT_EQ(error_position(cat, 3, "d(1)#0@3"), 0u);
  EXPECT_EQ(error_position(cat, 3, "d(1)#0@"), 7u);
  EXPECT_EQ(error_position(cat, 3, "d(1)#1@0"), 0u);
  EXPECT_EQ(error_position(cat, 3, "d(1)#0@0 *"), 10u);
  EXPECT_EQ(error_position(cat, 3, "K[1,2]@0"), 0u);
  EXPECT_EQ(error_position(cat, 3, "K[x]@0"), 2u);
  EXPECT_EQ(error_position(cat, 3, "1 * d(1)#0@0"), 0u);
  EXPECT_THROW(parse_class_literal(cat, "d(1)#0@0"), ParseError);
  EXPECT_THROW(parse_ext_literal(cat, "K[1] * d(1)#0"), ParseError);
  EXPECT_THROW(parse_odd_literal(cat, 3, "K[1]@0"), ParseError);
}

TEST(Literals, ExtAndOdd) {
  RepCategory cat(Quiver::a2(), 2);
  const ExtBasis e = parse_ext_literal(cat, "d(1,1)#1 * K(1,-1)");
  EXPECT_EQ(e.cls, (IsoClassId{DimVector({1, 1}), 1}));
  EXPECT_EQ(e.kappa, KClass(std::vector<int>{1, -1}));
  const Graded g = parse_odd_literal(cat, 3, "d(0,1)#0@2");
  EXPECT_EQ(g[2], (IsoClassId{DimVector({0, 1}), 0}));
  EXPECT_TRUE(g[0].is_zero());
}

TEST(Json, ScalarsAreExactPairs) {
  const nlohmann::json j = scalar_json(v_pow(2, -1));
  EXPECT_EQ(j["a"], "0/1");
  EXPECT_EQ(j["b"], "1/2");
}

TEST(Product, SpecExample) {
  const auto j = nlohmann::json::parse(cmd_product(config("A1", 1), "d(1)#0@0", "d(1)#0@0", "periodic-ext"));
  ASSERT_EQ(j["terms"].size(), 2u);
  for (const auto& t : j["terms"]) {
    EXPECT_EQ(t["coefficient"]["a"], "0/1");
    EXPECT_EQ(t["coefficient"]["b"], "1/2");
  }
}

TEST(Product, UnitIsNeutralInEveryAlgebra) {
  const std::vector<std::pair<std::string, std::string>> cases{{"hall", "d(1,1)#0"},
                                                              {"hall-tw", "d(1,0)#0"},
                                                              {"hall-ext", "d(0,1)#0 * K(1,1)"},
                                                              {"periodic-ext", "d(1,1)#1@2 * K(0,1)@0"},
                                                              {"periodic-odd", "d(1,0)#0@1"}};
  for (const auto& [alg, lit] : cases) {
    const auto j = nlohmann::json::parse(cmd_product(config("1->2", 3), "1", lit, alg));
    ASSERT_EQ(j["terms"].size(), 1u) << alg;
    EXPECT_EQ(j["terms"][0]["term"], lit) << alg;
    EXPECT_EQ(j["terms"][0]["coefficient"]["a"], "1/1");
  }
  EXPECT_THROW(cmd_product(config("A1", 3), "1", "1", "lie"), std::invalid_argument);
}

TEST(Table, ZeroBoundHasOnlyTheUnitRow) {
  for (const std::string& alg : algebra_names()) {
    EXPECT_EQ(cmd_table(config("A1", 3, {0}), alg), "lhs,rhs,term,a,b\n1,1,1,1/1,0/1\n") << alg;
  }
}

TEST(Table, ContainsTheDerivedRowAndIsDeterministic) {
  const std::string t = cmd_table(config("A1", 3, {1}), "periodic-ext");
  EXPECT_NE(t.find("d(1)#0@0,d(1)#0@2,d(1)#0@0 * d(1)#0@2,1/1,0/1\n"), std::string::npos);
  EXPECT_NE(t.find("d(1)#0@0,d(1)#0@2,K(1)@2,1/1,0/1\n"), std::string::npos);
  EXPECT_EQ(t, cmd_table(config("A1", 3, {1}), "periodic-ext"));
  const std::string a2 = cmd_table(config("1->2", 2, {1, 1}), "hall-ext");
  EXPECT_NE(a2.find("\"d(1,0)#0\""), std::string::npos);
}

TEST(ListClasses, ShowsAutomorphismOrders) {
  RunConfig c = config("A1", 3, {2});
  EXPECT_EQ(cmd_list_classes(c), "d(0)#0 dim=(0) aut=1\nd(1)#0 dim=(1) aut=1\nd(2)#0 dim=(2) aut=6\n");
}
