#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hamfix/expr.hpp"
#include "hamfix/models.hpp"

using namespace hamfix;

namespace {
ExprPtr random_expr(std::mt19937& rng, int depth) {
  using Kind = ExprNode::Kind;
  std::uniform_int_distribution<int> leaf(0, 3), node(0, 5), small(0, 4);
  if (depth <= 0 || node(rng) < 2) {
    switch (leaf(rng)) {
      case 0: return ExprNode::make_number(Integer(small(rng)));
      case 1: return ExprNode::make_leaf(Kind::UTilde);
      case 2: return ExprNode::make_leaf(Kind::T);
      default: return ExprNode::make_chern(small(rng));
    }
  }
  switch (node(rng)) {
    case 2:
      return ExprNode::make_binary(Kind::Add, random_expr(rng, depth - 1),
                                   random_expr(rng, depth - 1));
    case 3:
      return ExprNode::make_binary(Kind::Sub, random_expr(rng, depth - 1),
                                   random_expr(rng, depth - 1));
    case 4:
      return ExprNode::make_binary(Kind::Mul, random_expr(rng, depth - 1),
                                   random_expr(rng, depth - 1));
    default:
      return ExprNode::make_pow(random_expr(rng, depth - 1),
                                1 + small(rng));
  }
}
}  // namespace

TEST_CASE("grammar examples evaluate through localization") {
  FixedPointData q3 = fixture_quadric(3);
  CHECK(abbv_integrate(eval_expr(parse_class_expr("ut^3"), q3), q3) == 2);
  CHECK(abbv_integrate(eval_expr(parse_class_expr("1"), q3), q3) == 0);

  FixedPointData c20 = fixture_cpn(2, 0);
  CHECK(abbv_integrate(eval_expr(parse_class_expr("ut^2 * t"), c20), c20) ==
        0);
  CHECK(abbv_integrate(eval_expr(parse_class_expr("ut^2"), c20), c20) == 1);
  CHECK(abbv_integrate(eval_expr(parse_class_expr("(ut + t) * ut - t * ut"),
                                 c20),
                       c20) == 1);
}

TEST_CASE("chern atoms") {
  FixedPointData d = fixture_cpn(4, 1);
  EquivariantClass c1 = eval_expr(parse_class_expr("c1"), d);
  CHECK(c1.restrictions[0] ==
        Rational(5) * poly_u() + Rational(2) * poly_t());
  // c0 is the constant 1
  EquivariantClass c0 = eval_expr(parse_class_expr("c0"), d);
  CHECK(c0.restrictions[0] == poly_const(1));
}

TEST_CASE("whitespace insensitivity") {
  FixedPointData q3 = fixture_quadric(3);
  ExprPtr a = parse_class_expr("ut^3");
  ExprPtr b = parse_class_expr("  ut ^ 3 ");
  CHECK(expr_equal(a, b));
}

TEST_CASE("parse errors carry a caret position") {
  auto expect_error = [](const std::string& src, std::size_t pos) {
    try {
      parse_class_expr(src);
      FAIL("expected ParseError for '" << src << "'");
    } catch (const ParseError& e) {
      CHECK(e.position == pos);
    }
  };
  expect_error("ut^", 3);
  expect_error("(ut", 3);
  expect_error("x", 0);
  expect_error("u", 0);
  expect_error("ut + ", 5);
  expect_error("1 2", 2);
}

TEST_CASE("print then parse is the identity") {
  std::mt19937 rng(31337);
  for (int iter = 0; iter < 500; ++iter) {
    ExprPtr e = random_expr(rng, 4);
    std::string printed = print_expr(e);
    ExprPtr reparsed;
    REQUIRE_NOTHROW(reparsed = parse_class_expr(printed));
    INFO(printed);
    CHECK(expr_equal(e, reparsed));
    CHECK(print_expr(reparsed) == printed);
  }
}

TEST_CASE("printed expressions evaluate identically") {
  FixedPointData d = fixture_cpn(3, 1);
  std::mt19937 rng(8080);
  for (int iter = 0; iter < 50; ++iter) {
    ExprPtr e = random_expr(rng, 3);
    ExprPtr round = parse_class_expr(print_expr(e));
    CHECK(eval_expr(e, d) == eval_expr(round, d));
  }
}
