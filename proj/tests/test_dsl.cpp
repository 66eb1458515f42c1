#include <doctest.h>

#include "catalog.hpp"
#include "unitgraph/dsl.hpp"
#include "unitgraph/errors.hpp"

using namespace unitgraph;

namespace {

std::size_t error_offset(const std::string& text) {
  try {
    parse_ring_expr(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for " << text);
  return 0;
}

std::string error_message(const std::string& text) {
  try {
    parse_ring_expr(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("dsl") {
  TEST_CASE("grammar examples") {
    const auto d = parse_ring_expr("Z4 x M2(GF(2))");
    CHECK(d == RingDescriptor::product({RingDescriptor::zn(4), RingDescriptor::mat(2, RingDescriptor::gf(2))}));

    CHECK(parse_ring_expr("GA(GF(2), Q8)") ==
          RingDescriptor::group_algebra(RingDescriptor::gf(2), GroupId::quaternion8()));
    CHECK(parse_ring_expr("GA(Z3,C3)") == RingDescriptor::group_algebra(RingDescriptor::zn(3), GroupId::cyclic(3)));
    CHECK(parse_ring_expr("GA(GF(4), D4)") ==
          RingDescriptor::group_algebra(RingDescriptor::gf(4), GroupId::dihedral8()));
    CHECK(parse_ring_expr("(Z5)") == RingDescriptor::zn(5));
  }

  TEST_CASE("whitespace is ignored and products flatten") {
    const auto flat = RingDescriptor::product({RingDescriptor::zn(2), RingDescriptor::zn(3), RingDescriptor::gf(4)});
    CHECK(parse_ring_expr("Z2xZ3xGF(4)") == flat);
    CHECK(parse_ring_expr("  Z2 x (Z3 x GF ( 4 ))  ") == flat);
    CHECK(parse_ring_expr("(Z2 x Z3) x GF(4)") == flat);
    // a parenthesized product inside a matrix ring is its own node
    const auto m = parse_ring_expr("M2(Z2 x Z3)");
    REQUIRE(m.as<MatNode>() != nullptr);
    CHECK(m.as<MatNode>()->base->as<ProductNode>()->factors.size() == 2);
  }

  TEST_CASE("round trip through the printer") {
    for (const auto& text : testcat::all_rings()) {
      CAPTURE(text);
      const auto d = parse_ring_expr(text);
      CHECK(parse_ring_expr(d.to_string()) == d);
      CHECK(parse_ring_expr(d.to_string()).to_string() == d.to_string());
    }
    CHECK(parse_ring_expr("GA( GF(2) ,Q8 )").to_string() == "GA(GF(2), Q8)");
    CHECK(parse_ring_expr("M2(Z4)xZ3").to_string() == "M2(Z4) x Z3");
  }

  TEST_CASE("semantic errors") {
    CHECK(error_message("GF(6)").find("6 is not a prime power") != std::string::npos);
    CHECK(error_message("Z1").find("at least 2") != std::string::npos);
    CHECK(error_message("Z0").find("at least 2") != std::string::npos);
    CHECK(error_message("M0(Z2)").find("M0") != std::string::npos);
    CHECK(error_message("GA(Z4, C2)").find("not a field") != std::string::npos);
    CHECK(error_message("GA(GF(2), C0)").find("at least 1") != std::string::npos);
  }

  TEST_CASE("syntax errors carry offsets") {
    CHECK(error_offset("") == 0);
    CHECK(error_offset("Z4 x") == 4);
    CHECK(error_offset("Z4 y") == 3);
    CHECK(error_offset("GF(4") == 4);
    CHECK(error_offset("M2 Z4") == 3);
    CHECK(error_offset("GA(GF(2), S3)") == 10);
    CHECK(error_offset("z4") == 0);  // case-sensitive
    CHECK(error_offset("Z99999999999999999999999") == 1);
    CHECK(error_offset("x Z2") == 0);
  }
}
