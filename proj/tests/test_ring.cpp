#include <doctest.h>

#include <random>

#include "catalog.hpp"
#include "oracles.hpp"
#include "unitgraph/dsl.hpp"
#include "unitgraph/errors.hpp"
#include "unitgraph/radical.hpp"
#include "unitgraph/ring.hpp"

using namespace unitgraph;

namespace {

RingPtr ring(const std::string& text) { return build_ring(parse_ring_expr(text)); }

void check_axioms(const Ring& r, Elem a, Elem b, Elem c) {
  const Elem z = r.zero(), e = r.one();
  CHECK(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)));
  CHECK(r.add(a, b) == r.add(b, a));
  CHECK(r.add(a, z) == a);
  CHECK(r.add(a, r.neg(a)) == z);
  CHECK(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
  CHECK(r.mul(a, e) == a);
  CHECK(r.mul(e, a) == a);
  CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
  CHECK(r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c)));
}

}  // namespace

TEST_SUITE("ring") {
  TEST_CASE("examples") {
    const auto z4 = ring("Z4");
    CHECK(z4->order() == 4);
    CHECK(z4->unit_set() == VertexSet(4, {1, 3}));

    const auto gf4 = ring("GF(4)");
    CHECK(gf4->order() == 4);
    CHECK(gf4->characteristic() == 2);
    CHECK(gf4->unit_set().size() == 3);

    const auto m2 = ring("M2(GF(2))");
    CHECK(m2->order() == 16);
    CHECK(m2->unit_set().size() == 6);
    CHECK(m2->is_unit(m2->one()));

    CHECK_FALSE(is_unit(*ring("Z9"), 3));
    const auto z12 = ring("Z12");
    CHECK(is_unit(*z12, 5));
    CHECK(z12->inverse_generic(5) == Elem{5});
  }

  TEST_CASE("element encodings") {
    // M2(Z3): entry (r, c) has weight 3^(2r + c), so the identity is 1 + 3^3
    const auto m = ring("M2(Z3)");
    CHECK(m->one() == 1 + 27);
    CHECK(m->components(5) == std::vector<Elem>{2, 1, 0, 0});

    // Z2 x Z3: first factor least significant
    const auto p = ring("Z2 x Z3");
    CHECK(p->compose(std::vector<Elem>{1, 2}) == 1 + 2 * 2);
    CHECK(p->one() == 1 + 2 * 1);

    // GF(4) = Z2[x]/(x^2 + x + 1): x at index 2, x^2 = x + 1 at index 3
    const auto gf4 = ring("GF(4)");
    CHECK(gf4->field_modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(gf4->mul(2, 2) == 3);
  }

  TEST_CASE("GF(p^k) agrees with polynomial arithmetic") {
    for (const auto q : {4U, 8U, 9U, 16U, 25U, 27U, 32U, 49U, 81U}) {
      CAPTURE(q);
      const auto r = ring("GF(" + std::to_string(q) + ")");
      const auto p = static_cast<std::uint32_t>(r->field_prime());
      const auto k = r->field_degree();
      const auto modulus = oracle::smallest_irreducible(k, p);
      REQUIRE(std::vector<std::uint32_t>(r->field_modulus()) == modulus);
      for (Elem a = 0; a < q; ++a) {
        for (Elem b = 0; b < q; ++b) {
          const auto prod = oracle::poly_mod(
              oracle::poly_mul(oracle::digits_poly(a, p, k), oracle::digits_poly(b, p, k), p), modulus, p);
          CHECK(r->mul(a, b) == oracle::poly_index(prod, p));
        }
      }
    }
  }

  TEST_CASE("Zn(2) and GF(2) realize the same ring") {
    const auto a = ring("Z2");
    const auto b = ring("GF(2)");
    for (Elem x = 0; x < 2; ++x) {
      for (Elem y = 0; y < 2; ++y) {
        CHECK(a->add(x, y) == b->add(x, y));
        CHECK(a->mul(x, y) == b->mul(x, y));
      }
    }
    CHECK(a->unit_set() == b->unit_set());
  }

  TEST_CASE("group algebra multiplication follows the group relations") {
    const auto q8 = group_multiplication(GroupId::quaternion8());
    const std::uint32_t i = 1, j = 4;
    CHECK(q8[j * 8 + i] == 7);  // j i = i^3 j
    CHECK(q8[i * 8 + j] == 5);
    CHECK(q8[j * 8 + j] == 2);  // j^2 = i^2
    const auto d4 = group_multiplication(GroupId::dihedral8());
    const std::uint32_t r = 1, s = 4;
    CHECK(d4[s * 8 + r] == 7);  // s r = r^3 s
    CHECK(d4[s * 8 + s] == 0);
    CHECK(group_elements(GroupId::quaternion8()).front() == "1");

    const auto ga = ring("GA(GF(2), Q8)");
    CHECK(ga->order() == 256);
    // basis elements: coefficient 1 on group element g sits at 2^g
    CHECK(ga->mul(1U << j, 1U << i) == 1U << 7);
    CHECK(ga->mul(1U << i, 1U << j) == 1U << 5);
  }

  TEST_CASE("ring axioms: exhaustive to order 64, sampled above") {
    std::mt19937_64 rng(20261016);
    for (const auto& text : testcat::all_rings()) {
      CAPTURE(text);
      const auto r = ring(text);
      const std::size_t n = r->order();
      if (n <= 64) {
        for (Elem a = 0; a < n; ++a) {
          for (Elem b = 0; b < n; ++b) {
            for (Elem c = 0; c < n; ++c) check_axioms(*r, a, b, c);
          }
        }
      } else {
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
        for (int t = 0; t < 10000; ++t) check_axioms(*r, pick(rng), pick(rng), pick(rng));
      }
      CHECK(n % r->characteristic() == 0);
      CHECK(r->from_integer(static_cast<std::int64_t>(r->characteristic())) == r->zero());
    }
  }

  TEST_CASE("unit set matches exhaustive inverse search") {
    for (const auto& text : testcat::all_rings()) {
      CAPTURE(text);
      const auto r = ring(text);
      CHECK(r->unit_set() == oracle::naive_units(*r));
    }
  }

  TEST_CASE("|U(M_n(GF(q)))| = prod (q^n - q^i)") {
    for (const std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      CHECK(ring("GF(" + std::to_string(q) + ")")->unit_set().size() == oracle::gl_order(1, q));
    }
    CHECK(ring("M2(GF(2))")->unit_set().size() == oracle::gl_order(2, 2));
    CHECK(ring("M2(GF(3))")->unit_set().size() == oracle::gl_order(2, 3));
    CHECK(ring("M2(GF(4))")->unit_set().size() == oracle::gl_order(2, 4));
    CHECK(ring("M3(GF(2))")->unit_set().size() == oracle::gl_order(3, 2));
  }

  TEST_CASE("boolean and field predicates") {
    CHECK(is_boolean_ring(*ring("Z2 x Z2 x Z2")));
    CHECK_FALSE(is_boolean_ring(*ring("Z4")));
    CHECK_FALSE(is_boolean_ring(*ring("GF(4)")));
    CHECK(is_field(*ring("GF(9)")));
    CHECK(is_field(*ring("Z7")));
    CHECK_FALSE(is_field(*ring("Z6")));
    CHECK_FALSE(is_field(*ring("M2(GF(2))")));
    CHECK_FALSE(is_field(*ring("GA(GF(2), C2)")));
  }

  TEST_CASE("build errors") {
    CHECK_THROWS_AS(build_ring(RingDescriptor::zn(1)), InvalidArgument);
    CHECK_THROWS_AS(build_ring(RingDescriptor::gf(6)), InvalidArgument);
    CHECK_THROWS_AS(build_ring(RingDescriptor::mat(0, RingDescriptor::zn(2))), InvalidArgument);
    CHECK_THROWS_AS(build_ring(RingDescriptor::product({})), InvalidArgument);
    CHECK_THROWS_AS(build_ring(RingDescriptor::group_algebra(RingDescriptor::zn(4), GroupId::cyclic(2))),
                    InvalidArgument);
    CHECK_THROWS_AS(build_ring(parse_ring_expr("M3(GF(4))")), CapExceeded);  // 4^9
    RingOptions small;
    small.max_order = 100;
    CHECK_THROWS_AS(build_ring(parse_ring_expr("M2(GF(4))"), small), CapExceeded);
    CHECK_NOTHROW(build_ring(parse_ring_expr("Z100"), small));
  }
}

TEST_SUITE("radical") {
  TEST_CASE("examples") {
    CHECK(jacobson_radical(*ring("Z12")) == VertexSet(12, {0, 6}));
    CHECK(jacobson_radical(*ring("GF(8)")) == VertexSet(8, {0}));
    CHECK(jacobson_radical(*ring("GA(GF(2), C2)")) == VertexSet(4, {0, 3}));

    const auto q4 = quotient_by_radical(ring("Z4"));
    CHECK(q4.order() == 2);
    CHECK(q4.characteristic() == 2);
    const auto q9 = quotient_by_radical(ring("Z9"));
    CHECK(q9.order() == 3);
    CHECK(q9.characteristic() == 3);
    const auto qm = quotient_by_radical(ring("M2(Z4)"));
    CHECK(qm.order() == 16);
    CHECK(qm.ring()->unit_set().size() == 6);
  }

  TEST_CASE("generic, structural and nil-ideal radicals coincide") {
    for (const auto& text : testcat::all_rings()) {
      CAPTURE(text);
      const auto r = ring(text);
      const auto generic = jacobson_radical(*r, RadicalMethod::Generic);
      if (r->order() <= 256) CHECK(generic == oracle::nil_radical(*r));
      if (wedderburn_shape(*r->descriptor())) {
        CHECK(jacobson_radical(*r, RadicalMethod::Structural) == generic);
      } else {
        CHECK_THROWS_AS(jacobson_radical(*r, RadicalMethod::Structural), Unsupported);
      }
      generic.for_each([&](std::size_t j) { CHECK(r->is_unit(r->add(r->one(), static_cast<Elem>(j)))); });
    }
  }

  TEST_CASE("quotient invariants") {
    for (const auto& text : testcat::all_rings()) {
      CAPTURE(text);
      const auto r = ring(text);
      const auto q = quotient_by_radical(r);
      const auto& qr = *q.ring();
      CHECK(q.representatives().size() * q.radical().size() == r->order());
      CHECK(r->characteristic() % q.characteristic() == 0);
      for (std::size_t c = 0; c < q.order(); ++c) {
        const Elem rep = q.representative(static_cast<Elem>(c));
        CHECK(q.reduce(rep) == c);
        CHECK(q.coset(static_cast<Elem>(c)).first() == rep);  // smallest member
      }
      std::mt19937 rng(7);
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(r->order() - 1));
      const int samples = r->order() <= 32 ? 0 : 5000;
      auto check_pair = [&](Elem x, Elem y) {
        CHECK(q.reduce(r->add(x, y)) == qr.add(q.reduce(x), q.reduce(y)));
        CHECK(q.reduce(r->mul(x, y)) == qr.mul(q.reduce(x), q.reduce(y)));
      };
      if (samples == 0) {
        for (Elem x = 0; x < r->order(); ++x) {
          for (Elem y = 0; y < r->order(); ++y) check_pair(x, y);
        }
      } else {
        for (int t = 0; t < samples; ++t) check_pair(pick(rng), pick(rng));
      }
      for (Elem x = 0; x < r->order(); ++x) CHECK(r->is_unit(x) == qr.is_unit(q.reduce(x)));
      CHECK(qr.unit_set() == oracle::naive_units(qr));
      CHECK(jacobson_radical(qr).size() == 1);  // semisimple
    }
  }

  TEST_CASE("wedderburn shape") {
    auto shape = [](const std::string& t) { return wedderburn_shape(parse_ring_expr(t)); };
    CHECK(shape("Z12")->to_string() == "[(1,2),(1,3)]");
    CHECK(shape("M2(Z4)")->to_string() == "[(2,2)]");
    CHECK(shape("GA(GF(2), Q8)")->to_string() == "[(1,2)]");
    CHECK(shape("GF(9) x Z2 x M2(GF(3))")->to_string() == "[(1,2),(2,3),(1,9)]");  // sorted by q, then n
    CHECK(shape("M2(Z2 x Z3)")->to_string() == "[(2,2),(2,3)]");
    CHECK_FALSE(shape("GA(GF(3), C2)").has_value());
    CHECK_FALSE(shape("GA(GF(2), C6)").has_value());

    for (const auto& text : testcat::all_rings()) {
      CAPTURE(text);
      const auto d = parse_ring_expr(text);
      const auto s = wedderburn_shape(d);
      if (!s) continue;
      const auto q = quotient_by_radical(build_ring(d));
      CHECK(s->semisimple_order() == q.order());
      CHECK(s->characteristic() == q.characteristic());
    }
  }

  TEST_CASE("semisimple projection is a surjective homomorphism with kernel J") {
    for (const auto& text : testcat::all_rings()) {
      CAPTURE(text);
      const auto r = ring(text);
      const auto proj = semisimple_projection(*r);
      if (!wedderburn_shape(*r->descriptor())) {
        CHECK_FALSE(proj.has_value());
        continue;
      }
      REQUIRE(proj.has_value());
      const auto& t = *proj->target;
      CHECK(proj->image[r->one()] == t.one());
      VertexSet kernel(r->order()), hit(t.order());
      for (Elem x = 0; x < r->order(); ++x) {
        if (proj->image[x] == t.zero()) kernel.insert(x);
        hit.insert(proj->image[x]);
      }
      CHECK(kernel == jacobson_radical(*r));
      CHECK(hit.size() == t.order());
      std::mt19937 rng(11);
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(r->order() - 1));
      for (int i = 0; i < 3000; ++i) {
        const Elem x = pick(rng), y = pick(rng);
        CHECK(proj->image[r->add(x, y)] == t.add(proj->image[x], proj->image[y]));
        CHECK(proj->image[r->mul(x, y)] == t.mul(proj->image[x], proj->image[y]));
      }
    }
  }
}
