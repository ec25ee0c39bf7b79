#include <doctest.h>

#include <random>

#include "fcensus/finite_field.hpp"
#include "fcensus/poly.hpp"
#include "oracles.hpp"

using namespace fcensus;

namespace {

const std::vector<std::pair<unsigned, unsigned>> kSmallFields{
    {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {2, 6}, {3, 3}, {7, 2}};

}  // namespace

TEST_CASE("modulus is the lexicographically smallest irreducible") {
  CHECK(make_field(2, 1)->modulus() == std::vector<std::uint32_t>{0, 1});
  CHECK(make_field(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(make_field(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  for (const auto& [p, e] : kSmallFields) {
    if (e == 1) continue;
    CAPTURE(p);
    CAPTURE(e);
    const auto want = oracle::smallest_modulus(p, e);
    CHECK(make_field(p, e)->modulus() == std::vector<std::uint32_t>(want.begin(), want.end()));
  }
}

TEST_CASE("table arithmetic matches schoolbook polynomial arithmetic") {
  for (const auto& [p, e] : kSmallFields) {
    const Field f = make_field(p, e);
    const auto& m = f->modulus();
    const oracle::NaiveField ref(p, e, oracle::Digits(m.begin(), m.end()));
    CAPTURE(f->name());
    const Code q = static_cast<Code>(f->q());
    for (Code a = 0; a < q; ++a) {
      CHECK(f->neg(a) == ref.neg(a));
      CHECK(f->frobenius(a) == ref.frob(a));
      for (Code b = 0; b < q; ++b) {
        if (f->add(a, b) != ref.add(a, b) || f->mul(a, b) != ref.mul(a, b)) {
          FAIL("mismatch at " << a << ", " << b);
        }
      }
    }
  }
}

TEST_CASE("field axioms on all triples for q <= 16") {
  for (const auto& [p, e] : kSmallFields) {
    const Field f = make_field(p, e);
    if (f->q() > 16) continue;
    const Code q = static_cast<Code>(f->q());
    for (Code a = 0; a < q; ++a) {
      REQUIRE(f->add(a, 0) == a);
      REQUIRE(f->mul(a, 1) == a);
      REQUIRE(f->add(a, f->neg(a)) == 0);
      if (a) REQUIRE(f->mul(a, f->inv(a)) == 1);
      for (Code b = 0; b < q; ++b) {
        REQUIRE(f->add(a, b) == f->add(b, a));
        REQUIRE(f->mul(a, b) == f->mul(b, a));
        for (Code c = 0; c < q; ++c) {
          REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("field axioms on random triples, table and polynomial paths") {
  std::mt19937_64 rng(20240611);
  // F_{2^17} and F_{3^11} exceed the table threshold.
  for (const auto& [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 8}, {3, 5}, {2, 16}, {2, 17}, {3, 11}}) {
    const Field f = make_field(p, e);
    CAPTURE(f->name());
    CHECK(f->has_tables() == (f->q() <= kTableThreshold));
    std::uniform_int_distribution<Code> pick(0, static_cast<Code>(f->q() - 1));
    const auto& m = f->modulus();
    const oracle::NaiveField ref(p, e, oracle::Digits(m.begin(), m.end()));
    for (int i = 0; i < 10000; ++i) {
      const Code a = pick(rng), b = pick(rng), c = pick(rng);
      REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      REQUIRE(f->sub(f->add(a, b), b) == a);
      if (b) REQUIRE(f->mul(f->div(a, b), b) == a);
      if (i < 500) REQUIRE(f->mul(a, b) == ref.mul(a, b));
    }
  }
}

TEST_CASE("F_4 element arithmetic") {
  const Field f4 = make_field(2, 2);
  const FieldElement g(f4, f4->generator());
  const FieldElement one = FieldElement::one(f4);
  CHECK(g * (g + one) == one);
  CHECK(g.inv() == g + one);
  CHECK(g.pow(4) == g);
  CHECK(frobenius(g) == g + one);
  CHECK(f4->primitive() != 1);
}

TEST_CASE("frobenius is a ring homomorphism of order e") {
  for (const auto& [p, e] : kSmallFields) {
    const Field f = make_field(p, e);
    if (f->q() > 64) continue;
    const Code q = static_cast<Code>(f->q());
    for (Code a = 0; a < q; ++a) {
      REQUIRE(f->frobenius(a, e) == a);
      if (e == 1) REQUIRE(f->frobenius(a) == a);
      for (Code b = 0; b < q; ++b) {
        REQUIRE(f->frobenius(f->add(a, b)) == f->add(f->frobenius(a), f->frobenius(b)));
        REQUIRE(f->frobenius(f->mul(a, b)) == f->mul(f->frobenius(a), f->frobenius(b)));
      }
    }
  }
}

TEST_CASE("primitive element generates the multiplicative group") {
  for (const auto& [p, e] : kSmallFields) {
    const Field f = make_field(p, e);
    Code x = 1;
    std::uint64_t order = 0;
    do {
      x = f->mul(x, f->primitive());
      ++order;
    } while (x != 1);
    CHECK(order == f->q() - 1);
  }
}

TEST_CASE("embedding F_4 into F_16 is a ring map") {
  const Field f4 = make_field(2, 2);
  const Field f16 = make_field(2, 4);
  CHECK(embed(FieldElement::one(make_field(2, 1)), f4) == FieldElement::one(f4));
  for (Code a = 0; a < 4; ++a) {
    for (Code b = 0; b < 4; ++b) {
      const FieldElement x(f4, a), y(f4, b);
      CHECK(embed(x * y, f16) == embed(x, f16) * embed(y, f16));
      CHECK(embed(x + y, f16) == embed(x, f16) + embed(y, f16));
    }
  }
  // The image is the fixed field of sigma^2.
  for (Code a = 0; a < 4; ++a) CHECK(frobenius(embed(FieldElement(f4, a), f16), 2) == embed(FieldElement(f4, a), f16));
  CHECK_THROWS_AS(embed(FieldElement(make_field(2, 3), 2), f16), Error);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(make_field(4, 1), Error);
  CHECK_THROWS_AS(make_field(2, 21), Error);
  try {
    make_field(6, 1);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::kNonPrime);
  }
  const Field f = make_field(3, 1);
  CHECK_THROWS_AS(f->inv(0), Error);
  CHECK_THROWS_AS(FieldElement(f, 1) + FieldElement(make_field(5, 1), 1), Error);
  CHECK(make_field(2, 3).get() == make_field(2, 3).get());
}

TEST_CASE("gcd, squarefree and roots") {
  const Field f2 = make_field(2, 1);
  const Poly x = Poly::x(f2);
  const Poly one = Poly::constant(f2, 1);
  CHECK_FALSE(poly_is_squarefree(x * x));
  CHECK(poly_is_squarefree(x * x + x));
  CHECK(poly_gcd(x * x + x, x) == x);

  auto codes = [](const std::vector<Root>& roots) {
    std::vector<Code> out;
    for (const auto& r : roots) out.push_back(r.value.code());
    return out;
  };
  const Field f4 = make_field(2, 2);
  const auto quad = poly_roots_in_extension(x * x + x + one, 2);
  CHECK(codes(quad) == std::vector<Code>{f4->generator(), f4->add(f4->generator(), 1)});
  CHECK(codes(poly_roots_in_extension(x * x + x, 1)) == std::vector<Code>{0, 1});

  const Field f3 = make_field(3, 1);
  const Poly x3 = Poly::x(f3);
  const auto r9 = poly_roots_in_extension(x3 * x3 + Poly::constant(f3, 1), 2);
  REQUIRE(r9.size() == 2);
  for (const auto& r : r9) CHECK(frobenius(r.value, 2) == r.value);
}

TEST_CASE("root multiplicities add up to the degree of a split polynomial") {
  std::mt19937_64 rng(7);
  const Field f = make_field(3, 2);
  std::uniform_int_distribution<Code> pick(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    Poly g = Poly::constant(f, 1);
    const int deg = 1 + trial % 5;
    for (int i = 0; i < deg; ++i) g = g * Poly::linear(f, pick(rng));
    unsigned total = 0;
    for (const auto& r : poly_roots_in_extension(g, 1)) {
      // Cross-check by repeated synthetic division.
      Poly rest = g;
      unsigned m = 0;
      while (true) {
        auto [quot, rem] = divmod(rest, Poly::linear(f, r.value.code()));
        if (!rem.is_zero()) break;
        rest = quot;
        ++m;
      }
      CHECK(m == r.multiplicity);
      total += r.multiplicity;
    }
    CHECK(total == static_cast<unsigned>(deg));
  }
}
