#include "doctest.h"

#include "dubois/errors.hpp"
#include "dubois/expression.hpp"
#include "dubois/polynomial.hpp"
#include "support/generators.hpp"

using namespace dubois;
using dubois::testing::PolySpec;
using dubois::testing::Rng;

namespace {

const std::vector<std::string> kXYZ{"x1", "x2", "x3"};

Polynomial P(const std::string& text, const std::vector<std::string>& vars = kXYZ) { return parse_poly(text, vars); }

Monomial M(std::vector<Exponent> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("monomial equality ignores trailing zeros") {
  CHECK(M({1, 2}) == M({1, 2, 0, 0}));
  CHECK_FALSE(M({1, 2}) == M({1, 2, 1}));
  CHECK(M({2, 1, 0}).total_degree() == 3);
  CHECK(MonomialHash{}(M({1, 2})) == MonomialHash{}(M({1, 2, 0})));
}

TEST_CASE("graded lex order") {
  GrlexLess less;
  CHECK(less(M({0, 0, 1}), M({1, 1, 0})));  // degree first
  CHECK(less(M({0, 1}), M({1, 0})));        // x1 > x2
  CHECK_FALSE(less(M({1, 0}), M({1, 0})));
}

TEST_CASE("parse_poly") {
  SUBCASE("pinch point") {
    const Polynomial f = P("x1*x2^2 - x3^2");
    CHECK(f.term_count() == 2);
    CHECK(f.coefficient(M({1, 2, 0})) == 1);
    CHECK(f.coefficient(M({0, 0, 2})) == -1);
  }
  SUBCASE("zero") {
    CHECK(P("0").is_zero());
    CHECK(P("x1 - x1").is_zero());
  }
  SUBCASE("binomial expansion") {
    const Polynomial f = P("(x1+x2)^2");
    CHECK(f == P("x1^2 + 2*x1*x2 + x2^2"));
  }
  SUBCASE("unary minus and nesting") {
    CHECK(P("-(x1 - x2)") == P("x2 - x1"));
    CHECK(P("-x1^2") == -P("x1^2"));
    CHECK(P("((x3))") == P("x3"));
    CHECK(P("2*3*x1") == P("6*x1"));
    CHECK(P("x1^0") == P("1"));
  }
  SUBCASE("arbitrary precision literals") {
    const Polynomial f = P("123456789012345678901234567890*x1");
    CHECK(f.coefficient(M({1})) == Integer("123456789012345678901234567890"));
  }
}

TEST_CASE("parse_poly errors report positions") {
  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      P(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return ParseError::npos;
  };
  CHECK(position_of("x1 + ") == 5);
  CHECK(position_of("x1*(x2") == 6);
  CHECK(position_of("x1 + y") == 5);     // unknown variable
  CHECK(position_of("x1^-1") == 3);      // negative exponent
  CHECK(position_of("x1^1.5") == 4);     // trailing '.'
  CHECK(position_of("x1 / x2") == 3);    // no division
  CHECK(position_of("2x1") == 1);        // no implicit multiplication
  CHECK(position_of("x1^x2") == 3);
  CHECK_THROWS_AS(P("x1 x2"), ParseError);
}

TEST_CASE("add") {
  CHECK(P("x1 + x2") + P("-x2") == P("x1"));
  const Polynomial f = P("x1*x2 - 7");
  CHECK(f + P("0") == f);
  const Ring f3 = Ring::prime_field(3);
  CHECK((reduce_mod_p(P("2*x1"), 3) + reduce_mod_p(P("x1"), 3)).is_zero());
  CHECK_THROWS_AS(reduce_mod_p(P("x1"), 3) + P("x1"), PreconditionError);
  CHECK_THROWS_AS(P("x1") + parse_poly("x1", std::vector<std::string>{"x1"}), PreconditionError);
  CHECK(f3.characteristic() == 3);
}

TEST_CASE("mul") {
  CHECK(P("x1") * P("x2") == P("x1*x2"));
  CHECK(P("x1 - x2") * P("x1 + x2") == P("x1^2 - x2^2"));
  const std::vector<std::string> four{"x1", "x2", "x3", "x4"};
  CHECK(P("x1*x2^2 - x3^2", four) * P("x4", four) == P("x1*x2^2*x4 - x3^2*x4", four));
  CHECK_THROWS_AS(P("x1") * reduce_mod_p(P("x1"), 5), PreconditionError);
}

TEST_CASE("reduce_mod_p") {
  CHECK(reduce_mod_p(P("3*x1 + x2"), 3) == reduce_mod_p(P("x2"), 3));
  CHECK(reduce_mod_p(P("0"), 7).is_zero());
  CHECK(reduce_mod_p(P("-3*x1"), 5).coefficient(M({1})) == 2);
  CHECK_THROWS_AS(reduce_mod_p(P("x1"), 4), PreconditionError);
  CHECK_THROWS_AS(reduce_mod_p(P("x1"), 1), PreconditionError);
  const Polynomial reduced = reduce_mod_p(P("-17*x1 + 40*x2 - x3"), 7);
  for (const auto& [m, c] : reduced.terms()) {
    CHECK(c >= 0);
    CHECK(c < 7);
  }
}

TEST_CASE("translate") {
  const std::vector<std::string> x{"x"};
  const std::vector<Integer> one{1};
  CHECK(translate(P("x^2", x), one) == P("x^2 + 2*x + 1", x));

  const std::vector<Integer> a{1, 0, 0};
  // (x1 + 1) x2^2 - x3^2 by hand.
  CHECK(translate(P("x1*x2^2 - x3^2"), a) == P("x1*x2^2 + x2^2 - x3^2"));

  const std::vector<Integer> zero{0, 0, 0};
  const Polynomial f = P("x1^3 - 2*x2*x3 + 5");
  CHECK(translate(f, zero) == f);

  const std::vector<Integer> short_point{1};
  CHECK_THROWS_AS(translate(f, short_point), PreconditionError);
  CHECK_THROWS_AS(translate(reduce_mod_p(f, 3), zero), PreconditionError);
}

TEST_CASE("translate at rational points clears denominators without changing support") {
  const Polynomial f = P("x1*x2^2 - x3^2");
  const Point half{Rational(1, 2), 0, 0};
  // L = 2, D = 3: 8 f(x/2 + a) = x1 x2^2 + x2^2 - 2 x3^2.
  CHECK(translate(f, half) == P("x1*x2^2 + x2^2 - 2*x3^2"));
  const Point integral{1, 0, 0};
  const std::vector<Integer> as_integers{1, 0, 0};
  CHECK(translate(f, integral) == translate(f, as_integers));
}

TEST_CASE("evaluate, total_degree, permute_variables") {
  const Polynomial pinch = P("x1*x2^2 - x3^2");
  const Point ones{1, 1, 1};
  CHECK(evaluate(pinch, ones) == 0);
  const Point q{Rational(1, 2), 3, -1};
  CHECK(evaluate(pinch, q) == Rational(7, 2));
  CHECK(pinch.total_degree() == 3);
  CHECK(pinch.min_degree() == 2);
  CHECK(P("0").total_degree() == 0);

  const std::vector<std::size_t> cycle{1, 2, 0};
  const std::vector<std::size_t> inverse{2, 0, 1};
  CHECK(permute_variables(pinch, cycle) == P("x2*x3^2 - x1^2"));
  CHECK(permute_variables(permute_variables(pinch, cycle), inverse) == pinch);
  const std::vector<std::size_t> not_a_perm{0, 0, 1};
  CHECK_THROWS_AS(permute_variables(pinch, not_a_perm), PreconditionError);

  // F_p evaluation reduces into [0, p-1] and inverts denominators.
  const Point third{Rational(1, 3), 0, 1};
  CHECK(evaluate(reduce_mod_p(P("3*x1 + x3"), 5), third) == 2);
}

TEST_CASE("printer") {
  CHECK(to_string(P("x3^2 - x1*x2^2")) == "-x1*x2^2 + x3^2");
  CHECK(to_string(P("0")) == "0");
  CHECK(to_string(P("-5")) == "-5");
  CHECK(to_string(P("2*x1 - 3")) == "2*x1 - 3");
  CHECK(to_string(P("x1^2*x3 + 1")) == "x1^2*x3 + 1");
}

TEST_CASE("property: ring axioms over ZZ and F_p") {
  Rng rng(1);
  const PolySpec spec{3, 4, 3, 5};
  for (const Ring ring : {Ring::integers(), Ring::prime_field(2), Ring::prime_field(5)}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Polynomial f = testing::random_poly(rng, spec, ring);
      const Polynomial g = testing::random_poly(rng, spec, ring);
      const Polynomial h = testing::random_poly(rng, spec, ring);
      CHECK((f + g) + h == f + (g + h));
      CHECK((f * g) * h == f * (g * h));
      CHECK(f + g == g + f);
      CHECK(f * g == g * f);
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((f - f).is_zero());
      CHECK(f * Polynomial::constant(ring, 3, 1) == f);
    }
  }
}

TEST_CASE("property: print then parse is the identity") {
  Rng rng(2);
  const PolySpec spec{3, 6, 5, 50};
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial f = testing::random_poly(rng, spec);
    CHECK(P(to_string(f, kXYZ)) == f);
  }
}

TEST_CASE("property: evaluate is a ring homomorphism") {
  Rng rng(3);
  const PolySpec spec{3, 4, 4, 5};
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial f = testing::random_poly(rng, spec);
    const Polynomial g = testing::random_poly(rng, spec);
    const Point a = testing::random_point(rng, 3, 4, true);
    CHECK(evaluate(f * g, a) == evaluate(f, a) * evaluate(g, a));
    CHECK(evaluate(f + g, a) == evaluate(f, a) + evaluate(g, a));
  }
}

TEST_CASE("property: translate matches evaluation and inverts") {
  Rng rng(4);
  const PolySpec spec{3, 4, 4, 5};
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial f = testing::random_poly(rng, spec);
    const auto a = testing::random_integer_point(rng, 3);
    std::vector<Integer> minus_a;
    for (const auto& v : a) minus_a.push_back(-v);
    const Polynomial shifted = translate(f, a);
    CHECK(translate(shifted, minus_a) == f);
    const Point x = testing::random_point(rng, 3, 5, true);
    Point x_plus_a;
    for (std::size_t i = 0; i < 3; ++i) x_plus_a.push_back(x[i] + a[i]);
    CHECK(evaluate(shifted, x) == evaluate(f, x_plus_a));
  }
}

TEST_CASE("property: reduce_mod_p commutes with add and mul") {
  Rng rng(5);
  const PolySpec spec{3, 4, 4, 40};
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Polynomial f = testing::random_poly(rng, spec);
      const Polynomial g = testing::random_poly(rng, spec);
      CHECK(reduce_mod_p(f + g, p) == reduce_mod_p(f, p) + reduce_mod_p(g, p));
      CHECK(reduce_mod_p(f * g, p) == reduce_mod_p(f, p) * reduce_mod_p(g, p));
    }
  }
}

TEST_CASE("property: permute_variables is a ring isomorphism") {
  Rng rng(6);
  const PolySpec spec{3, 4, 4, 5};
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial f = testing::random_poly(rng, spec);
    const Polynomial g = testing::random_poly(rng, spec);
    const auto perm = testing::random_permutation(rng, 3);
    std::vector<std::size_t> inverse(3);
    for (std::size_t i = 0; i < 3; ++i) inverse[perm[i]] = i;
    CHECK(permute_variables(f * g, perm) == permute_variables(f, perm) * permute_variables(g, perm));
    CHECK(permute_variables(f + g, perm) == permute_variables(f, perm) + permute_variables(g, perm));
    CHECK(permute_variables(permute_variables(f, perm), inverse) == f);
  }
}

TEST_CASE("canonical form invariants") {
  Rng rng(7);
  const PolySpec spec{3, 6, 4, 3};
  for (const Ring ring : {Ring::integers(), Ring::prime_field(3)}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Polynomial f = testing::random_poly(rng, spec, ring);
      for (const auto& [m, c] : f.terms()) {
        CHECK(c != 0);
        if (ring.is_prime_field()) {
          CHECK(c > 0);
          CHECK(c < 3);
        }
      }
    }
  }
}
