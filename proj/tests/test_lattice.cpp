#include <doctest.h>

#include "support.hpp"

using namespace symgenus;
using testing::cls;

TEST_CASE("manifold specs and ranks") {
  CHECK(Manifold::parse("rational:3") == Manifold::rational(3));
  CHECK(Manifold::parse("ruled:2:1") == Manifold::ruled(2, 1));
  CHECK(Manifold::parse("s2xs2") == Manifold::sphere_product());
  CHECK(Manifold::rational(3).rank() == 4);
  CHECK(Manifold::ruled(1, 2).rank() == 4);
  CHECK(Manifold::sphere_product().rank() == 2);
  CHECK(Manifold::rational(3).b_minus() == 3);
  CHECK(Manifold::ruled(1, 2).b_minus() == 3);
  CHECK(Manifold::sphere_product().b_minus() == 1);
  CHECK(Manifold::ruled(3, 2).spec() == "ruled:3:2");
  CHECK_THROWS_AS(Manifold::parse("ruled:0:1"), DomainError);
  CHECK_THROWS_AS(Manifold::parse("rational"), DomainError);
  CHECK_THROWS_AS(Manifold::parse("cp2"), DomainError);
}

TEST_CASE("gram matrices are unimodular with the standard forms") {
  auto det = [](std::vector<std::vector<int>> a) {
    // Integer matrices here are diagonal up to one hyperbolic block.
    const std::size_t n = a.size();
    long d = 1;
    std::size_t i = 0;
    while (i < n) {
      if (a[i][i] != 0) {
        d *= a[i][i];
        ++i;
      } else {
        d *= -(a[i][i + 1] * a[i + 1][i]);
        i += 2;
      }
    }
    return d;
  };
  for (const Manifold& m : {Manifold::rational(0), Manifold::rational(4), Manifold::ruled(1, 0),
                            Manifold::ruled(2, 3), Manifold::sphere_product()}) {
    const auto g = m.gram_matrix();
    CHECK(std::abs(det(g)) == 1);
    for (int i = 0; i < m.rank(); ++i)
      for (int j = 0; j < m.rank(); ++j) CHECK(g[i][j] == g[j][i]);
  }
  const Manifold r = Manifold::ruled(1, 1);
  CHECK(r.gram(0, 0) == 0);
  CHECK(r.gram(1, 1) == 0);
  CHECK(r.gram(0, 1) == 1);
  CHECK(r.gram(2, 2) == -1);
  const Manifold q = Manifold::rational(2);
  CHECK(q.gram(0, 0) == 1);
  CHECK(q.gram(2, 2) == -1);
}

TEST_CASE("parse and format") {
  const Manifold m2 = Manifold::rational(2);
  CHECK(cls(m2, "3H-2E1-E2") == CohClass{3, 2, 1});
  CHECK(cls(m2, "H+E1") == CohClass{1, -1, 0});
  CHECK(cls(m2, " 3H - E2 - 2E1 ") == CohClass{3, 2, 1});
  CHECK(cls(m2, "0") == CohClass{0, 0, 0});
  const Manifold r1 = Manifold::ruled(2, 1);
  CHECK(cls(r1, "2U+3T-E1") == CohClass{2, 3, 1});
  CHECK(format_class(r1, CohClass{3, -2, 1}) == "3U-2T-E1");
  CHECK(format_class(m2, CohClass{1, -1, 0}) == "H+E1");
  CHECK(format_class(m2, CohClass{0, 0, 0}) == "0");
  CHECK(format_class(Manifold::sphere_product(), CohClass{1, 3}) == "x+3y");

  for (const char* text : {"3H-2E1-E2", "-H+E2", "E1", "12H-5E1-5E2"}) CHECK(format_class(m2, cls(m2, text)) == text);

  CHECK_THROWS_AS(cls(m2, "3H-E3"), DomainError);
  CHECK_THROWS_AS(cls(m2, "3U"), DomainError);
  CHECK_THROWS_AS(cls(r1, "H"), DomainError);
  try {
    cls(m2, "3H-*E1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("pairing examples") {
  const Manifold m2 = Manifold::rational(2);
  CHECK(pair(m2, cls(m2, "H-E1"), cls(m2, "H-E1")) == 0);
  const Manifold r1 = Manifold::ruled(1, 1);
  CHECK(pair(r1, cls(r1, "U"), cls(r1, "T")) == 1);
  const Manifold m3 = Manifold::rational(3);
  CHECK(pair(m3, cls(m3, "3H-2E1-2E2-2E3"), cls(m3, "H-E1-E2-E3")) == -3);
  const Manifold m5 = Manifold::rational(5);
  CHECK(square(m5, cls(m5, "2H-E1-E2-E3-E4-E5")) == -1);
  const Manifold r0 = Manifold::ruled(1, 0);
  CHECK(square(r0, CohClass{7, -3}) == -42);
  CHECK(square(Manifold::rational(1), CohClass{5, 5}) == 0);
  CHECK_THROWS_AS(pair(m2, CohClass{1, 2}, CohClass{1, 2, 3}), DomainError);
}

TEST_CASE("pairing is exact, symmetric and bilinear") {
  testing::Gen gen(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const Manifold m = trial % 3 == 0 ? gen.rational(6) : trial % 3 == 1 ? gen.ruled(6) : Manifold::sphere_product();
    const CohClass x = gen.cls(m, 1000000), y = gen.cls(m, 1000000), z = gen.cls(m, 1000000);
    const Int k = gen.uniform(-1000000, 1000000);
    CHECK(pair(m, x, y) == testing::brute_pair(m, x, y));
    CHECK(pair(m, x, y) == pair(m, y, x));
    CHECK(pair(m, x + k * y, z) == pair(m, x, z) + k * pair(m, y, z));
  }
  // Beyond 64 bits.
  const Manifold m1 = Manifold::rational(1);
  CohClass big{0, 0};
  big[0] = Int("123456789012345678901234567890");
  CHECK(square(m1, big) == Int("15241578753238836750495351562536198787501905199875019052100"));
}

TEST_CASE("divisibility and primitive part") {
  const Manifold m2 = Manifold::rational(2);
  CHECK(divisibility(m2, cls(m2, "2H")) == 2);
  CHECK(divisibility(m2, cls(m2, "3H-2E1-E2")) == 1);
  CHECK(divisibility(m2, cls(m2, "6H-6E1")) == 6);
  CHECK(primitive_part(m2, cls(m2, "6H-6E1")) == cls(m2, "H-E1"));
  CHECK(primitive_part(m2, cls(m2, "-4H+2E2")) == cls(m2, "-2H+E2"));
  try {
    divisibility(m2, CohClass::zero(m2));
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()) == "divisibility undefined for zero class");
  }
}

TEST_CASE("characteristic type") {
  const Manifold m1 = Manifold::rational(1), m2 = Manifold::rational(2), m3 = Manifold::rational(3);
  CHECK(is_characteristic(m2, cls(m2, "H-E1-E2")));
  CHECK(is_characteristic(m3, cls(m3, "H-E1-E2-E3")));
  CHECK_FALSE(is_characteristic(m1, cls(m1, "E1")));
  CHECK(class_type(m2, cls(m2, "H-E1-E2")).type == ClassType::Characteristic);
  CHECK(class_type(m1, cls(m1, "E1")).type == ClassType::Ordinary);

  // On ruled lattices the condition is: U- and T-coefficients even, every E-coefficient odd.
  const Manifold r1 = Manifold::ruled(1, 1), r2 = Manifold::ruled(2, 2);
  CHECK(is_characteristic(r1, cls(r1, "E1")));
  CHECK_FALSE(is_characteristic(r1, cls(r1, "T-E1")));
  CHECK(is_characteristic(r2, cls(r2, "E1+E2")));
  CHECK_FALSE(is_characteristic(r2, cls(r2, "T-E1-E2")));

  const TypeVerdict zero = class_type(m2, CohClass::zero(m2));
  CHECK(zero.zero_class);
  CHECK(zero.type == ClassType::Ordinary);
}

TEST_CASE("characteristic agrees with the definition on random vectors") {
  testing::Gen gen(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Manifold m = trial % 2 ? gen.rational(5) : gen.ruled(5);
    // Small coefficients make characteristic classes common enough to matter.
    const CohClass x = gen.cls(m, 3);
    bool definitional = true;
    for (int k = 0; k < 1000 && definitional; ++k) {
      const CohClass u = gen.cls(m, 50);
      const Int d = pair(m, x, u) - pair(m, u, u);
      definitional = mpz_even_p(d.get_mpz_t());
    }
    CHECK(is_characteristic(m, x) == definitional);
  }
}

TEST_CASE("canonical class") {
  const Manifold m2 = Manifold::rational(2);
  CHECK(canonical_k0(m2) == cls(m2, "-3H+E1+E2"));
  const Manifold r11 = Manifold::ruled(1, 1);
  CHECK(canonical_k0(r11) == cls(r11, "-2U+E1"));
  const Manifold r20 = Manifold::ruled(2, 0);
  CHECK(canonical_k0(r20) == cls(r20, "-2U+2T"));
  CHECK_THROWS_AS(canonical_k0(Manifold::sphere_product()), DomainError);
  for (int n = 0; n <= 10; ++n) {
    const Manifold m = Manifold::rational(n);
    CHECK(square(m, canonical_k0(m)) == 9 - n);
    CHECK(is_characteristic(m, canonical_k0(m)));
    for (int g = 1; g <= 4; ++g) {
      const Manifold r = Manifold::ruled(g, n);
      CHECK(square(r, canonical_k0(r)) == 8 - 8 * g - n);
      CHECK(is_characteristic(r, canonical_k0(r)));
    }
  }
}

TEST_CASE("hyperbolic complement") {
  const Manifold m1 = Manifold::rational(1);
  CHECK(hyperbolic_complement(m1, cls(m1, "H-E1")) == cls(m1, "H"));
  const Manifold m3 = Manifold::rational(3);
  const CohClass y = cls(m3, "3H-2E1-2E2-E3");
  REQUIRE(square(m3, y) == 0);
  const CohClass x = hyperbolic_complement(m3, y);
  CHECK(pair(m3, y, x) == 1);
  CHECK(square(m3, x) == 1);
  CHECK_THROWS_AS(hyperbolic_complement(m3, cls(m3, "2H-E1-E2")), DomainError);
  CHECK_THROWS_AS(hyperbolic_complement(m3, cls(m3, "2H-2E1")), DomainError);

  // Primitive isotropic classes from random words applied to H-E1.
  testing::Gen gen(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Manifold m = gen.rational(6, 1);
    const CohClass yy = apply_word(m, gen.word(m, 12), cls(m, "H-E1"));
    const CohClass xx = hyperbolic_complement(m, yy);
    CHECK(testing::brute_pair(m, yy, xx) == 1);
    CHECK(testing::brute_pair(m, xx, xx) == 1);
  }
}
