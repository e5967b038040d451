#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "symgenus/cones.hpp"
#include "symgenus/reduce.hpp"

using namespace symgenus;
using testing::cls;

TEST_CASE("exceptional class counts") {
  auto count = [](int n, int t) { return enumerate_exceptional_k0(Manifold::rational(n), {t}).size(); };
  CHECK(count(5, 2) == 16);
  CHECK(count(3, 1) == 6);
  CHECK(count(2, 1) == 3);
  CHECK(count(1, 5) == 1);
  CHECK(count(6, 3) == 27);
  CHECK(count(7, 4) == 56);
  const Manifold r = Manifold::ruled(2, 3);
  const auto list = enumerate_exceptional_k0(r, {});
  CHECK(list.size() == 6);
  for (int i = 1; i <= 3; ++i) {
    const std::string ei = "E" + std::to_string(i);
    CHECK(std::count(list.begin(), list.end(), cls(r, ei.c_str())) == 1);
    CHECK(std::count(list.begin(), list.end(), cls(r, ("T-" + ei).c_str())) == 1);
  }
}

TEST_CASE("exceptional classes have square -1 and meet K0 in -1") {
  for (int n = 1; n <= 9; ++n) {
    const Manifold m = Manifold::rational(n);
    const auto small = enumerate_exceptional_k0(m, {4});
    const auto large = enumerate_exceptional_k0(m, {6});
    CHECK(small.size() <= large.size());
    for (const CohClass& f : small) {
      CHECK(square(m, f) == -1);
      CHECK(pair(m, canonical_k0(m), f) == -1);
      CHECK(std::find(large.begin(), large.end(), f) != large.end());
      for (int i = 1; i < n; ++i) {
        const CohClass g = apply_move(m, Move::swap(m, i, i + 1), f);
        CHECK(std::find(small.begin(), small.end(), g) != small.end());
      }
    }
  }
}

TEST_CASE("reduced pairing check") {
  const Manifold m2 = Manifold::rational(2);
  PairingCheck p = reduced_pairing_check(m2, cls(m2, "5H-2E1-E2"), {});
  CHECK(p.pass);
  CHECK_FALSE(p.witness.has_value());
  REQUIRE(p.t_max.has_value());
  CHECK(*p.t_max == 20);
  CHECK_THROWS_AS(reduced_pairing_check(m2, cls(m2, "H-2E1"), {}), DomainError);
  const Manifold r1 = Manifold::ruled(1, 1);
  p = reduced_pairing_check(r1, cls(r1, "3U-2T-E1"), {});
  CHECK(p.pass);
  CHECK_FALSE(p.t_max.has_value());

  testing::Gen gen(71);
  for (int trial = 0; trial < 300; ++trial) {
    const Manifold m = gen.blown_up(6);
    CHECK(reduced_pairing_check(m, gen.reduced(m, 12), {6}).pass);
  }
}

TEST_CASE("P-cell membership") {
  const Manifold m3 = Manifold::rational(3);
  PCellResult r = in_pcell_k0(m3, cls(m3, "H"), {});
  CHECK(r.verdict == PCellVerdict::InUpToBound);
  REQUIRE(r.t_max.has_value());
  CHECK(*r.t_max == 20);
  CHECK(in_pcell_k0(m3, cls(m3, "10H-9E1"), {}).verdict == PCellVerdict::InUpToBound);
  CHECK(in_pcell_k0(m3, cls(m3, "-H"), {}).verdict == PCellVerdict::NegativeOnMinusK0);
  r = in_pcell_k0(m3, cls(m3, "3H+2E1"), {});
  CHECK(r.verdict == PCellVerdict::ViolatedBy);
  REQUIRE(r.witness.has_value());
  CHECK(pair(m3, cls(m3, "3H+2E1"), *r.witness) < 0);
  CHECK(to_string(PCellVerdict::ViolatedBy) == "violated-by");
}
