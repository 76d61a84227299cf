#include <doctest.h>

#include <numeric>

#include "zcol/braid.hpp"

using namespace zcol;

TEST_CASE("parse: flat words") {
  BraidWord w = parse_braid("2: 1 1");
  CHECK(w.strands == 2);
  CHECK(w.letters == std::vector<int>{1, 1});

  w = parse_braid("3: 1 -2 1 -2");
  CHECK(w.strands == 3);
  CHECK(w.letters == std::vector<int>{1, -2, 1, -2});

  w = parse_braid("1:");
  CHECK(w.strands == 1);
  CHECK(w.letters.empty());

  w = parse_braid("  4 :  -3   2 ");
  CHECK(w.strands == 4);
  CHECK(w.letters == std::vector<int>{-3, 2});
}

TEST_CASE("parse: groups and exponents") {
  BraidWord w = parse_braid("3: (1 2)^2");
  CHECK(w.letters == std::vector<int>{1, 2, 1, 2});

  // Negative exponent inverts the group: reverse and negate, repeated.
  w = parse_braid("3: (1 2)^-2");
  CHECK(w.letters == std::vector<int>{-2, -1, -2, -1});

  w = parse_braid("3: (1 2)^0");
  CHECK(w.letters.empty());

  w = parse_braid("4: 3 (1 (2)^2)^2 -3");
  CHECK(w.letters == std::vector<int>{3, 1, 2, 2, 1, 2, 2, -3});

  w = parse_braid("3: ( 1 -2 )^-1");
  CHECK(w.letters == std::vector<int>{2, -1});
}

TEST_CASE("parse: errors") {
  CHECK_THROWS_WITH_AS(parse_braid("2: 0"), doctest::Contains("MalformedWord"), error);
  CHECK_THROWS_AS(parse_braid("2: 2"), error);
  CHECK(parse_braid("2: -1").letters == std::vector<int>{-1});
  CHECK_THROWS_WITH_AS(parse_braid("2: -2"), doctest::Contains("GeneratorOutOfRange"), error);
  CHECK_THROWS_WITH_AS(parse_braid("0: 1"), doctest::Contains("NonPositiveStrands"), error);
  CHECK_THROWS_WITH_AS(parse_braid("-3:"), doctest::Contains("NonPositiveStrands"), error);
  CHECK_THROWS_AS(parse_braid(""), error);
  CHECK_THROWS_AS(parse_braid("2 1 1"), error);
  CHECK_THROWS_AS(parse_braid("2: (1"), error);
  CHECK_THROWS_AS(parse_braid("2: (1)"), error);     // group needs ^exp
  CHECK_THROWS_AS(parse_braid("2: 1)^2"), error);
  CHECK_THROWS_AS(parse_braid("2: x"), error);
  CHECK_THROWS_AS(parse_braid("2: 1 ^ 2"), error);
}

TEST_CASE("format round-trip") {
  for (const char* s : {"2: 1 1", "3: 1 -2 1 -2", "1:", "5: 4 -1 2 3 -4"}) {
    BraidWord w = parse_braid(s);
    CHECK(parse_braid(format_braid(w)) == w);
  }
  CHECK(format_braid(parse_braid("2: 1 1")) == "2: 1 1");
  CHECK(format_braid(parse_braid("1:")) == "1:");
  CHECK(format_braid(parse_braid("3: (1 2)^2")) == "3: 1 2 1 2");
}

TEST_CASE("torus_braid") {
  BraidWord w = torus_braid(3, 2);
  CHECK(w.strands == 2);
  CHECK(w.letters == std::vector<int>{1, 1, 1});

  w = torus_braid(2, 3);
  CHECK(w.letters == std::vector<int>{1, 2, 1, 2});

  w = torus_braid(-2, 3);
  CHECK(w.letters == std::vector<int>{-2, -1, -2, -1});

  w = torus_braid(0, 3);
  CHECK(w.strands == 3);
  CHECK(w.letters.empty());

  w = torus_braid(5, 1);
  CHECK(w.strands == 1);
  CHECK(w.letters.empty());

  CHECK_THROWS_WITH_AS(torus_braid(1, 0), doctest::Contains("NonPositiveStrands"), error);
}

TEST_CASE("writhe") {
  CHECK(writhe(parse_braid("3: 1 -2 1 -2")) == 0);
  CHECK(writhe(torus_braid(3, 2)) == 3);
  CHECK(writhe(torus_braid(7, 2)) == 7);
  CHECK(writhe(parse_braid("3: 1 1 1 -2")) == 2);
}

TEST_CASE("cable: doubled positive generator") {
  CablePlan plan = cable(parse_braid("2: 1"), 2);
  CHECK(plan.n == 2);
  CHECK(plan.cabled.strands == 4);
  CHECK(plan.cabled.letters == std::vector<int>{2, 1, 3, 2});
}

TEST_CASE("cable: sign and size bookkeeping") {
  CablePlan plan = cable(parse_braid("2: -1"), 2);
  CHECK(plan.cabled.letters == std::vector<int>{-2, -1, -3, -2});

  plan = cable(parse_braid("3: 1 -2 1 -2"), 3);
  CHECK(plan.cabled.strands == 9);
  CHECK(plan.cabled.letters.size() == 4u * 9u);
  // Each block stays inside the two bands it crosses.
  for (size_t t = 0; t < 4; ++t) {
    int src = plan.source.letters[t];
    int i = src > 0 ? src : -src;
    for (size_t k = 0; k < 9; ++k) {
      int l = plan.cabled.letters[9 * t + k];
      CHECK((l > 0) == (src > 0));
      int a = l > 0 ? l : -l;
      CHECK(a >= 3 * (i - 1) + 1);
      CHECK(a <= 3 * (i + 1) - 1);
    }
  }

  plan = cable(parse_braid("2: 1 1 1"), 1);
  CHECK(plan.cabled == plan.source);

  CHECK_THROWS_WITH_AS(cable(parse_braid("2: 1"), 0), doctest::Contains("InvalidParams"), error);
}

TEST_CASE("cable: band permutation swaps whole bands preserving internal order") {
  // Apply the cabled word of a single positive generator as a permutation.
  CablePlan plan = cable(parse_braid("2: 1"), 3);
  std::vector<int> pos(6);
  std::iota(pos.begin(), pos.end(), 0);
  for (int l : plan.cabled.letters) {
    int i = (l > 0 ? l : -l) - 1;
    std::swap(pos[i], pos[i + 1]);
  }
  CHECK(pos == std::vector<int>{3, 4, 5, 0, 1, 2});
}
