#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "zcol/torus.hpp"

using namespace zcol;

namespace {

Tuple tp(std::initializer_list<long long> v) { return Tuple(v); }

BigVec left_restriction(const Diagram& d, const BigVec& coloring) {
  BigVec out((size_t)d.word.strands);
  for (int p = 0; p < d.word.strands; ++p)
    out[(size_t)p] = coloring[(size_t)d.left_ends[(size_t)p]];
  return out;
}

std::vector<BigVec> left_lattice(const Diagram& d) {
  std::vector<BigVec> out;
  for (const BigVec& v : coloring_lattice(d)) out.push_back(left_restriction(d, v));
  return out;
}

}  // namespace

TEST_CASE("torus parameter validation") {
  TorusParams t = torus_params(3, 2, 4);
  CHECK(t.p == 3);
  CHECK_NOTHROW(validate_torus_params(torus_params(-5, 3, 2)));
  CHECK_THROWS_WITH_AS(torus_params(2, 2, 3), doctest::Contains("InvalidParams"), error);  // gcd
  CHECK_THROWS_AS(torus_params(1, 2, 3), error);   // |p| < q
  CHECK_THROWS_AS(torus_params(3, 1, 1), error);   // r < 2
  CHECK_THROWS_AS(torus_params(0, 1, 3), error);   // p = 0
  CHECK_THROWS_AS(torus_params(3, 0, 2), error);   // q = 0
  CHECK_THROWS_AS(torus_params(3, -1, 2), error);  // q < 1
}

TEST_CASE("standard diagrams: crossing and component counts") {
  Diagram d = standard_diagram(torus_params(1, 1, 4));
  CHECK(d.crossings.size() == 12);
  CHECK(d.components.size() == 4);
  d = standard_diagram(torus_params(2, 1, 3));
  CHECK(d.crossings.size() == 12);
  CHECK(d.components.size() == 3);
  d = standard_diagram(torus_params(3, 2, 3));
  CHECK(d.crossings.size() == 45);
  CHECK(d.components.size() == 3);
  d = standard_diagram(torus_params(-2, 1, 3));  // mirror: negative letters
  CHECK(d.crossings.size() == 12);
  CHECK(d.crossings[0].sign == -1);
}

TEST_CASE("family delta and tau") {
  CHECK(family_delta(tp({1, 0, 0, 1})) == 0);
  CHECK(family_delta(tp({0, 1, 2})) == 1);
  CHECK(family_tau(tp({0, 1, 2})) == tp({2, 1, 0}));
  CHECK(family_tau(family_tau(tp({0, 1, 2}))) == tp({0, 1, 2}));
  // Odd length: tau is an involution and preserves delta.
  for (const Tuple& a : {tp({3, -1, 4}), tp({2, 2, 2, 0, 7})}) {
    CHECK(family_tau(family_tau(a)) == a);
    CHECK(family_delta(family_tau(a)) == family_delta(a));
  }
  // family_delta matches the tuple-rack alternating sum for odd length.
  CHECK(family_delta(tp({5, 2, 9})) == alt_sum(tp({5, 2, 9})));
}

TEST_CASE("one full twist acts on left ends") {
  CHECK(one_twist(tp({1, 0, 0, 1})) == tp({2, 2, 1, 1}));
  // The twist is exactly what propagating one twist's worth of letters does.
  BraidWord one = torus_braid(1, 4);
  auto prop = propagate<long long>(one, {1, 0, 0, 1});
  CHECK(prop.final_colors == one_twist(tp({1, 0, 0, 1})));
  prop = propagate<long long>(torus_braid(1, 5), {3, 1, 4, 1, 5});
  CHECK(prop.final_colors == one_twist(tp({3, 1, 4, 1, 5})));
}

TEST_CASE("classification set: case tags and ranks") {
  ClassificationSet c = classification_A(torus_params(1, 1, 4));
  CHECK(c.tag == FamilyCase::REven);
  CHECK(c.rank() == 3);
  c = classification_A(torus_params(2, 1, 3));
  CHECK(c.tag == FamilyCase::ROddPEven);
  CHECK(c.rank() == 3);
  c = classification_A(torus_params(3, 2, 3));
  CHECK(c.tag == FamilyCase::ROddQEven);
  CHECK(c.rank() == 3);
  c = classification_A(torus_params(1, 1, 3));
  CHECK(c.tag == FamilyCase::AllOdd);
  CHECK(c.rank() == 1);
  c = classification_A(torus_params(1, 1, 2));
  CHECK(c.tag == FamilyCase::REven);
  CHECK(c.rank() == 1);
}

TEST_CASE("classification set: membership") {
  ClassificationSet c = classification_A(torus_params(1, 1, 4));
  CHECK(c.contains(BigVec{1, 0, 0, 1}));
  CHECK(c.contains(BigVec{5, 5, 5, 5}));
  CHECK_FALSE(c.contains(BigVec{1, 0, 0, 2}));  // delta != 0

  c = classification_A(torus_params(2, 1, 3));
  CHECK(c.contains(BigVec{7, -2, 9}));  // everything

  c = classification_A(torus_params(3, 2, 3));
  CHECK(c.contains(BigVec{0, 1, 2, 2, 1, 0}));  // (a, tau(a))
  CHECK(c.contains(BigVec{2, 1, 0, 0, 1, 2}));
  CHECK_FALSE(c.contains(BigVec{0, 1, 2, 0, 1, 2}));  // second block must be tau(a)

  c = classification_A(torus_params(1, 1, 3));
  CHECK(c.contains(BigVec{4, 4, 4}));
  CHECK_FALSE(c.contains(BigVec{4, 4, 5}));

  // Wrong length is never a member.
  CHECK_FALSE(c.contains(BigVec{4, 4}));
}

TEST_CASE("classification set: generators close and kernel lies inside") {
  for (TorusParams t : {torus_params(1, 1, 4), torus_params(2, 1, 3), torus_params(3, 2, 3),
                        torus_params(1, 1, 3), torus_params(3, 1, 2), torus_params(-3, 2, 4)}) {
    Diagram d = standard_diagram(t);
    ClassificationSet c = classification_A(t);
    for (const BigVec& g : c.generators) {
      CHECK(c.contains(g));
      BigVec full = coloring_from_seed(d, g);  // throws if it fails to close
      CHECK(is_valid_coloring(d, full));
    }
    for (const BigVec& v : coloring_lattice(d)) CHECK(c.contains(left_restriction(d, v)));
    CHECK(c.rank() == lattice_rank(coloring_lattice(d)));
  }
}

TEST_CASE("classification set: bounded enumeration") {
  ClassificationSet c = classification_A(torus_params(1, 1, 4));
  auto members = c.enumerate_box(0, 1);
  CHECK(members.size() == 6);  // a1+a3 = a2+a4 over {0,1}^4
  for (const BigVec& m : members) CHECK(c.contains(m));
  CHECK(std::is_sorted(members.begin(), members.end()));

  auto constants = classification_A(torus_params(1, 1, 3)).enumerate_box(-1, 1);
  CHECK(constants.size() == 3);

  CHECK_THROWS_WITH_AS(classification_A(torus_params(2, 1, 3)).enumerate_box(-50, 50, 100),
                       doctest::Contains("BudgetExceeded"), error);
}

TEST_CASE("four-color catalogue") {
  FourColorSet f = classification_A4(4);
  CHECK(f.tuples == std::vector<Tuple>{tp({1, 0, 0, 1}), tp({1, 1, 2, 2}), tp({2, 2, 1, 1}),
                                       tp({2, 3, 3, 2})});
  CHECK(f.contains(tp({2, 2, 1, 1})));
  CHECK_FALSE(f.contains(tp({1, 1, 1, 1})));

  CHECK(classification_A4(2).tuples.empty());

  f = classification_A4(6);
  CHECK(f.tuples.size() == 12);  // 2^{6/2+1} - 4
  for (const Tuple& a : f.tuples) {
    CHECK(*std::min_element(a.begin(), a.end()) >= 0);
    CHECK(*std::max_element(a.begin(), a.end()) <= 3);
  }
  CHECK(std::is_sorted(f.tuples.begin(), f.tuples.end()));

  CHECK_THROWS_WITH_AS(classification_A4(3), doctest::Contains("OddR"), error);
  CHECK_THROWS_AS(classification_A4(0), error);
}

TEST_CASE("one twist permutes the four-color catalogue") {
  for (long long r : {4LL, 6LL}) {
    FourColorSet f = classification_A4(r);
    std::set<Tuple> as_set(f.tuples.begin(), f.tuples.end());
    std::set<Tuple> images;
    for (const Tuple& a : f.tuples) {
      Tuple b = one_twist(a);
      CHECK(as_set.count(b) == 1);
      images.insert(b);
    }
    CHECK(images == as_set);  // bijection
  }
  // The r = 4 orbit is a single 4-cycle.
  Tuple a = tp({1, 0, 0, 1});
  Tuple b = one_twist(a);
  CHECK(b == tp({2, 2, 1, 1}));
  b = one_twist(b);
  CHECK(b == tp({2, 3, 3, 2}));
  b = one_twist(b);
  CHECK(b == tp({1, 1, 2, 2}));
  CHECK(one_twist(b) == a);
}

TEST_CASE("constructive seeds per parity case") {
  SeedColoring s = seed_coloring(torus_params(1, 1, 4));
  CHECK(s.blocks == std::vector<Tuple>{tp({1, 0, 0, 1})});
  CHECK(s.flat == BigVec{1, 0, 0, 1});
  CHECK(s.expected_palette == std::vector<long long>{0, 1, 2, 3});
  CHECK_FALSE(s.degenerate_r2);

  s = seed_coloring(torus_params(2, 1, 3));
  CHECK(s.flat == BigVec{1, 0, 1});
  CHECK(s.expected_palette == std::vector<long long>{0, 1, 2, 3, 4});

  s = seed_coloring(torus_params(3, 2, 3));
  CHECK(s.blocks == std::vector<Tuple>{tp({2, 1, 0}), tp({0, 1, 2})});
  CHECK(s.flat == BigVec{2, 1, 0, 0, 1, 2});

  s = seed_coloring(torus_params(3, 2, 4));  // r even wins over q even
  CHECK(s.blocks == std::vector<Tuple>{tp({1, 0, 0, 1}), tp({1, 0, 0, 1})});

  s = seed_coloring(torus_params(1, 1, 2));
  CHECK(s.degenerate_r2);
  CHECK(s.flat == BigVec{1, 1});

  CHECK_THROWS_WITH_AS(seed_coloring(torus_params(1, 1, 3)),
                       doctest::Contains("UnsupportedParity"), error);
  CHECK_THROWS_AS(seed_coloring(torus_params(3, 1, 5)), error);
}

TEST_CASE("constructive seeds close with the claimed palette") {
  for (TorusParams t : {torus_params(1, 1, 4), torus_params(3, 1, 4), torus_params(3, 2, 4),
                        torus_params(1, 1, 6), torus_params(2, 1, 3), torus_params(4, 1, 3),
                        torus_params(3, 2, 3), torus_params(2, 1, 5)}) {
    SeedColoring s = seed_coloring(t);
    Diagram d = standard_diagram(t);
    BigVec full = coloring_from_seed(d, s.flat);
    CHECK(is_valid_coloring(d, full));
    std::set<BigInt> palette(full.begin(), full.end());
    std::set<BigInt> expect;
    for (long long c : s.expected_palette) expect.insert(c);
    CHECK(palette == expect);
  }
}

TEST_CASE("parallel image prediction") {
  Diagram trefoil = close_braid(torus_braid(3, 2));
  Diagram fig8 = close_braid(parse_braid("3: 1 -2 1 -2"));
  Diagram t72 = close_braid(torus_braid(7, 2));
  Diagram stab = close_braid(parse_braid("3: 1 1 1 -2"));

  auto ranks = [](const Diagram& d) {
    std::vector<long long> out;
    for (int n = 2; n <= 4; ++n) out.push_back(predicted_parallel_image(d, n).rank());
    return out;
  };
  CHECK(ranks(trefoil) == std::vector<long long>{1, 1, 3});
  CHECK(ranks(fig8) == std::vector<long long>{2, 3, 4});
  CHECK(ranks(t72) == std::vector<long long>{1, 1, 3});
  CHECK(ranks(stab) == std::vector<long long>{1, 3, 3});

  // Members really are fixed by tau^w.
  ParallelPrediction pp = predicted_parallel_image(trefoil, 4);
  CHECK(pp.writhe == 3);
  for (const BigVec& b : pp.basis) {
    Tuple t((size_t)4);
    for (int i = 0; i < 4; ++i) t[(size_t)i] = b[(size_t)i].convert_to<long long>();
    CHECK(zn_tau_power(t, pp.writhe) == t);
  }
  // Odd n, odd w: constants only.
  pp = predicted_parallel_image(trefoil, 3);
  CHECK(pp.basis == std::vector<BigVec>{BigVec{1, 1, 1}});

  CHECK_THROWS_WITH_AS(predicted_parallel_image(close_braid(torus_braid(2, 2)), 2),
                       doctest::Contains("ComponentCountNotOne"), error);
  CHECK_THROWS_AS(predicted_parallel_image(trefoil, 0), error);
}

TEST_CASE("transport rules") {
  CHECK(transport(tp({0, 1, 2}), 1) == tp({2, 1, 0}));
  CHECK(transport(tp({0, 1, 2}), 0) == tp({0, 1, 2}));
  CHECK(transport(tp({5}), 1) == tp({5}));
  CHECK_THROWS_WITH_AS(transport(tp({1, 2}), 1), doctest::Contains("UnsupportedParity"), error);
  CHECK_THROWS_AS(transport(tp({1, 2, 3}), 2), error);

  // transport_power = iterated tau, both parities, negative counts too.
  for (const Tuple& a : {tp({1, 2}), tp({0, 1, 2}), tp({3, 1, 4, 1})}) {
    CHECK(transport_power(a, 0) == a);
    CHECK(transport_power(a, 1) == zn_tau(a));
    CHECK(transport_power(a, 5) == zn_tau_power(a, 5));
    CHECK(transport_power(transport_power(a, -3), 3) == a);
  }
  // Odd length: the parity rule and the power rule agree.
  CHECK(transport_power(tp({0, 1, 2}), 7) == transport(tp({0, 1, 2}), 1));
  CHECK(transport_power(tp({0, 1, 2}), 8) == transport(tp({0, 1, 2}), 0));
}

TEST_CASE("minimal palette verifier") {
  VerificationReport rep = verify_minimal_palette(torus_params(1, 1, 4));
  CHECK(rep.all_confirmed());
  CHECK(rep.hypothesis_consistent);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].claimed == "mincol=4");
  CHECK(rep.rows[0].computed == "mincol=4");
  CHECK(rep.rows[0].witness == "(1,0,0,1)");

  rep = verify_minimal_palette(torus_params(2, 1, 3));
  CHECK(rep.all_confirmed());
  CHECK(rep.rows[0].claimed == "mincol=5");
  CHECK(rep.rows[0].computed == "mincol=5");
  CHECK(rep.rows[0].witness == "(1,0,1)");

  rep = verify_minimal_palette(torus_params(1, 1, 2));
  CHECK_FALSE(rep.all_confirmed());
  CHECK_FALSE(rep.hypothesis_consistent);
  for (const ReportRow& row : rep.rows) CHECK(row.status != Status::Confirmed);

  rep = verify_minimal_palette(torus_params(1, 1, 3));  // all odd: no coloring claimed
  CHECK(rep.all_confirmed());
  CHECK(rep.rows[0].claimed == "not-colorable");
}

TEST_CASE("lattice classification verifier") {
  for (TorusParams t : {torus_params(1, 1, 4), torus_params(2, 1, 3), torus_params(3, 2, 3),
                        torus_params(1, 1, 3), torus_params(1, 1, 2), torus_params(-3, 2, 2)}) {
    VerificationReport rep = verify_classification(t);
    CHECK(rep.all_confirmed());
  }
}

TEST_CASE("four-color scan verifier") {
  VerificationReport rep = verify_four_color_scan(torus_params(1, 1, 4));
  CHECK(rep.all_confirmed());
  rep = verify_four_color_scan(torus_params(3, 1, 2));
  CHECK(rep.all_confirmed());  // both sides empty
  rep = verify_four_color_scan(torus_params(3, 2, 2));
  CHECK(rep.all_confirmed());
  CHECK_THROWS_WITH_AS(verify_four_color_scan(torus_params(2, 1, 3)), doctest::Contains("OddR"), error);
}

TEST_CASE("parallel verifier") {
  for (const char* word : {"2: 1 1 1", "3: 1 -2 1 -2", "2: 1 1 1 1 1 1 1", "3: 1 1 1 -2"}) {
    for (int n : {2, 3}) {
      VerificationReport rep = verify_parallel(parse_braid(word), n);
      CHECK(rep.all_confirmed());
    }
  }
  CHECK_THROWS_AS(verify_parallel(torus_braid(2, 2), 2), error);  // not a knot
}

TEST_CASE("verification grid") {
  GridSpec g;
  g.pmax = 3;
  g.qmax = 2;
  g.rmin = 2;
  g.rmax = 3;
  g.max_crossings = 60;
  VerificationReport rep = verify_grid(g);
  CHECK_FALSE(rep.hypothesis_consistent);  // the r = 2 instances
  CHECK_FALSE(rep.all_confirmed());

  // Instances: q=1 p in {±1,±2,±3} r in {2,3}; q=2 p=±3 r in {2,3}. Two rows each.
  CHECK(rep.rows.size() == 2u * (12 + 4));
  CHECK(std::is_sorted(rep.rows.begin(), rep.rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::tie(a.p, a.q, a.r, a.instance) < std::tie(b.p, b.q, b.r, b.instance);
  }));

  int vacuous_or_refuted_r2 = 0, confirmed_r2_equiv = 0;
  for (const ReportRow& row : rep.rows) {
    if (row.r == 2 && row.instance.find("colorable") != std::string::npos) {
      CHECK(row.computed.find("rank=1") != std::string::npos);
      if (row.status != Status::Confirmed) ++vacuous_or_refuted_r2;
      else ++confirmed_r2_equiv;
    }
    if (row.r == 3 || row.instance.find("colorable") == std::string::npos)
      CHECK(row.status == Status::Confirmed);
  }
  CHECK(vacuous_or_refuted_r2 == 8);  // every r=2 instance
  CHECK(confirmed_r2_equiv == 0);

  // Deterministic under any worker count.
  setenv("ZCOL_WORKERS", "3", 1);
  VerificationReport rep3 = verify_grid(g);
  setenv("ZCOL_WORKERS", "1", 1);
  VerificationReport rep1 = verify_grid(g);
  unsetenv("ZCOL_WORKERS");
  REQUIRE(rep3.rows.size() == rep.rows.size());
  REQUIRE(rep1.rows.size() == rep.rows.size());
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    CHECK(rep3.rows[i].computed == rep.rows[i].computed);
    CHECK(rep1.rows[i].status == rep.rows[i].status);
    CHECK(rep3.rows[i].witness == rep.rows[i].witness);
  }
}

TEST_CASE("cable closure vs standard torus diagram lattices") {
  // Even copy count: the left-end lattices agree.
  {
    CablePlan plan = cable(torus_braid(3, 2), 2);
    Diagram cab = close_braid(plan.cabled);
    Diagram tor = standard_diagram(torus_params(3, 2, 2));
    CHECK(lattice_equal(left_lattice(cab), left_lattice(tor)));
  }
  // Odd copy count: they genuinely differ (kink effect), ranks 1 vs 3.
  {
    CablePlan plan = cable(torus_braid(3, 2), 3);
    Diagram cab = close_braid(plan.cabled);
    Diagram tor = standard_diagram(torus_params(3, 2, 3));
    CHECK(lattice_rank(coloring_lattice(cab)) == 1);
    CHECK(lattice_rank(coloring_lattice(tor)) == 3);
    CHECK_FALSE(lattice_equal(left_lattice(cab), left_lattice(tor)));
  }
}
