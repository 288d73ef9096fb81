#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "soclelab/corpus.hpp"
#include "soclelab/ideals.hpp"
#include "soclelab/ring_spec.hpp"

using namespace soclelab;

namespace {

std::set<elem> as_set(const sided_ideal& I) {
  const auto v = I.elements();
  return {v.begin(), v.end()};
}

std::vector<ring_ptr> corpus_rings() {
  return {parse_ring_spec("F2"),     parse_ring_spec("F3"),
          parse_ring_spec("Z4"),     parse_ring_spec("Z6"),
          parse_ring_spec("U2(F2)"), parse_ring_spec("F2 x F2")};
}

// U2(F2) entry positions are (0,0),(0,1),(1,1), least significant first.
constexpr elem e11 = 1, e12 = 2, e22 = 4;

}  // namespace

TEST_CASE("principal ideals") {
  const auto z4 = make_zmod(4);
  CHECK(as_set(principal_ideal(z4, 2, side::left)) == std::set<elem>{0, 2});
  CHECK(as_set(principal_ideal(z4, 0, side::left)) == std::set<elem>{0});
  CHECK(as_set(principal_ideal(z4, 3, side::left)) == std::set<elem>{0, 1, 2, 3});

  const auto u = parse_ring_spec("U2(F2)");
  const auto I = principal_ideal(u, e12, side::left);
  CHECK(as_set(I) == std::set<elem>{0, e12});
}

TEST_CASE("ideal closure of generators") {
  const auto z6 = make_zmod(6);
  const elem gens[] = {2, 3};
  CHECK(ideal_closure(z6, gens, side::left).count() == 6);  // 2+3 is a unit
  CHECK(ideal_closure(z6, {}, side::left).count() == 1);
  const auto z4 = make_zmod(4);
  const elem two[] = {2};
  CHECK(as_set(ideal_closure(z4, two, side::left)) == std::set<elem>{0, 2});
}

TEST_CASE("annihilators") {
  const auto z4 = make_zmod(4);
  const elem two[] = {2}, zero[] = {0}, one[] = {1};
  CHECK(as_set(annihilator(z4, two, side::left)) == std::set<elem>{0, 2});
  CHECK(annihilator(z4, zero, side::left).count() == 4);
  CHECK(as_set(annihilator(z4, one, side::left)) == std::set<elem>{0});

  // one-sided annihilators differ in a noncommutative ring:
  // m*e12 kills iff the (0,0) entry vanishes, e12*m iff the (1,1) entry does
  const auto u = parse_ring_spec("U2(F2)");
  const elem t[] = {e12};
  CHECK(as_set(annihilator(u, t, side::left)) == std::set<elem>{0, e12, e22, e12 + e22});
  CHECK(as_set(annihilator(u, t, side::right)) == std::set<elem>{0, e11, e12, e11 + e12});
}

TEST_CASE("transporters") {
  const auto z4 = make_zmod(4);
  const auto whole = whole_ring_ideal(z4, side::left);
  for (elem a = 0; a < 4; ++a) CHECK(transporter(whole, a).count() == 4);
  CHECK(as_set(transporter(zero_ideal(z4, side::left), 2)) == std::set<elem>{0, 2});

  const auto z6 = make_zmod(6);
  sided_ideal E{z6, side::left, bitvec(6)};
  E.members.set(0);
  E.members.set(3);
  CHECK(as_set(transporter(E, 2)) == std::set<elem>{0, 3});

  CHECK_THROWS_AS(transporter(whole_ring_ideal(z6, side::right), 1), error);

  // the transporter of an ideal always contains it and stays an ideal
  for (const auto& I : all_ideals(z6, side::left))
    for (elem a = 0; a < 6; ++a) {
      const auto T = transporter(I, a);
      CHECK(I.members.is_subset_of(T.members));
      CHECK(is_one_sided_ideal(z6, T.members, side::left));
    }
}

TEST_CASE("essential ideals") {
  const auto z4 = make_zmod(4);
  sided_ideal two{z4, side::left, bitvec(4)};
  two.members.set(0);
  two.members.set(2);
  CHECK(is_essential(two));
  CHECK(is_essential(whole_ring_ideal(z4, side::left)));
  CHECK_FALSE(is_essential(zero_ideal(z4, side::left)));

  const auto z6 = make_zmod(6);
  sided_ideal evens{z6, side::left, bitvec(6)};
  for (elem e : {0, 2, 4}) evens.members.set(e);
  CHECK_FALSE(is_essential(evens));  // misses {0, 3}
}

TEST_CASE("dense ideals") {
  const auto f2 = make_prime_field(2);
  CHECK(is_dense(whole_ring_ideal(f2, side::left)));

  const auto z4 = make_zmod(4);
  sided_ideal two{z4, side::left, bitvec(4)};
  two.members.set(0);
  two.members.set(2);
  CHECK_FALSE(is_dense(two));
  CHECK_FALSE(is_dense(zero_ideal(z4, side::left)));

  CHECK_THROWS_AS(is_dense(whole_ring_ideal(z4, side::right)), error);
  CHECK(is_right_dense(whole_ring_ideal(z4, side::right)));
}

TEST_CASE("minimal ideals") {
  const auto z4 = make_zmod(4);
  auto mins = minimal_ideals(z4, side::left);
  REQUIRE(mins.size() == 1);
  CHECK(as_set(mins[0]) == std::set<elem>{0, 2});

  const auto f2 = make_prime_field(2);
  mins = minimal_ideals(f2, side::left);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].is_whole_ring());

  const auto z6 = make_zmod(6);
  mins = minimal_ideals(z6, side::left);
  REQUIRE(mins.size() == 2);
  std::set<std::set<elem>> got{as_set(mins[0]), as_set(mins[1])};
  CHECK(got == std::set<std::set<elem>>{{0, 3}, {0, 2, 4}});
}

TEST_CASE("socle by minimal-ideal sum") {
  const auto z4 = make_zmod(4);
  CHECK(as_set(socle(z4, side::left)) == std::set<elem>{0, 2});
  const auto z6 = make_zmod(6);
  CHECK(socle(z6, side::left).is_whole_ring());  // semisimple

  // the one-sided socles of the triangular ring differ
  const auto u = parse_ring_spec("U2(F2)");
  const auto socl = socle(u, side::left);
  const auto socr = socle(u, side::right);
  CHECK(as_set(socl) == std::set<elem>{0, e11, e12, e11 + e12});
  CHECK(as_set(socr) == std::set<elem>{0, e12, e22, e12 + e22});
  CHECK(socl.members != socr.members);
}

TEST_CASE("singular ideals") {
  const auto z4 = make_zmod(4);
  CHECK(as_set(singular_ideal(z4, side::left)) == std::set<elem>{0, 2});
  const auto f2 = make_prime_field(2);
  CHECK(singular_ideal(f2, side::left).is_zero());
  const auto z6 = make_zmod(6);
  CHECK(singular_ideal(z6, side::left).is_zero());
  const auto u = parse_ring_spec("U2(F2)");
  CHECK(singular_ideal(u, side::left).is_zero());
  CHECK(singular_ideal(u, side::right).is_zero());
}

TEST_CASE("all-ideal enumeration") {
  const auto z4 = make_zmod(4);
  auto ideals = all_ideals(z4, side::left);
  CHECK(ideals.size() == 3);
  CHECK(ideals.front().is_zero());
  CHECK(ideals.back().is_whole_ring());

  CHECK(all_ideals(make_prime_field(2), side::left).size() == 2);
  CHECK(all_ideals(make_zmod(6), side::left).size() == 4);  // divisor lattice

  caps tiny;
  tiny.oracle_cap = 3;
  try {
    all_ideals(z4, side::left, tiny);
    FAIL("cap ignored");
  } catch (const error& e) {
    CHECK(e.code() == errc::oracle_cap_exceeded);
  }
}

TEST_CASE("socle oracles agree on every corpus ring") {
  for (const auto& r : corpus_rings()) {
    INFO(r->name());
    for (side s : {side::left, side::right}) {
      const auto by_minimals = socle(r, s);
      const auto by_essentials = socle_by_essential_intersection(r, s);
      CHECK(by_minimals.members == by_essentials.members);
    }
  }
}

TEST_CASE("socle oracles agree at the oracle cap boundary") {
  // 1024 elements, exactly the default all-ideal gate
  const auto A =
      make_incidence_algebra(builtin_poset("vee"), make_zmod(4));
  for (side s : {side::left, side::right}) {
    const auto by_minimals = socle(A, s);
    const auto by_essentials = socle_by_essential_intersection(A, s);
    CHECK(by_minimals.members == by_essentials.members);
  }
}

TEST_CASE("socle and singular ideal are two-sided") {
  for (const auto& r : corpus_rings()) {
    INFO(r->name());
    for (side s : {side::left, side::right}) {
      CHECK(is_two_sided_ideal(r, socle(r, s).members));
      CHECK(is_two_sided_ideal(r, singular_ideal(r, s).members));
    }
  }
}

TEST_CASE("left singular ideal is the right annihilator of the left socle") {
  // exact for these rings: finite means Artinian
  for (const auto& r : corpus_rings()) {
    INFO(r->name());
    const auto soc = socle(r, side::left);
    const auto targets = soc.elements();
    const auto ann = annihilator(r, targets, side::right);
    CHECK(singular_ideal(r, side::left).members == ann.members);
  }
}

TEST_CASE("essentiality is upward closed and meet stable") {
  for (const char* spec : {"Z4", "Z6", "U2(F2)"}) {
    const auto r = parse_ring_spec(spec);
    INFO(r->name());
    for (side s : {side::left, side::right}) {
      const auto ideals = all_ideals(r, s);
      const principal_table pt(r, s);
      for (const auto& E : ideals) {
        if (!is_essential(E, pt)) continue;
        for (const auto& F : ideals) {
          if (E.members.is_subset_of(F.members)) CHECK(is_essential(F, pt));
          if (is_essential(F, pt)) CHECK(is_essential(intersect(E, F), pt));
        }
      }
    }
  }
}

TEST_CASE("dense left ideals are essential") {
  for (const char* spec : {"Z4", "Z6", "U2(F2)", "F2 x F2"}) {
    const auto r = parse_ring_spec(spec);
    INFO(r->name());
    const principal_table pt(r, side::left);
    for (const auto& D : all_ideals(r, side::left))
      if (is_dense(D)) CHECK(is_essential(D, pt));
  }
}

TEST_CASE("ideal sum and intersection stay ideals") {
  const auto z6 = make_zmod(6);
  const auto I = principal_ideal(z6, 2, side::left);
  const auto J = principal_ideal(z6, 3, side::left);
  const auto S = ideal_sum(I, J);
  CHECK(S.is_whole_ring());
  CHECK(is_one_sided_ideal(z6, S.members, side::left));
  CHECK(intersect(I, J).is_zero());
  CHECK_THROWS_AS(ideal_sum(I, whole_ring_ideal(z6, side::right)), error);
}

TEST_CASE("zero ring edge cases") {
  const auto z1 = make_zmod(1);
  CHECK(socle(z1, side::left).is_zero());
  CHECK(singular_ideal(z1, side::left).is_zero());
  CHECK(is_essential(zero_ideal(z1, side::left)));  // vacuously
  CHECK(all_ideals(z1, side::left).size() == 1);
}
