#include "doctest.h"
#include "support/helpers.hpp"
#include "zslab/errors.hpp"
#include "zslab/property_p.hpp"

using namespace zslab;
using zslab::testing::render;
using zslab::testing::seq;

TEST_CASE("check_property_p examples") {
  const Group c5 = Group::parse("C5");
  const auto w = check_property_p(c5);
  REQUIRE(w);
  CHECK(w->g1 == Element{1});
  CHECK(w->g2 == Element{1});
  CHECK(w->u1.to_string() == "1^5");
  CHECK(w->u2.to_string() == "2^5");

  CHECK_FALSE(check_property_p(Group::parse("C4")));

  const Group v4 = Group::parse("C2xC2");
  const auto wv = check_property_p(v4);
  REQUIRE(wv);
  CHECK(v4.format(wv->g1) == "0,1");
  CHECK(v4.format(wv->g2) == "1,0");
  CHECK(wv->u1.to_string() == "0,1+1,0+1,1");
  CHECK(wv->u2.to_string() == "0,1+1,0+1,1");

  CHECK_THROWS_AS(check_property_p(Group::parse("C2")), GroupTooSmall);
  CHECK_THROWS_AS(check_property_p(Group::parse("C1")), GroupTooSmall);
}

TEST_CASE("Property P and P* truth table") {
  for (std::string name : {"C3", "C5", "C7", "C9", "C2xC2", "C3xC3", "C2xC4"}) {
    const auto cat = enumerate_atoms(Group::parse(name));
    const auto w = check_property_p(cat);
    CAPTURE(name);
    REQUIRE(w);
    CHECK(witness_valid(*w, cat));
  }
  for (std::string name : {"C4", "C6", "C8", "C10"}) {
    CAPTURE(name);
    CHECK_FALSE(check_property_p(Group::parse(name)));
  }
  for (std::string name : {"C3", "C5", "C7", "C2xC2", "C3xC3", "C2xC2xC2"}) {
    CAPTURE(name);
    CHECK(check_property_p_star(Group::parse(name)));
  }
  for (std::string name : {"C4", "C6", "C8", "C9", "C2xC4"}) {
    CAPTURE(name);
    CHECK_FALSE(check_property_p_star(Group::parse(name)));
  }
}

TEST_CASE("P* implies P") {
  for (std::string name : {"C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C2xC2", "C2xC4", "C3xC3",
                           "C2xC2xC2", "C2xC6"}) {
    const auto cat = enumerate_atoms(Group::parse(name));
    CAPTURE(name);
    if (check_property_p_star(cat)) CHECK(check_property_p(cat));
  }
}

TEST_CASE("check_property_p_star examples") {
  const auto c3 = check_property_p_star(Group::parse("C3"));
  REQUIRE(c3);
  CHECK(c3->at(Element{1}).to_string() == "1^3");
  CHECK(c3->at(Element{2}).to_string() == "2^3");
  CHECK_FALSE(check_property_p_star(Group::parse("C4")));
  const auto v4 = check_property_p_star(Group::parse("C2xC2"));
  REQUIRE(v4);
  CHECK(v4->size() == 3);
  for (const auto& [g, a] : *v4) CHECK(a.to_string() == "0,1+1,0+1,1");
}

TEST_CASE("interval shifter for C3") {
  const auto cat = enumerate_atoms(Group::parse("C3"));
  CHECK(scan_max_delta(cat, 9) == 1);
  const auto s = build_interval_shifter(cat);
  CHECK(s.a_prime.to_string() == "1^6+2^6");
  CHECK(s.a_prime_lengths.lengths() == std::vector<std::size_t>{4, 5, 6});
  CHECK(s.has_min_plus_one);
  CHECK(s.has_max_minus_one);
  CHECK(s.delta_bar == 2);
  CHECK(s.k == 2);
  CHECK(s.a_star.to_string() == "1^12+2^12");

  const auto supplied = build_interval_shifter(cat, std::size_t{1});
  CHECK(supplied.k == 2);
  CHECK(supplied.delta_policy == "supplied");

  const auto r = verify_shifter(cat, s.a_star, {seq("C3", "1^3+2^3"), seq("C3", "1^6+2^6")}, ShifterMode::interval);
  REQUIRE(r.samples.size() == 2);
  CHECK(r.samples[0].lengths.min() == 10);
  CHECK(r.samples[0].lengths.max() == 15);
  CHECK(r.samples[0].is_interval);
  CHECK(r.samples[0].elasticity.to_string() == "3/2");
  CHECK(r.samples[1].is_interval);
  CHECK(r.samples[1].elasticity.to_string() == "3/2");
  CHECK(r.all_pass);

  CHECK(verify_shifter(cat, s.a_star, {}, ShifterMode::interval).all_pass);
  CHECK_THROWS_AS(verify_shifter(cat, s.a_star, {seq("C3", "1^3")}, ShifterMode::interval), SampleNotMaxElastic);
  CHECK_THROWS_AS(build_interval_shifter(enumerate_atoms(Group::parse("C4"))), PropertyPFails);
}

TEST_CASE("interval shifter A' always has both penultimate lengths") {
  for (std::string name : {"C3", "C5", "C7", "C2xC2", "C2xC4", "C3xC3"}) {
    const auto cat = enumerate_atoms(Group::parse(name));
    const auto s = build_interval_shifter(cat, std::size_t{1});
    const auto& l = s.a_prime_lengths;
    CAPTURE(name);
    CHECK(s.has_min_plus_one);
    CHECK(s.has_max_minus_one);
    CHECK(l.contains(l.min()));
    CHECK(l.contains(l.max()));
    CHECK(is_max_elastic(s.a_prime, cat));
  }
}

TEST_CASE("interval shifter for C5 end to end") {
  const auto cat = enumerate_atoms(Group::parse("C5"));
  const auto s = build_interval_shifter(cat);
  CHECK(s.a_prime.to_string() == "1^5+2^5+3^5+4^5");
  CHECK(s.delta_bar == 6);
  CHECK(s.k == 6);
  const auto samples = default_shifter_samples(cat);
  CHECK(samples.size() == 5);
  const auto r = verify_shifter(cat, s.a_star, samples, ShifterMode::interval, s.k);
  CHECK(r.all_pass);
  const auto star = length_set(s.a_star, cat);
  for (const auto& smp : r.samples) {
    const auto la = length_set(smp.a, cat);
    CHECK(smp.lengths.max() == star.max() + la.max());
    CHECK(smp.lengths.min() == star.min() + la.min());
  }
}

TEST_CASE("catenary shifter") {
  const auto c3 = enumerate_atoms(Group::parse("C3"));
  const Sequence s3 = build_catenary_shifter(c3);
  CHECK(s3.to_string() == "1^6+2^6");
  const auto r3 = verify_shifter(c3, s3, default_shifter_samples(c3), ShifterMode::catenary3);
  CHECK(r3.all_pass);
  for (const auto& smp : r3.samples) CHECK(*smp.catenary <= 3);

  const auto v4 = enumerate_atoms(Group::parse("C2xC2"));
  const Sequence sv = build_catenary_shifter(v4);
  CHECK(sv.to_string() == "0,1^6+1,0^6+1,1^6");
  std::vector<Element> supp = sv.support();
  supp.insert(supp.begin(), Element{0});
  CHECK(supp == v4.group().elements());
  CHECK(verify_shifter(v4, sv, default_shifter_samples(v4), ShifterMode::catenary3).all_pass);

  CHECK_THROWS_AS(build_catenary_shifter(enumerate_atoms(Group::parse("C4"))), PropertyPStarFails);
  CHECK_THROWS_AS(verify_shifter(c3, s3, {seq("C3", "1^6+2^6")}, ShifterMode::catenary3, 0, 2),
                  FactorizationSetTooLarge);
}
