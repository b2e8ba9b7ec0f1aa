#include <random>

#include "doctest.h"
#include "support/helpers.hpp"
#include "zslab/errors.hpp"
#include "zslab/sequence.hpp"

using namespace zslab;
using zslab::testing::seq;

TEST_CASE("parse_group normal form") {
  CHECK(Group::parse("C3").name() == "C3");
  CHECK(Group::parse("C2xC2xC4").name() == "C2xC2xC4");
  CHECK(Group::parse("C2xC3").name() == "C6");
  CHECK(Group::parse("c4xC2").name() == "C2xC4");
  CHECK(Group::parse("C6xC4").name() == "C2xC12");
  CHECK(Group::parse("C1").name() == "C1");
  CHECK(Group::parse("C1xC5xC1").name() == "C5");
  CHECK(Group::parse("C12xC18").name() == "C6xC36");
  CHECK(Group::parse("C2xC3").order() == 6);
  CHECK(Group::parse("C1").order() == 1);
  CHECK(Group::parse("C1").exponent() == 1);
}

TEST_CASE("parse_group rejects malformed input") {
  CHECK_THROWS_AS(Group::parse(""), ParseError);
  CHECK_THROWS_AS(Group::parse("C0"), ParseError);
  CHECK_THROWS_AS(Group::parse("C"), ParseError);
  CHECK_THROWS_AS(Group::parse("Z3"), ParseError);
  CHECK_THROWS_AS(Group::parse("C3x"), ParseError);
  CHECK_THROWS_AS(Group::parse("C3*C3"), ParseError);
  CHECK_THROWS_AS(Group::parse("C-3"), ParseError);
  CHECK_THROWS_AS(Group(std::vector<int>{4, 2}), ParseError);
  CHECK_THROWS_AS(Group(std::vector<int>{1}), ParseError);
}

TEST_CASE("parse_group is idempotent on its rendering") {
  for (const char* s : {"C2xC3", "C4xC6xC9", "C1", "C2xC2xC2xC2", "C10xC15"}) {
    const std::string once = Group::parse(s).name();
    CHECK(Group::parse(once).name() == once);
  }
}

TEST_CASE("element_order") {
  const Group c4 = Group::parse("C4");
  CHECK(c4.element_order(c4.zero()) == 1);
  CHECK(c4.element_order(c4.element({2})) == 2);
  const Group g = Group::parse("C2xC4");
  CHECK(g.element_order(g.element({1, 1})) == 4);
  CHECK(g.element_order(g.element({1, 2})) == 2);
  CHECK(Group::parse("C1").element_order(Element{0}) == 1);
  for (std::string name : {"C6", "C2xC2xC4", "C3xC3"}) {
    const Group h = Group::parse(name);
    for (Element e : h.elements()) CHECK(h.exponent() % h.element_order(e) == 0);
  }
}

TEST_CASE("element lexicographic order matches coordinates") {
  const Group g = Group::parse("C2xC4");
  const auto all = g.elements();
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(g.coords(all[i - 1]) < g.coords(all[i]));
  CHECK(g.parse_element(g.format(g.element({1, 3}))) == g.element({1, 3}));
}

TEST_CASE("sequence text form") {
  const Group c4 = Group::parse("C4");
  const Sequence s = seq(c4, "2+1^2");
  CHECK(s.to_string() == "1^2+2");
  CHECK(s.size() == 3);
  CHECK(seq(c4, "1+1+2") == s);
  CHECK(seq(c4, "").empty());
  CHECK(seq("C2xC2", "1,1+0,1+1,0").to_string() == "0,1+1,0+1,1");
  CHECK(seq("C1", "0^3").to_string() == "0^3");
  CHECK_THROWS_AS(seq(c4, "1^0"), ParseError);
  CHECK_THROWS_AS(seq(c4, "1+"), ParseError);
  CHECK_THROWS_AS(seq(c4, "1,2"), ParseError);
  CHECK_THROWS_AS(seq(c4, "x"), ParseError);
}

TEST_CASE("apply_map") {
  const Group c5 = Group::parse("C5");
  CHECK(apply_map(GroupMap::scaling(c5, 2), seq(c5, "1^5")) == seq(c5, "2^5"));
  const Sequence s = seq(c5, "1^2+3+4");
  CHECK(apply_map(GroupMap::identity(c5), s) == s);

  const Group v4 = Group::parse("C2xC2");
  const GroupMap swap(v4, {v4.element({0, 1}), v4.element({1, 0})});
  CHECK(swap.is_isomorphism());
  const Sequence t = seq(v4, "1,0+0,1+1,1");
  CHECK(apply_map(swap, t) == t);

  CHECK_THROWS_AS(GroupMap(c5, {c5.element({1}), c5.element({1})}), std::invalid_argument);
  const Group c4 = Group::parse("C4");
  CHECK_FALSE(GroupMap::scaling(c4, 2).is_isomorphism());
  CHECK_THROWS_AS(apply_map(GroupMap::identity(c4), t), GroupMismatch);
}

TEST_CASE("sigma") {
  CHECK(sigma(seq("C3", "")) == Element{0});
  CHECK(sigma(seq("C3", "1^3")) == Element{0});
  CHECK(sigma(seq("C4", "1^2+2")) == Element{0});
  const Group c4 = Group::parse("C4");
  CHECK(sigma(seq(c4, "1^3")) == c4.element({3}));
}

TEST_CASE("classify") {
  auto c = classify(seq("C3", "1+2"));
  CHECK(c.is_zero_sum);
  CHECK_FALSE(c.is_zero_sumfree);
  CHECK(c.is_squarefree);

  c = classify(seq("C3", "1^2"));
  CHECK_FALSE(c.is_zero_sum);
  CHECK(c.is_zero_sumfree);
  CHECK_FALSE(c.is_squarefree);

  CHECK_FALSE(classify(seq("C5", "0+1")).is_zero_sumfree);
  CHECK_FALSE(classify(seq("C5", "0")).is_zero_sumfree);

  c = classify(seq("C3", ""));
  CHECK(c.is_empty);
  CHECK(c.is_zero_sum);
  CHECK(c.is_zero_sumfree);

  CHECK(is_zero_sumfree(seq("C5", "1^4")));
  CHECK_FALSE(is_zero_sumfree(seq("C5", "1^5")));
  CHECK(is_zero_sumfree(seq("C2xC2", "0,1+1,0")));
  CHECK_FALSE(is_zero_sumfree(seq("C2xC2", "0,1+1,0+1,1")));
}

TEST_CASE("divide and negate") {
  CHECK(divide(seq("C3", "1^3+2^3"), seq("C3", "1+2")) == seq("C3", "1^2+2^2"));
  const Sequence b = seq("C4", "1^2+3");
  CHECK(divide(b, b).empty());
  CHECK_THROWS_AS(divide(seq("C3", "1^2"), seq("C3", "2")), NotADivisor);
  CHECK_THROWS_AS(divide(seq("C3", "1^2"), seq("C4", "1")), GroupMismatch);

  CHECK(negate(seq("C3", "1^3")) == seq("C3", "2^3"));
  CHECK(negate(seq("C7", "2+5")) == seq("C7", "2+5"));
  CHECK(negate(seq("C5", "1^4+3^2")) == seq("C5", "4^4+2^2"));
}

TEST_CASE("sequence algebra properties") {
  std::mt19937_64 rng(7);
  for (std::string name : {"C5", "C2xC4", "C3xC3", "C2xC2xC2"}) {
    const Group g = Group::parse(name);
    for (int trial = 0; trial < 60; ++trial) {
      const Sequence s = testing::random_sequence(g, rng, 8);
      const Sequence t = testing::random_sequence(g, rng, 8);
      CHECK(sigma(s * t) == g.add(sigma(s), sigma(t)));
      CHECK(negate(negate(s)) == s);
      CHECK(sigma(negate(s)) == g.neg(sigma(s)));
      CHECK(divide(s * t, t) == s);

      const GroupMap m = testing::random_automorphism(g, rng);
      const Sequence ms = apply_map(m, s);
      CHECK(ms.size() == s.size());
      const auto a = classify(s);
      const auto b = classify(ms);
      CHECK(a.is_zero_sum == b.is_zero_sum);
      CHECK(a.is_zero_sumfree == b.is_zero_sumfree);
      CHECK(a.is_squarefree == b.is_squarefree);
      CHECK(apply_map(m, s * t) == ms * apply_map(m, t));
      CHECK(Sequence::parse(g, s.to_string()) == s);
    }
  }
}
