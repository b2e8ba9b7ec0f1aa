#include <filesystem>
#include <random>

#include "doctest.h"
#include "support/helpers.hpp"
#include "support/oracle.hpp"
#include "zslab/atoms.hpp"
#include "zslab/errors.hpp"

using namespace zslab;
using zslab::testing::render;
using zslab::testing::seq;

namespace {

std::vector<std::string> nonzero_atoms(const AtomCatalog& cat) {
  std::vector<std::string> out;
  for (const auto& a : cat.atoms())
    if (a.to_string() != "0" && a.to_string() != "0,0" && a.to_string() != "0,0,0") out.push_back(a.to_string());
  return out;
}

}  // namespace

TEST_CASE("is_atom") {
  CHECK(is_atom(seq("C3", "1^3")));
  CHECK(is_atom(seq("C4", "1^2+2")));
  CHECK_FALSE(is_atom(seq("C4", "1^2+2^2")));
  CHECK(is_atom(seq("C4", "0")));
  CHECK_FALSE(is_atom(seq("C4", "")));
  CHECK_FALSE(is_atom(seq("C4", "0+1+3")));
  CHECK_FALSE(is_atom(seq("C4", "1^3")));
}

TEST_CASE("enumerate_atoms small groups") {
  CHECK(nonzero_atoms(enumerate_atoms(Group::parse("C3"))) ==
        std::vector<std::string>{"1+2", "1^3", "2^3"});
  CHECK(nonzero_atoms(enumerate_atoms(Group::parse("C4"))) ==
        std::vector<std::string>{"1+3", "2^2", "1^2+2", "2+3^2", "1^4", "3^4"});
  const auto v4 = nonzero_atoms(enumerate_atoms(Group::parse("C2xC2")));
  CHECK(v4 == std::vector<std::string>{"0,1^2", "1,0^2", "1,1^2", "0,1+1,0+1,1"});
  const auto trivial = enumerate_atoms(Group::parse("C1"));
  CHECK(trivial.size() == 1);
  CHECK(trivial[0].to_string() == "0");
  CHECK(davenport(trivial) == 1);
}

TEST_CASE("enumerate_atoms matches the brute-force oracle") {
  for (std::string name : {"C2", "C3", "C4", "C5", "C6", "C2xC2", "C7", "C8", "C2xC4", "C3xC3"}) {
    const Group g = Group::parse(name);
    const auto cat = enumerate_atoms(g);
    CAPTURE(name);
    CHECK(cat.complete());
    CHECK(render(cat.atoms()) == render([&] {
            auto v = oracle::naive_atoms(g, cat.davenport() + 1);
            std::sort(v.begin(), v.end(), canonical_less);
            return v;
          }()));
  }
}

TEST_CASE("davenport constants") {
  for (int n = 2; n <= 12; ++n) CHECK(davenport(Group::parse("C" + std::to_string(n))) == std::size_t(n));
  CHECK(davenport(Group::parse("C2xC2xC4")) == 6);
  CHECK(davenport(Group::parse("C3xC3")) == 5);
  CHECK(davenport(Group::parse("C2xC2")) == 3);
  CHECK(davenport(Group::parse("C2xC2xC2")) == 4);
  CHECK(d_star(Group::parse("C6")) == 6);
  CHECK(d_star(Group::parse("C2xC2xC4")) == 6);
  CHECK(d_star(Group::parse("C1")) == 1);
  for (std::string name : {"C2xC4", "C2xC6", "C4xC4", "C2xC2xC2", "C3xC6"}) {
    const Group g = Group::parse(name);
    CHECK(d_star(g) <= davenport(g));
  }
}

TEST_CASE("truncated catalogs") {
  const Group c5 = Group::parse("C5");
  EnumerateOptions opts;
  opts.max_len = 3;
  const auto cat = enumerate_atoms(c5, opts);
  CHECK_FALSE(cat.complete());
  CHECK(cat.complete_up_to() == 3);
  for (const auto& a : cat.atoms()) CHECK(a.size() <= 3);
  CHECK_THROWS_AS(cat.require_covers(seq(c5, "1+4")), CatalogIncomplete);
  CHECK_THROWS_AS(davenport(cat), CatalogIncomplete);
  opts.max_len = 5;
  CHECK(enumerate_atoms(c5, opts).complete());
}

TEST_CASE("alphabet-restricted catalogs") {
  const Group c5 = Group::parse("C5");
  EnumerateOptions opts;
  opts.alphabet = {c5.element({1}), c5.element({4})};
  const auto cat = enumerate_atoms(c5, opts);
  CHECK(render(cat.atoms()) == std::vector<std::string>{"1+4", "1^5", "4^5"});
  CHECK_FALSE(cat.is_full_group());
  CHECK_THROWS_AS(cat.require_covers(seq(c5, "2+3")), CatalogIncomplete);
}

TEST_CASE("max_length_atoms") {
  CHECK(render(max_length_atoms(Group::parse("C4"))) == std::vector<std::string>{"1^4", "3^4"});
  CHECK(render(max_length_atoms(Group::parse("C3"))) == std::vector<std::string>{"1^3", "2^3"});
  for (int n = 2; n <= 12; ++n) {
    const Group g = Group::parse("C" + std::to_string(n));
    std::vector<std::string> expected;
    for (Element e : g.elements())
      if (g.element_order(e) == n)
        expected.push_back(Sequence::from_elements(g, std::vector<Element>(n, e)).to_string());
    std::sort(expected.begin(), expected.end(), [&](const std::string& a, const std::string& b) {
      return canonical_less(Sequence::parse(g, a), Sequence::parse(g, b));
    });
    CHECK(render(max_length_atoms(g)) == expected);
  }
}

TEST_CASE("catalog structure") {
  std::mt19937_64 rng(11);
  for (std::string name : {"C6", "C2xC4", "C3xC3", "C2xC2xC2"}) {
    const Group g = Group::parse(name);
    const auto cat = enumerate_atoms(g);
    CHECK(cat.index_of(seq(g, g.format(g.zero()))).has_value());
    for (Element e : g.elements())
      if (e != g.zero()) CHECK(cat.index_of(Sequence::from_elements(g, {e, g.neg(e)})).has_value());
    const GroupMap m = testing::random_automorphism(g, rng);
    for (const auto& a : cat.atoms()) {
      CHECK(is_atom(a));
      CHECK(a.size() >= 1);
      CHECK(a.size() <= cat.davenport());
      CHECK(cat.index_of(negate(a)).has_value());
      CHECK(cat.index_of(apply_map(m, a)).has_value());
      if (a.size() > 1)
        for (Element e : a.support()) CHECK(is_zero_sumfree(divide(a, Sequence::from_elements(g, {e}))));
    }
  }
}

TEST_CASE("catalog text round trip and cache") {
  const Group g = Group::parse("C2xC4");
  const auto cat = enumerate_atoms(g);
  const std::string text = render_catalog(cat);
  CHECK(text.rfind("group C2xC4\ndavenport 5\n", 0) == 0);
  CHECK(render_catalog(parse_catalog(text)) == text);
  CHECK_THROWS_AS(parse_catalog("grp C2\n"), ParseError);
  CHECK_THROWS_AS(parse_catalog("group C4\ndavenport 4\n1^2\n"), ParseError);

  const auto dir = std::filesystem::temp_directory_path() / "zslab-unit-cache";
  std::filesystem::remove_all(dir);
  AtomCache cache(dir);
  bool hit = true;
  const auto first = cache.get(g, std::nullopt, 1, &hit);
  CHECK_FALSE(hit);
  CHECK(std::filesystem::exists(dir / "C2xC4.atoms"));
  const auto second = cache.get(g, std::nullopt, 1, &hit);
  CHECK(hit);
  CHECK(render_catalog(first) == render_catalog(second));
  CHECK(render_catalog(second) == text);
  cache.get(Group::parse("C7"), std::size_t{4}, 1, &hit);
  CHECK(std::filesystem::exists(dir / "C7.4.atoms"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("parallel enumeration is deterministic") {
  const Group g = Group::parse("C3xC6");
  EnumerateOptions opts;
  const auto serial = enumerate_atoms(g, opts);
  opts.jobs = 4;
  CHECK(render_catalog(enumerate_atoms(g, opts)) == render_catalog(serial));
}
