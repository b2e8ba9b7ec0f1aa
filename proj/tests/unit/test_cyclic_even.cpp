#include <random>

#include "doctest.h"
#include "support/helpers.hpp"
#include "zslab/cyclic_even.hpp"
#include "zslab/errors.hpp"

using namespace zslab;
using zslab::testing::render;
using zslab::testing::seq;

TEST_CASE("cyclic closed form matches the general enumeration") {
  for (int n = 3; n <= 10; ++n) {
    const Group g = Group::parse("C" + std::to_string(n));
    CAPTURE(n);
    CHECK(render(cyclic_max_elastic(n, 4 * n)) == render(enumerate_max_elastic(g, 4 * n)));
  }
}

TEST_CASE("max-length atoms of C_n are the g^n") {
  // cross-check of the cited inverse result, n <= 12
  for (int n = 3; n <= 12; ++n) {
    const Group g = Group::parse("C" + std::to_string(n));
    const auto max = max_length_atoms(g);
    CHECK(max.size() == units_mod(n).size());
    for (const auto& u : max) {
      REQUIRE(u.support().size() == 1);
      CHECK(g.element_order(u.support()[0]) == n);
    }
  }
}

TEST_CASE("verify_no_penultimate") {
  const auto r4 = verify_no_penultimate(4, 16);
  REQUIRE(r4.rows.size() == 2);
  CHECK(r4.rows[0].b.to_string() == "1^4+3^4");
  CHECK(r4.rows[0].lengths.lengths() == std::vector<std::size_t>{2, 4});
  CHECK(r4.rows[1].b.to_string() == "1^8+3^8");
  CHECK(r4.all_absent);
  CHECK(verify_no_penultimate(4, 32).all_absent);
  CHECK(verify_no_penultimate(6, 24).all_absent);
  CHECK(verify_no_penultimate(8, 32).all_absent);
  CHECK(verify_no_penultimate(10, 40).all_absent);

  const auto r3 = scan_penultimate(3, 12);
  CHECK_FALSE(r3.all_absent);
  CHECK(r3.rows[0].lengths.lengths() == std::vector<std::size_t>{2, 3});
  CHECK_THROWS_AS(verify_no_penultimate(3, 12), OddOrder);
  CHECK_THROWS_AS(verify_no_penultimate(2, 12), std::invalid_argument);
}

TEST_CASE("three-atom witness") {
  const auto w8 = build_three_atom_witness(8);
  CHECK(w8.a == 3);
  CHECK(w8.b == 3);
  CHECK(w8.a_prime.to_string() == "1^8+3^8");
  CHECK(w8.triple[0].to_string() == "1+3^5");
  CHECK(w8.triple[1].to_string() == "1^5+3");
  CHECK(w8.triple[2].to_string() == "1^2+3^2");
  CHECK(w8.atoms_ok);
  CHECK(w8.product_ok);
  CHECK(w8.doubled_lengths.min() == 4);
  CHECK(w8.min_plus_one);

  const auto w14 = build_three_atom_witness(14);
  CHECK(w14.a == 3);
  CHECK(w14.b == 5);
  CHECK(w14.triple[0].to_string() == "1+3^9");
  CHECK(w14.triple[1].to_string() == "1^11+3");
  CHECK(w14.triple[2].to_string() == "1^2+3^4");
  CHECK(w14.atoms_ok);
  CHECK(w14.product_ok);
  CHECK(w14.min_plus_one);

  for (int n : {8, 14, 20, 24, 26}) {
    const auto w = build_three_atom_witness(n);
    CAPTURE(n);
    CHECK(w.atoms_ok);
    CHECK(w.product_ok);
    CHECK(w.a_prime.size() == static_cast<std::size_t>(2 * n));
    std::size_t total = 0;
    for (const auto& t : w.triple) {
      CHECK(sigma(t) == Element{0});
      total += t.size();
    }
    CHECK(total == static_cast<std::size_t>(2 * n));
  }

  CHECK_THROWS_AS(build_three_atom_witness(4), NPlusOnePrime);
  CHECK_THROWS_AS(build_three_atom_witness(12), NPlusOnePrime);
  CHECK_THROWS_AS(build_three_atom_witness(9), OddOrder);
}

TEST_CASE("orbit representatives") {
  CHECK(units_mod(12) == std::vector<int>{1, 5, 7, 11});
  const auto reps = orbit_representatives(12, 2);
  CHECK(reps == std::vector<std::vector<int>>{{1, 1}, {1, 5}, {1, 7}, {1, 11}});
  // every multiset of units lies in the orbit of exactly one representative
  for (int n : {8, 10, 12}) {
    const auto units = units_mod(n);
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto r = orbit_representatives(n, k);
      std::set<std::vector<int>> covered;
      for (const auto& rep : r)
        for (int c : units) {
          std::vector<int> img;
          for (int x : rep) img.push_back(c * x % n);
          std::sort(img.begin(), img.end());
          covered.insert(img);
        }
      std::size_t all = 0;
      std::vector<int> cur;
      auto count = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() == k) {
          ++all;
          return;
        }
        for (std::size_t i = from; i < units.size(); ++i) {
          cur.push_back(units[i]);
          self(self, i);
          cur.pop_back();
        }
      };
      count(count, 0);
      CHECK(covered.size() == all);
    }
  }
}

TEST_CASE("remark54 search") {
  const auto c12 = remark54_search(12, 2);
  REQUIRE(c12.size() == 2);
  for (const auto& c : c12) {
    CHECK(c.exhausted);
    CHECK(c.solutions.empty());
  }
  CHECK(c12[0].k_prime == 1);
  CHECK(c12[0].unrestricted_solutions == 0);

  const auto c8 = remark54_search(8, 2);
  REQUIRE(c8.size() == 2);
  CHECK(c8[1].exhausted);
  REQUIRE_FALSE(c8[1].solutions.empty());
  bool three_atoms = false;
  for (const auto& s : c8[1].solutions) {
    CHECK(s.lhs.size() == 3);
    CHECK(s.rhs.size() == 2);
    Sequence l(Group::parse("C8")), r(Group::parse("C8"));
    for (const auto& v : s.lhs) {
      CHECK(is_atom(v));
      CHECK(v.size() < 8);
      l *= v;
    }
    for (const auto& u : s.rhs) r *= u;
    CHECK(l == r);
    auto shown = render(s.lhs);
    std::sort(shown.begin(), shown.end());
    if (shown == std::vector<std::string>{"1+3^5", "1^2+3^2", "1^5+3"}) three_atoms = true;
  }
  CHECK(three_atoms);

  const auto partial = remark54_search(12, 2, 5);
  CHECK_FALSE(partial[1].exhausted);
  CHECK(partial[1].nodes <= 5);
  CHECK(c8[1].to_json().rfind(R"({"n":8,"k":2,"exhausted":true,"nodes":)", 0) == 0);
  CHECK_THROWS_AS(remark54_search(7, 2), OddOrder);

  const auto par = remark54_search(10, 3, std::nullopt, 3);
  const auto ser = remark54_search(10, 3);
  for (std::size_t i = 0; i < par.size(); ++i) CHECK(par[i].to_json() == ser[i].to_json());
}

TEST_CASE("remark54 agrees with direct length sets") {
  for (int n : {4, 6, 8, 10, 12, 14}) {
    const auto certs = remark54_search(n, 3);
    const auto cat = enumerate_atoms(Group::parse("C" + std::to_string(n)));
    for (const auto& c : certs) {
      bool direct = false;
      for (const auto& rep : orbit_representatives(n, c.k_prime)) {
        Sequence b(cat.group());
        for (int x : rep) b.add(Element{static_cast<std::uint32_t>(x)}, n);
        direct = direct || length_set(b, cat).contains(c.k_prime + 1);
      }
      CAPTURE(n);
      CAPTURE(c.k_prime);
      CHECK(direct == (c.unrestricted_solutions > 0));
      // a solution of the reduced equation exists iff one exists at some k'' <= k'
      if (!c.solutions.empty()) CHECK(direct);
    }
  }
}

TEST_CASE("remark54 solutions are closed under unit scaling") {
  const auto c8 = remark54_search(8, 2)[1];
  const Group g = Group::parse("C8");
  const auto cat = enumerate_atoms(g);
  for (int c : units_mod(8)) {
    const GroupMap m = GroupMap::scaling(g, c);
    for (const auto& s : c8.solutions) {
      Sequence l(g), r(g);
      for (const auto& v : s.lhs) {
        const Sequence mv = apply_map(m, v);
        CHECK(is_atom(mv));
        CHECK(mv.size() < 8);
        l *= mv;
      }
      for (const auto& u : s.rhs) r *= apply_map(m, u);
      CHECK(l == r);
    }
  }
}

TEST_CASE("open problem search") {
  for (int n : {4, 6, 10, 12}) {
    const auto r = open_problem_search(n, 3);
    CAPTURE(n);
    CHECK_FALSE(r.witness);
    CHECK(r.searched > 0);
  }
  CHECK_FALSE(open_problem_search(4, 6).witness);
  CHECK_THROWS_AS(open_problem_search(8, 3), NPlusOneComposite);
}

TEST_CASE("tail interval shifter") {
  const auto s = build_tail_interval_shifter(8, std::size_t{1});
  CHECK(s.m == 1);
  CHECK(s.max_delta == 6);
  CHECK(s.l == 7);
  const auto out = verify_tail_shifter(s, {seq("C8", "1^8+7^8")});
  REQUIRE(out.size() == 1);
  CHECK(out[0].tail_interval);
  CHECK(out[0].elasticity == Rational(4));
  CHECK(out[0].pass);
}
