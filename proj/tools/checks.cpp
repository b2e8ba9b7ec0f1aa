#include "checks.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "support/oracle.hpp"
#include "zslab/cyclic_even.hpp"
#include "zslab/errors.hpp"

namespace zslab::checks {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

class Ctx {
 public:
  Ctx(const Options& opts, Result& out) : opts_(opts), out_(out) {}

  const Options& opts() const { return opts_; }
  bool wants(const std::string& group) const { return !opts_.group || *opts_.group == group; }

  // Runs body for one row if the group filter admits it; body returns pass
  // and may fill in the detail text. A row over `limit` seconds fails.
  void row(const std::string& group, const std::string& label, const std::function<bool(std::string&)>& body,
           double limit = 0) {
    if (!wants(group)) return;
    Row r{group, label, false, {}, 0};
    const auto t0 = Clock::now();
    try {
      r.pass = body(r.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = since(t0);
    if (limit > 0 && r.seconds > limit) {
      r.pass = false;
      r.detail += (r.detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    out_.rows.push_back(std::move(r));
  }

 private:
  const Options& opts_;
  Result& out_;
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

Group G(const std::string& name) { return Group::parse(name); }

// Every zero-sum b over g with |b| <= max_card.
std::vector<Sequence> zero_sums(const Group& g, std::size_t max_card) {
  std::vector<Sequence> out;
  for_each_zero_sum(g, g.elements(), max_card, [&](const Sequence& b) { out.push_back(b); });
  return out;
}

// ---------------------------------------------------------------- 1
void davenport_table(Ctx& c) {
  std::vector<std::pair<std::string, std::size_t>> rows;
  for (int n = 2; n <= 12; ++n) rows.emplace_back("C" + std::to_string(n), n);
  std::string c2 = "C2";
  for (int r = 1; r <= 4; ++r) {
    rows.emplace_back(G(c2).name(), r + 1);
    c2 += "xC2";
  }
  rows.emplace_back("C3xC3", 5);
  rows.emplace_back("C2xC2xC4", 6);
  for (const auto& [name, expected] : rows)
    c.row(name, "D(" + name + ")", [&, name = name, expected = expected](std::string& d) {
      const Group g = G(name);
      const std::size_t got = davenport(g);
      d = "D=" + std::to_string(got) + " D*=" + std::to_string(d_star(g));
      return got == expected && d_star(g) == expected;
    }, 10);
}

// ---------------------------------------------------------------- 2
void atom_oracle(Ctx& c) {
  for (const std::string name : {"C3", "C4", "C5", "C2xC2"})
    c.row(name, "A(" + name + ") vs brute force", [&](std::string& d) {
      const Group g = G(name);
      const auto cat = enumerate_atoms(g);
      auto naive = oracle::naive_atoms(g, cat.davenport() + 1);
      std::sort(naive.begin(), naive.end(), canonical_less);
      d = std::to_string(cat.size()) + " atoms, oracle " + std::to_string(naive.size());
      return cat.complete() && naive == cat.atoms();
    });
}

// ---------------------------------------------------------------- 3, 12, 13
void max_elastic_equivalence(Ctx& c) {
  for (const std::string name : {"C3", "C4"})
    c.row(name, "structural test vs rho(L(b)) for |b| <= 12", [&](std::string& d) {
      const Group g = G(name);
      const auto cat = enumerate_atoms(g);
      const Rational target(static_cast<std::int64_t>(cat.davenport()), 2);
      std::size_t total = 0, positive = 0, bad = 0;
      for (const Sequence& b : zero_sums(g, 12)) {
        ++total;
        const bool structural = is_max_elastic(b, cat).has_value();
        const bool by_rho = length_set(b, cat).elasticity() == target;
        positive += structural;
        if (structural != by_rho) ++bad;
      }
      d = std::to_string(total) + " sequences, " + std::to_string(positive) + " maximal-elastic, " +
          std::to_string(bad) + " disagreements";
      return bad == 0;
    }, 120);
}

void catenary_inequality(Ctx& c) {
  for (const std::string name : {"C3", "C4"})
    c.row(name, "c(b) >= 2 + max Delta(L(b)) for |b| <= 12", [&](std::string& d) {
      const Group g = G(name);
      const auto cat = enumerate_atoms(g);
      std::size_t tested = 0, bad = 0;
      for (const Sequence& b : zero_sums(g, 12)) {
        const auto z = enumerate_factorizations(b, cat);
        if (z.size() < 2) continue;
        ++tested;
        if (catenary_degree(z) < 2 + length_set(b, cat).max_delta()) ++bad;
      }
      d = std::to_string(tested) + " sequences with |Z(b)| >= 2, " + std::to_string(bad) + " violations";
      return bad == 0 && tested > 0;
    });
}

void aamp_structure(Ctx& c) {
  for (const std::string name : {"C3", "C4"})
    c.row(name, "AAMP with d in empirical Delta(G), M <= 2", [&](std::string& d) {
      const Group g = G(name);
      const auto cat = enumerate_atoms(g);
      std::vector<LengthSet> sets;
      std::set<std::size_t> deltas;
      for (const Sequence& b : zero_sums(g, 12)) {
        sets.push_back(length_set(b, cat));
        for (std::size_t x : sets.back().delta()) deltas.insert(x);
      }
      std::size_t worst = 0, bad = 0;
      for (const LengthSet& l : sets) {
        const auto best = minimal_aamp_bound(l, {deltas.begin(), deltas.end()});
        worst = std::max(worst, best.bound);
        if (best.bound > 2) ++bad;
      }
      d = std::to_string(sets.size()) + " length sets, Delta=" + join({deltas.begin(), deltas.end()}) +
          ", largest minimal M=" + std::to_string(worst);
      return bad == 0;
    });
}

// ---------------------------------------------------------------- 4
void additivity(Ctx& c) {
  const std::vector<std::string> groups{"C3", "C4", "C5"};
  std::vector<std::string> wanted;
  for (const auto& n : groups)
    if (c.wants(n)) wanted.push_back(n);
  if (wanted.empty()) return;
  c.row(c.opts().group.value_or("C3/C4/C5"), "50 seeded pairs", [&](std::string& d) {
    std::mt19937_64 rng(c.opts().seed);
    std::vector<AtomCatalog> cats;
    std::vector<std::vector<Sequence>> pools;
    for (const auto& n : wanted) {
      cats.push_back(enumerate_atoms(G(n)));
      pools.push_back(enumerate_max_elastic(cats.back(), 4 * cats.back().davenport()));
    }
    std::size_t bad = 0;
    for (int t = 0; t < 50; ++t) {
      const std::size_t gi = rng() % cats.size();
      const auto& pool = pools[gi];
      const Sequence& a = pool[rng() % pool.size()];
      const Sequence& b = pool[rng() % pool.size()];
      const auto la = length_set(a, cats[gi]), lb = length_set(b, cats[gi]), lab = length_set(a * b, cats[gi]);
      if (lab.min() != la.min() + lb.min() || lab.max() != la.max() + lb.max()) ++bad;
    }
    d = "seed " + std::to_string(c.opts().seed) + ", " + std::to_string(bad) + " violations";
    return bad == 0;
  });
}

// ---------------------------------------------------------------- 5
void rho_k_table(Ctx& c) {
  for (int n = 3; n <= 6; ++n) {
    const std::string name = "C" + std::to_string(n);
    c.row(name, "rho_2, rho_3 of " + name, [&, n, name](std::string& d) {
      const auto cat = enumerate_atoms(G(name));
      const auto r2 = rho_k(cat, 2);
      const auto r3 = rho_k(cat, 3);
      d = "rho_2=" + std::to_string(r2.value) + " rho_3=" + std::to_string(r3.value) +
          (r2.exhaustive && r3.exhaustive ? " exhaustive" : " NOT exhaustive");
      return r2.exhaustive && r3.exhaustive && r2.value == std::size_t(n) && r3.value == std::size_t(n) + 1;
    });
  }
}

// ---------------------------------------------------------------- 6
void property_p_table(Ctx& c) {
  const std::vector<std::pair<std::string, bool>> p{{"C3", true},    {"C5", true},    {"C7", true},
                                                     {"C9", true},    {"C2xC2", true}, {"C3xC3", true},
                                                     {"C2xC4", true}, {"C4", false},   {"C6", false},
                                                     {"C8", false}};
  const std::vector<std::pair<std::string, bool>> ps{{"C3", true},    {"C5", true}, {"C2xC2", true},
                                                      {"C3xC3", true}, {"C4", false}, {"C6", false}};
  for (const auto& [name, expected] : p)
    c.row(name, "P(" + name + ")", [&, name = name, expected = expected](std::string& d) {
      const auto cat = enumerate_atoms(G(name));
      const auto w = check_property_p(cat);
      d = w ? "holds" : "fails";
      return w.has_value() == expected && (!w || witness_valid(*w, cat));
    });
  for (const auto& [name, expected] : ps)
    c.row(name, "P*(" + name + ")", [&, name = name, expected = expected](std::string& d) {
      const bool got = check_property_p_star(G(name)).has_value();
      d = got ? "holds" : "fails";
      return got == expected;
    });
}

// ---------------------------------------------------------------- 7
void interval_shifter(Ctx& c) {
  for (const std::string name : {"C3", "C5"})
    c.row(name, "a* via A'^k, samples |a| <= 4D", [&, name](std::string& d) {
      const auto cat = enumerate_atoms(G(name));
      const auto s = build_interval_shifter(cat);
      const auto samples = enumerate_max_elastic(cat, 4 * cat.davenport());
      const auto r = verify_shifter(cat, s.a_star, samples, ShifterMode::interval, s.k, 20000, c.opts().jobs);
      d = "k=" + std::to_string(s.k) + " |a*|=" + std::to_string(s.a_star.size()) + " samples=" +
          std::to_string(samples.size());
      return r.all_pass && !samples.empty();
    }, 300);
}

// ---------------------------------------------------------------- 8
void catenary_shifter(Ctx& c) {
  for (const std::string name : {"C3", "C2xC2"})
    c.row(name, "c(a* a) <= 3 and interval", [&, name](std::string& d) {
      const auto cat = enumerate_atoms(G(name));
      const Sequence a_star = build_catenary_shifter(cat);
      const auto samples = enumerate_max_elastic(cat, 4 * cat.davenport());
      const auto r = verify_shifter(cat, a_star, samples, ShifterMode::catenary3, 0, 20000, c.opts().jobs);
      std::size_t worst = 0;
      for (const auto& s : r.samples) worst = std::max(worst, *s.catenary);
      d = "a*=" + a_star.to_string() + " samples=" + std::to_string(samples.size()) + " max c=" +
          std::to_string(worst);
      return r.all_pass && !samples.empty();
    });
}

// ---------------------------------------------------------------- 9
void no_penultimate(Ctx& c) {
  for (const auto& [n, card] : std::vector<std::pair<int, std::size_t>>{{4, 32}, {6, 24}})
    c.row("C" + std::to_string(n), "max L - 1 not in L, |b| <= " + std::to_string(card),
          [n = n, card = card](std::string& d) {
            const auto r = verify_no_penultimate(n, card);
            d = std::to_string(r.rows.size()) + " sequences";
            return r.all_absent && !r.rows.empty();
          });
  c.row("C3", "odd-order contrast: the scan must find max L - 1 in L", [](std::string& d) {
    const auto r = scan_penultimate(3, 12);
    std::size_t hits = 0;
    for (const auto& row : r.rows) hits += !row.max_minus_one_absent;
    d = std::to_string(hits) + " of " + std::to_string(r.rows.size()) + " have max L - 1";
    return !r.all_absent;
  });
}

// ---------------------------------------------------------------- 10
void three_atom_witness(Ctx& c) {
  for (int n : {8, 14})
    c.row("C" + std::to_string(n), "g^n (ag)^n as three atoms", [n](std::string& d) {
      const auto w = build_three_atom_witness(n);
      d = "a=" + std::to_string(w.a) + " b=" + std::to_string(w.b) + " triple=(" + w.triple[0].to_string() +
          ")(" + w.triple[1].to_string() + ")(" + w.triple[2].to_string() + ") min L((-A')A')=" +
          std::to_string(w.doubled_lengths.min());
      bool ok = w.atoms_ok && w.product_ok && w.min_plus_one;
      if (n == 8) ok = ok && w.doubled_lengths.min() == 4;
      return ok;
    }, 60);
}

// ---------------------------------------------------------------- 11
void remark54(Ctx& c) {
  c.row("C12", "k' <= 2: exhausted, no solutions", [&](std::string& d) {
    const auto certs = remark54_search(12, 2, std::nullopt, c.opts().jobs);
    bool ok = true;
    std::uint64_t nodes = 0;
    for (const auto& cert : certs) {
      ok = ok && cert.exhausted && cert.solutions.empty();
      nodes += cert.nodes;
    }
    d = std::to_string(nodes) + " nodes";
    return ok;
  }, 300);
  c.row("C8", "k' = 2: the three-atom solution is found", [&](std::string& d) {
    const auto cert = remark54_search(8, 2, std::nullopt, c.opts().jobs).back();
    const auto w = build_three_atom_witness(8);
    std::vector<Sequence> want(w.triple.begin(), w.triple.end());
    std::sort(want.begin(), want.end(), canonical_less);
    bool found = false;
    for (auto s : cert.solutions) {
      std::sort(s.lhs.begin(), s.lhs.end(), canonical_less);
      found = found || s.lhs == want;
    }
    d = std::to_string(cert.solutions.size()) + " solutions";
    return cert.exhausted && found;
  }, 300);
  if (c.opts().deep)
    c.row("C12", "k' = 3 (deep)", [&](std::string& d) {
      const auto cert = remark54_search(12, 3, std::nullopt, c.opts().jobs).back();
      d = cert.to_json();
      return cert.exhausted && cert.solutions.empty();
    });
}

// ---------------------------------------------------------------- 14
void census(Ctx& c) {
  c.row("C3", "|n Omega| = 1 for n <= 10", [](std::string& d) {
    const auto cat = enumerate_atoms(G("C3"));
    const auto t = brho_census(enumerate_brho_atoms(cat, 2), cat, 10);
    bool ok = true;
    for (const auto& r : t.rows) ok = ok && r.omega_count == 1;
    d = t.generators_complete ? "generators certified" : "generators not certified";
    return ok && t.generators_complete;
  }, 60);
  c.row("C5", "|n Omega| = n + 1, third differences vanish", [](std::string& d) {
    const auto cat = enumerate_atoms(G("C5"));
    const auto t = brho_census(enumerate_brho_atoms(cat, 2), cat, 10);
    std::vector<std::uint64_t> counts;
    bool ok = t.generators_complete;
    for (const auto& r : t.rows) {
      ok = ok && r.omega_count == r.n + 1;
      counts.push_back(r.omega_count);
    }
    for (long long x : third_differences(counts)) ok = ok && x == 0;
    // |(n-1) Omega| / |n Omega| = n/(n+1) climbs toward 1
    for (std::size_t i = 1; i < t.rows.size(); ++i)
      ok = ok && *t.rows[i - 1].ratio_shift_k0 < *t.rows[i].ratio_shift_k0;
    d = "ratio at n=10: " + t.rows.back().ratio_shift_k0->to_string();
    return ok;
  }, 60);
}

struct Entry {
  Info info;
  double limit;
  std::function<void(Ctx&)> fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all{
      {{1, "davenport-table", "Davenport constants match D*"}, 0, davenport_table},
      {{2, "atom-oracle", "atom enumeration vs brute force"}, 30, atom_oracle},
      {{3, "max-elastic-equivalence", "structural maximal-elasticity test vs length sets"}, 120,
       max_elastic_equivalence},
      {{4, "additivity", "min/max additivity of maximal-elastic products"}, 0, additivity},
      {{5, "rho-k-table", "rho_2 and rho_3 of small cyclic groups"}, 300, rho_k_table},
      {{6, "property-p-table", "Property P / P* truth table"}, 60, property_p_table},
      {{7, "interval-shifter", "interval shifter end to end"}, 0, interval_shifter},
      {{8, "catenary-shifter", "catenary shifter end to end"}, 0, catenary_shifter},
      {{9, "no-penultimate", "no penultimate length for even cyclic groups"}, 0, no_penultimate},
      {{10, "three-atom-witness", "three-atom identity for n + 1 composite"}, 60, three_atom_witness},
      {{11, "remark54", "reduced factorization equation search"}, 0, remark54},
      {{12, "catenary-inequality", "catenary degree vs largest gap"}, 0, catenary_inequality},
      {{13, "aamp-structure", "AAMP decompositions with small bound"}, 0, aamp_structure},
      {{14, "census", "B_rho census counts"}, 60, census},
  };
  return all;
}

}  // namespace

const std::vector<Info>& catalog() {
  static const std::vector<Info> infos = [] {
    std::vector<Info> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

std::vector<Result> run(const Options& opts) {
  for (const auto& id : opts.only)
    if (std::none_of(entries().begin(), entries().end(), [&](const Entry& e) { return e.info.id == id; }))
      throw std::invalid_argument("unknown check id: " + id);
  std::vector<Result> out;
  for (const auto& e : entries()) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), e.info.id) == opts.only.end())
      continue;
    Result r;
    r.criterion = e.info.criterion;
    r.id = e.info.id;
    r.title = e.info.title;
    r.limit_seconds = e.limit;
    Ctx ctx(opts, r);
    const auto t0 = Clock::now();
    try {
      e.fn(ctx);
    } catch (const std::exception& ex) {
      r.error = ex.what();
    }
    r.seconds = since(t0);
    r.ran = !r.rows.empty() || !r.error.empty();
    r.pass = r.ran && r.error.empty() &&
             std::all_of(r.rows.begin(), r.rows.end(), [](const Row& row) { return row.pass; });
    if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
      r.pass = false;
      r.error = "over time limit";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string summary_line(const Result& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%8.3fs", r.seconds);
  std::string status = !r.ran ? "SKIP" : (r.pass ? "PASS" : "FAIL");
  std::string line = status + "  " + (r.criterion < 10 ? " " : "") + std::to_string(r.criterion) + "  " + r.id;
  line.resize(std::max<std::size_t>(line.size(), 36), ' ');
  line += std::string(buf) + "  " + r.title;
  if (!r.error.empty()) line += "  [" + r.error + "]";
  return line;
}

}  // namespace zslab::checks
