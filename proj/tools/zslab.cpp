// zslab command line: one subcommand per lab operation plus paper-checks.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "checks.hpp"
#include "json.hpp"
#include "zslab/cyclic_even.hpp"
#include "zslab/errors.hpp"

using namespace zslab;
using json = nlohmann::ordered_json;

namespace {

// Exit codes: 0 ok, 1 a check failed or a precondition does not hold,
// 2 bad input.
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Config {
  std::string group;
  std::string seq;
  std::string cache_dir;
  std::string format = "json";
  int jobs = 1;
  std::uint64_t seed = 20240611;
  std::size_t max_len = 0;
  std::size_t max_card = 0;
  std::size_t k = 2;
  std::size_t kmax = 2;
  std::size_t cap = 20000;
  std::uint64_t budget = 0;
  std::size_t degree = 4;
  std::size_t n_max = 10;
  std::size_t k0 = 1;
  std::size_t alpha = 1;
  std::size_t delta_bound = 0;
  std::size_t m_policy = 0;
  std::size_t max_order = 16;
  int n = 0;
  std::string mode = "interval";
  std::string task = "penultimate";
  std::string out;
  std::vector<std::string> only;
  bool survey = false;
  bool deep = false;
  bool verbose = false;
};

json lengths_json(const LengthSet& l) {
  const auto st = lengthset_stats(l);
  json j;
  j["lengths"] = l.lengths();
  j["min"] = l.min();
  j["max"] = l.max();
  j["delta"] = st.delta;
  j["elasticity"] = st.elasticity.to_string();
  j["interval"] = st.is_interval;
  return j;
}

json seq_list(const std::vector<Sequence>& v) {
  json j = json::array();
  for (const auto& s : v) j.push_back(s.to_string());
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

class Runner {
 public:
  explicit Runner(const Config& c) : c_(c) {}

  AtomCatalog catalog(const Group& g) const {
    AtomCache cache(AtomCache::default_dir(c_.cache_dir));
    return cache.get(g, std::nullopt, c_.jobs);
  }
  Group group() const { return Group::parse(c_.group); }

  int atoms() const {
    const Group g = group();
    AtomCache cache(AtomCache::default_dir(c_.cache_dir));
    const std::optional<std::size_t> bound = c_.max_len ? std::optional(c_.max_len) : std::nullopt;
    bool hit = false;
    const AtomCatalog cat = cache.get(g, bound, c_.jobs, &hit);
    std::cerr << (hit ? "cache hit: " : "cache miss, stored: ") << cache.path_for(g, bound).string() << "\n";
    std::cout << render_catalog(cat);
    return 0;
  }

  int davenport_cmd() const {
    const Group g = group();
    const std::size_t d = davenport(catalog(g));
    if (c_.format == "json") {
      json j;
      j["group"] = g.name();
      j["davenport"] = d;
      j["d_star"] = d_star(g);
      emit(j);
    } else {
      std::cout << d << "\n";
    }
    return 0;
  }

  int lengths() const {
    const Group g = group();
    const Sequence b = Sequence::parse(g, c_.seq);
    json j;
    j["group"] = g.name();
    j["sequence"] = b.to_string();
    j.update(lengths_json(length_set(b, catalog(g))));
    emit(j);
    return 0;
  }

  int catenary() const {
    const Group g = group();
    const Sequence b = Sequence::parse(g, c_.seq);
    const AtomCatalog cat = catalog(g);
    const auto z = enumerate_factorizations(b, cat, c_.cap);
    json j;
    j["group"] = g.name();
    j["sequence"] = b.to_string();
    j["factorizations"] = z.size();
    j["catenary"] = catenary_degree(z);
    j["lengths"] = length_set(b, cat).lengths();
    if (c_.verbose) {
      json all = json::array();
      for (const auto& f : z) all.push_back(f.to_string(cat));
      j["factorization_list"] = all;
    }
    emit(j);
    return 0;
  }

  int rhok() const {
    const Group g = group();
    const auto r = rho_k(catalog(g), c_.k, c_.budget ? c_.budget : 50'000'000);
    json j;
    j["group"] = g.name();
    j["k"] = c_.k;
    j["rho_k"] = r.value;
    j["exhaustive"] = r.exhaustive;
    j["nodes"] = r.nodes;
    j["witness"] = r.witness ? json(r.witness->to_string()) : json(nullptr);
    emit(j);
    return 0;
  }

  int maxelastic() const {
    const Group g = group();
    const AtomCatalog cat = catalog(g);
    json j;
    j["group"] = g.name();
    if (!c_.seq.empty()) {
      const Sequence b = Sequence::parse(g, c_.seq);
      const auto cert = is_max_elastic(b, cat);
      j["sequence"] = b.to_string();
      j["max_elastic"] = cert.has_value();
      if (cert) {
        j["k"] = cert->k;
        j["l"] = cert->l;
        j["top"] = cert->top.to_string(cat);
        j["bottom"] = cert->bottom.to_string(cat);
      }
    } else {
      const std::size_t card = c_.max_card ? c_.max_card : 4 * cat.davenport();
      j["max_card"] = card;
      j["sequences"] = seq_list(enumerate_max_elastic(cat, card));
    }
    emit(j);
    return 0;
  }

  int brho() const {
    const Group g = group();
    const auto b = enumerate_brho_atoms(catalog(g), c_.degree);
    json j;
    j["group"] = g.name();
    j["degree_bound"] = b.degree_bound;
    j["certified_complete"] = b.certified_complete;
    j["generators"] = seq_list(b.generators);
    emit(j);
    return 0;
  }

  int census() const {
    const Group g = group();
    const AtomCatalog cat = catalog(g);
    const auto t = brho_census(enumerate_brho_atoms(cat, c_.degree), cat, c_.n_max, c_.k0, c_.alpha);
    if (!t.generators_complete)
      std::cerr << "note: generator set searched to degree " << c_.degree << " only, not certified complete\n";
    std::cout << t.to_tsv();
    return 0;
  }

  int property_p() const {
    if (c_.survey) return survey();
    const Group g = group();
    const AtomCatalog cat = catalog(g);
    json j;
    j["group"] = g.name();
    const auto w = check_property_p(cat);
    j["P"] = w.has_value();
    if (w) {
      json wj;
      wj["g1"] = g.format(w->g1);
      wj["g2"] = g.format(w->g2);
      wj["u1"] = w->u1.to_string();
      wj["u2"] = w->u2.to_string();
      j["witness"] = wj;
    } else {
      j["witness"] = nullptr;
    }
    const auto a = check_property_p_star(cat);
    j["Pstar"] = a.has_value();
    if (a) {
      json aj = json::object();
      for (const auto& [e, u] : *a) aj[g.format(e)] = u.to_string();
      j["assignment"] = aj;
    } else {
      j["assignment"] = nullptr;
    }
    emit(j);
    return 0;
  }

  // Every group of order 3..max_order, as a table. No completeness claim:
  // it only reports what the catalogs say.
  int survey() const {
    std::vector<std::vector<int>> chains;
    std::vector<int> cur;
    auto build = [&](auto&& self, long long order) -> void {
      if (!cur.empty() && order >= 3) chains.push_back(cur);
      for (int n = cur.empty() ? 2 : cur.back(); order * n <= static_cast<long long>(c_.max_order); n += cur.empty() ? 1 : cur.back())
        if (cur.empty() || n % cur.back() == 0) {
          cur.push_back(n);
          self(self, order * n);
          cur.pop_back();
        }
    };
    build(build, 1);
    std::vector<Group> groups;
    for (const auto& ch : chains) groups.emplace_back(ch);
    std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
      return std::pair(a.order(), a.name()) < std::pair(b.order(), b.name());
    });
    std::cout << "group\torder\tD\tP\tPstar\n";
    for (const Group& g : groups) {
      const AtomCatalog cat = catalog(g);
      std::cout << g.name() << "\t" << g.order() << "\t" << cat.davenport() << "\t"
                << (check_property_p(cat) ? "yes" : "no") << "\t" << (check_property_p_star(cat) ? "yes" : "no")
                << "\n";
    }
    return 0;
  }

  int shifter() const {
    const Group g = group();
    const AtomCatalog cat = catalog(g);
    const auto samples = default_shifter_samples(cat);
    json j;
    j["group"] = g.name();
    j["mode"] = c_.mode;
    std::optional<ShifterReport> rep;
    if (c_.mode == "interval") {
      const auto s = build_interval_shifter(cat, c_.delta_bound ? std::optional(c_.delta_bound) : std::nullopt);
      j["a_prime"] = s.a_prime.to_string();
      j["a_prime_lengths"] = s.a_prime_lengths.lengths();
      j["delta_bar"] = s.delta_bar;
      j["delta_policy"] = s.delta_policy;
      j["k"] = s.k;
      rep = verify_shifter(cat, s.a_star, samples, ShifterMode::interval, s.k, c_.cap, c_.jobs);
    } else if (c_.mode == "catenary3") {
      rep = verify_shifter(cat, build_catenary_shifter(cat), samples, ShifterMode::catenary3, 0, c_.cap, c_.jobs);
    } else {
      throw ParseError("--mode must be interval or catenary3");
    }
    const ShifterReport& r = *rep;
    j["a_star"] = r.a_star.to_string();
    json rows = json::array();
    for (const auto& s : r.samples) {
      json row;
      row["a"] = s.a.to_string();
      row["min"] = s.lengths.min();
      row["max"] = s.lengths.max();
      row["interval"] = s.is_interval;
      row["elasticity"] = s.elasticity.to_string();
      if (s.catenary) row["catenary"] = *s.catenary;
      row["pass"] = s.pass;
      rows.push_back(row);
    }
    j["samples"] = rows;
    j["all_pass"] = r.all_pass;
    emit(j);
    return r.all_pass ? 0 : kFail;
  }

  int even_cyclic() const {
    json j;
    j["n"] = c_.n;
    j["task"] = c_.task;
    bool ok = true;
    if (c_.task == "penultimate") {
      const std::size_t card = c_.max_card ? c_.max_card : 4 * static_cast<std::size_t>(c_.n);
      const auto r = verify_no_penultimate(c_.n, card);
      j["max_card"] = card;
      json rows = json::array();
      for (const auto& row : r.rows) {
        json x;
        x["b"] = row.b.to_string();
        x["lengths"] = row.lengths.lengths();
        x["max_minus_one_absent"] = row.max_minus_one_absent;
        rows.push_back(x);
      }
      j["rows"] = rows;
      j["all_absent"] = r.all_absent;
      ok = r.all_absent;
    } else if (c_.task == "witness") {
      const auto w = build_three_atom_witness(c_.n);
      j["a"] = w.a;
      j["b"] = w.b;
      j["a_prime"] = w.a_prime.to_string();
      j["triple"] = seq_list({w.triple.begin(), w.triple.end()});
      j["atoms_ok"] = w.atoms_ok;
      j["product_ok"] = w.product_ok;
      j["doubled_lengths"] = lengths_json(w.doubled_lengths);
      j["min_plus_one"] = w.min_plus_one;
      ok = w.atoms_ok && w.product_ok && w.min_plus_one;
    } else if (c_.task == "tail") {
      const auto s = build_tail_interval_shifter(c_.n, c_.m_policy ? std::optional(c_.m_policy) : std::nullopt);
      const std::size_t card = c_.max_card ? c_.max_card : 2 * static_cast<std::size_t>(c_.n);
      const auto out = verify_tail_shifter(s, cyclic_max_elastic(c_.n, card), c_.jobs);
      j["m"] = s.m;
      j["policy"] = s.m_policy;
      j["max_delta"] = s.max_delta;
      j["l"] = s.l;
      j["a_star"] = s.a_star.to_string();
      json rows = json::array();
      for (const auto& t : out) {
        json x;
        x["a"] = t.a.to_string();
        x["min"] = t.lengths.min();
        x["max"] = t.lengths.max();
        x["tail_interval"] = t.tail_interval;
        x["elasticity"] = t.elasticity.to_string();
        x["pass"] = t.pass;
        rows.push_back(x);
        ok = ok && t.pass;
      }
      j["samples"] = rows;
    } else if (c_.task == "open-problem") {
      const auto r = open_problem_search(c_.n, c_.k);
      j["max_k"] = r.max_k;
      j["searched"] = r.searched;
      j["witness"] = r.witness ? json(r.witness->to_string()) : json(nullptr);
    } else {
      throw ParseError("--task must be penultimate, witness, tail or open-problem");
    }
    emit(j);
    return ok ? 0 : kFail;
  }

  int remark54() const {
    const auto certs = remark54_search(c_.n, c_.kmax, c_.budget ? std::optional(c_.budget) : std::nullopt, c_.jobs);
    json all = json::array();
    for (const auto& c : certs) all.push_back(json::parse(c.to_json()));
    const std::string text = all.dump(2) + "\n";
    std::cout << text;
    if (!c_.out.empty()) {
      std::ofstream f(c_.out, std::ios::binary | std::ios::trunc);
      f << text;
      if (!f) throw std::runtime_error("cannot write " + c_.out);
    }
    return 0;
  }

  int paper_checks() const {
    checks::Options o;
    o.only = c_.only;
    if (!c_.group.empty()) o.group = Group::parse(c_.group).name();
    o.deep = c_.deep;
    o.jobs = c_.jobs;
    o.seed = c_.seed;
    bool ok = true;
    for (const auto& r : checks::run(o)) {
      std::cout << checks::summary_line(r) << "\n";
      if (c_.verbose)
        for (const auto& row : r.rows)
          std::cout << "        " << (row.pass ? "ok  " : "BAD ") << row.group << "  " << row.label << "  "
                    << row.detail << "\n";
      ok = ok && (r.pass || !r.ran);
    }
    return ok ? 0 : kFail;
  }

 private:
  const Config& c_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zslab: zero-sum sequences, length sets and elasticity over finite abelian groups"};
  app.require_subcommand(1);
  Config c;
  c.cache_dir = ".zslab-cache";
  app.add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", c.cache_dir, "atom catalog cache (ZSLAB_CACHE overrides)");

  auto group_opt = [&](CLI::App* s, bool required = true) {
    auto* o = s->add_option("--group", c.group, "group, e.g. C3xC3");
    if (required) o->required();
  };
  auto seq_opt = [&](CLI::App* s, bool required = true) {
    auto* o = s->add_option("--seq", c.seq, "sequence, e.g. \"1^6+2^6\"");
    if (required) o->required();
  };

  auto* atoms = app.add_subcommand("atoms", "print the atom catalog (cached)");
  group_opt(atoms);
  atoms->add_option("--max-len", c.max_len, "only atoms up to this length")->check(CLI::PositiveNumber);

  auto* dav = app.add_subcommand("davenport", "Davenport constant");
  group_opt(dav);
  dav->add_option("--format", c.format, "text or json")->default_val("text")->check(CLI::IsMember({"text", "json"}));

  auto* len = app.add_subcommand("lengths", "length set of a zero-sum sequence");
  group_opt(len);
  seq_opt(len);

  auto* cat = app.add_subcommand("catenary", "catenary degree of a zero-sum sequence");
  group_opt(cat);
  seq_opt(cat);
  cat->add_option("--cap", c.cap, "factorization cap")->check(CLI::PositiveNumber);
  cat->add_flag("--verbose", c.verbose, "list every factorization");

  auto* rk = app.add_subcommand("rhok", "rho_k of the group");
  group_opt(rk);
  rk->add_option("--k", c.k, "number of atoms")->check(CLI::PositiveNumber);
  rk->add_option("--budget", c.budget, "node cap")->check(CLI::PositiveNumber);

  auto* me = app.add_subcommand("maxelastic", "test or list maximal-elastic sequences");
  group_opt(me);
  seq_opt(me, false);
  me->add_option("--max-card", c.max_card, "list all with |b| <= this (default 4 D)")->check(CLI::PositiveNumber);

  auto* br = app.add_subcommand("brho", "generators of the maximal-elastic submonoid");
  group_opt(br);
  br->add_option("--degree", c.degree, "max number of max-length atom factors")->check(CLI::PositiveNumber);

  auto* ce = app.add_subcommand("census", "count table for the maximal-elastic submonoid (TSV)");
  group_opt(ce);
  ce->add_option("--n-max", c.n_max, "last row")->check(CLI::PositiveNumber);
  ce->add_option("--k0", c.k0, "shift for the |(n-k0) Omega| ratio")->check(CLI::PositiveNumber);
  ce->add_option("--alpha", c.alpha, "shift for the cumulative ratio")->check(CLI::PositiveNumber);
  ce->add_option("--degree", c.degree, "generator search degree")->check(CLI::PositiveNumber);

  auto* pp = app.add_subcommand("property-p", "Property P and P*");
  group_opt(pp, false);
  pp->add_flag("--survey", c.survey, "table over all groups of small order");
  pp->add_option("--max-order", c.max_order, "survey bound")->check(CLI::Range(3, 64));

  auto* sh = app.add_subcommand("shifter", "build and verify a shifter a*");
  group_opt(sh);
  sh->add_option("--mode", c.mode, "interval or catenary3")->check(CLI::IsMember({"interval", "catenary3"}));
  sh->add_option("--delta-bound", c.delta_bound, "override the empirical gap bound")->check(CLI::PositiveNumber);
  sh->add_option("--cap", c.cap, "factorization cap (catenary3)")->check(CLI::PositiveNumber);

  auto* ev = app.add_subcommand("even-cyclic", "even cyclic order: penultimate scan, witness, tail shifter");
  ev->add_option("--n", c.n, "group order")->required()->check(CLI::PositiveNumber);
  ev->add_option("--task", c.task, "penultimate, witness, tail or open-problem")
      ->check(CLI::IsMember({"penultimate", "witness", "tail", "open-problem"}));
  ev->add_option("--max-card", c.max_card, "sequence size bound")->check(CLI::PositiveNumber);
  ev->add_option("--m-policy", c.m_policy, "AAMP bound M for the tail shifter")->check(CLI::PositiveNumber);
  ev->add_option("--max-k", c.k, "degree bound for open-problem")->check(CLI::PositiveNumber);

  auto* rm = app.add_subcommand("remark54", "exhaustive search of the reduced factorization equation");
  rm->add_option("--n", c.n, "group order (even)")->required()->check(CLI::PositiveNumber);
  rm->add_option("--kmax", c.kmax, "largest k'")->check(CLI::PositiveNumber);
  rm->add_option("--budget", c.budget, "DFS node budget per k'")->check(CLI::PositiveNumber);
  rm->add_option("--out", c.out, "also write the certificates here");

  auto* pc = app.add_subcommand("paper-checks", "run the acceptance suite");
  pc->add_option("--only", c.only, "check ids (comma separated)")->delimiter(',');
  pc->add_option("--group", c.group, "restrict rows to this group");
  pc->add_flag("--deep", c.deep, "include the long searches");
  pc->add_flag("--verbose", c.verbose, "print every row");
  pc->add_option("--seed", c.seed, "sample seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (pp->parsed() && !c.survey && c.group.empty()) {
    std::cerr << "property-p: --group is required unless --survey is given\n";
    return kUsage;
  }

  Runner r(c);
  try {
    if (atoms->parsed()) return r.atoms();
    if (dav->parsed()) return r.davenport_cmd();
    if (len->parsed()) return r.lengths();
    if (cat->parsed()) return r.catenary();
    if (rk->parsed()) return r.rhok();
    if (me->parsed()) return r.maxelastic();
    if (br->parsed()) return r.brho();
    if (ce->parsed()) return r.census();
    if (pp->parsed()) return r.property_p();
    if (sh->parsed()) return r.shifter();
    if (ev->parsed()) return r.even_cyclic();
    if (rm->parsed()) return r.remark54();
    if (pc->parsed()) return r.paper_checks();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GroupMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
