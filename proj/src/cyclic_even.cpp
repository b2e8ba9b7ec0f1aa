#include "zslab/cyclic_even.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "json.hpp"

#include "zslab/detail/parallel.hpp"
#include "zslab/errors.hpp"

namespace zslab {

namespace {

Group cyclic(int n) { return Group(std::vector<int>{n}); }

Element el(int n, long long v) { return Element{static_cast<std::uint32_t>(((v % n) + n) % n)}; }

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_even(int n) {
  if (n % 2) throw OddOrder("n must be even, got " + std::to_string(n));
  if (n < 4) throw std::invalid_argument("n must be >= 4, got " + std::to_string(n));
}

// g^n (-g)^n for each pair representative g < -g of generators.
std::vector<Sequence> pair_blocks(int n) {
  const Group g = cyclic(n);
  std::vector<Sequence> out;
  for (int u : units_mod(n)) {
    if (n - u < u) continue;
    Sequence s(g);
    s.add(el(n, u), n);
    s.add(el(n, -u), n);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<int> units_mod(int n) {
  std::vector<int> out;
  for (int u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) out.push_back(u);
  if (n == 1) out.push_back(0);
  return out;
}

std::vector<std::vector<int>> orbit_representatives(int n, std::size_t k) {
  const auto units = units_mod(n);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == k) {
      for (int c : units) {
        std::vector<int> img;
        for (int x : cur) img.push_back(static_cast<int>(static_cast<long long>(c) * x % n));
        std::sort(img.begin(), img.end());
        if (img < cur) return;
      }
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < units.size(); ++i) {
      // the least orbit member always starts with 1
      if (cur.empty() && units[i] != 1) break;
      cur.push_back(units[i]);
      self(self, i);
      cur.pop_back();
    }
  };
  if (k == 0) return {{}};
  dfs(dfs, 0);
  return out;
}

std::vector<Sequence> cyclic_max_elastic(int n, std::size_t max_card) {
  if (n < 3) throw std::invalid_argument("cyclic_max_elastic needs n >= 3");
  const auto blocks = pair_blocks(n);
  const std::size_t block = 2 * static_cast<std::size_t>(n);
  std::vector<Sequence> out;
  Sequence cur(cyclic(n));
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() + block > max_card) return;
    for (std::size_t i = from; i < blocks.size(); ++i) {
      cur *= blocks[i];
      self(self, i);
      cur = divide(cur, blocks[i]);
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

PenultimateReport scan_penultimate(int n, std::size_t max_card) {
  const AtomCatalog cat = enumerate_atoms(cyclic(n));
  PenultimateReport r{n, max_card, {}, true};
  for (Sequence& b : cyclic_max_elastic(n, max_card)) {
    LengthSet l = length_set(b, cat);
    const bool absent = !l.contains(l.max() - 1);
    r.all_absent = r.all_absent && absent;
    r.rows.push_back(PenultimateRow{std::move(b), std::move(l), absent});
  }
  return r;
}

PenultimateReport verify_no_penultimate(int n, std::size_t max_card) {
  require_even(n);
  return scan_penultimate(n, max_card);
}

ThreeAtomWitness build_three_atom_witness(int n) {
  require_even(n);
  if (is_prime(n + 1)) throw NPlusOnePrime(std::to_string(n + 1) + " is prime");
  int a = 3;
  while ((n + 1) % a != 0 || (n + 1) / a < 3) a += 2;
  const int b = (n + 1) / a;
  const Group g = cyclic(n);
  const Element one = el(n, 1);
  const Element ag = el(n, a);

  auto make = [&](int x, int y) {
    Sequence s(g);
    if (x) s.add(one, x);
    if (y) s.add(ag, y);
    return s;
  };
  ThreeAtomWitness w{n, a, b, one, make(n, n),
                     {make(1, n - b), make(n - a, 1), make(a - 1, b - 1)},
                     false, false, LengthSet({0}), false};
  w.atoms_ok = std::all_of(w.triple.begin(), w.triple.end(), [](const Sequence& s) { return is_atom(s); });
  w.product_ok = w.triple[0] * w.triple[1] * w.triple[2] == w.a_prime;

  EnumerateOptions opts;
  opts.alphabet = {one, ag, g.neg(one), g.neg(ag)};
  const AtomCatalog cat = enumerate_atoms(g, opts);
  w.doubled_lengths = length_set(negate(w.a_prime) * w.a_prime, cat);
  w.min_plus_one = w.doubled_lengths.contains(w.doubled_lengths.min() + 1);
  return w;
}

TailShifter build_tail_interval_shifter(int n, std::optional<std::size_t> m_policy, std::size_t scan_factor) {
  TailShifter s{build_three_atom_witness(n), 0, {}, 0, 0, Sequence(cyclic(n))};
  const AtomCatalog cat = enumerate_atoms(cyclic(n));
  const auto scan = cyclic_max_elastic(n, scan_factor * static_cast<std::size_t>(n));

  std::vector<std::size_t> deltas;
  std::vector<LengthSet> sets;
  for (const Sequence& b : scan) {
    sets.push_back(length_set(b, cat));
    for (std::size_t d : sets.back().delta()) deltas.push_back(d);
  }
  std::sort(deltas.begin(), deltas.end());
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
  s.max_delta = deltas.empty() ? 0 : deltas.back();

  const std::string scope = "maximal-elastic b with |b| <= " + std::to_string(scan_factor * n);
  if (m_policy) {
    s.m = *m_policy;
    s.m_policy = "supplied";
  } else {
    if (deltas.empty()) deltas.push_back(1);
    for (const LengthSet& l : sets) s.m = std::max(s.m, minimal_aamp_bound(l, deltas).bound);
    s.m_policy = "max minimal AAMP bound over " + scope;
  }
  s.m_policy += "; max Delta over " + scope;
  s.l = std::max<std::size_t>(1, s.m + s.max_delta);
  s.a_star = (negate(s.witness.a_prime) * s.witness.a_prime).pow(static_cast<std::uint32_t>(s.l));
  return s;
}

std::vector<TailSample> verify_tail_shifter(const TailShifter& s, const std::vector<Sequence>& samples, int jobs) {
  const int n = s.witness.n;
  const AtomCatalog cat = enumerate_atoms(cyclic(n));
  for (const Sequence& a : samples)
    if (!is_max_elastic(a, cat)) throw SampleNotMaxElastic("sample is not maximal-elastic: " + a.to_string());
  std::vector<std::optional<TailSample>> slots(samples.size());
  detail::parallel_for(samples.size(), jobs, [&](std::size_t i) {
    LengthSet l = length_set(s.a_star * samples[i], cat);
    std::vector<std::size_t> head;
    for (std::size_t x : l.lengths())
      if (x + s.m <= l.max()) head.push_back(x);
    bool interval = true;
    for (std::size_t j = 1; j < head.size(); ++j) interval = interval && head[j] == head[j - 1] + 1;
    TailSample t{samples[i], l, interval, l.elasticity(), false};
    t.pass = interval && t.elasticity == Rational(n, 2);
    slots[i] = std::move(t);
  });
  std::vector<TailSample> out;
  for (auto& t : slots) out.push_back(std::move(*t));
  return out;
}

// ---------------------------------------------------------------- Remark 5.4

namespace {

struct Remark54Task {
  const AtomCatalog& cat;  // atoms over the generators
  int n;
  std::size_t parts;  // k' + 1
  std::atomic<std::uint64_t>& nodes;
  std::uint64_t budget;
  std::atomic<bool>& over;

  std::vector<std::vector<std::uint32_t>> found;  // gcd-trivial solutions, atom indices
  std::uint64_t unrestricted = 0;
  std::vector<std::uint32_t> picked;
  std::size_t max_used = 0;

  bool is_max(std::uint32_t i) const { return cat[i].size() == static_cast<std::size_t>(n); }

  void dfs(Sequence& rest, std::uint32_t last_min, std::uint32_t last_idx) {
    if (over.load(std::memory_order_relaxed)) return;
    if (++nodes > budget) {
      over = true;
      return;
    }
    const std::size_t left = parts - picked.size();
    if (rest.empty()) {
      if (left == 0) {
        ++unrestricted;
        if (max_used == 0) found.push_back(picked);
      }
      return;
    }
    if (left == 0 || rest.size() < 2 * left || rest.size() > static_cast<std::size_t>(n) * left) return;
    const Element m = rest.min_element();
    for (std::uint32_t i : cat.with_min(m)) {
      if (m.index == last_min && i < last_idx) continue;
      if (!cat[i].divides(rest)) continue;
      for (auto [e, c] : cat.sparse(i)) rest.remove(Element{e}, c);
      picked.push_back(i);
      max_used += is_max(i);
      dfs(rest, m.index, i);
      max_used -= is_max(i);
      picked.pop_back();
      for (auto [e, c] : cat.sparse(i)) rest.add(Element{e}, c);
    }
  }
};

}  // namespace

std::string ExhaustionCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["k"] = k_prime;
  j["exhausted"] = exhausted;
  j["nodes"] = nodes;
  j["solutions"] = nlohmann::ordered_json::array();
  for (const auto& s : solutions) {
    nlohmann::ordered_json row;
    row["lhs"] = nlohmann::ordered_json::array();
    for (const auto& v : s.lhs) row["lhs"].push_back(v.to_string());
    row["rhs"] = nlohmann::ordered_json::array();
    for (const auto& u : s.rhs) row["rhs"].push_back(u.to_string());
    j["solutions"].push_back(row);
  }
  j["search_space_size"] = search_space_size;
  j["unrestricted_solutions"] = unrestricted_solutions;
  return j.dump();
}

std::vector<ExhaustionCertificate> remark54_search(int n, std::size_t k_max, std::optional<std::uint64_t> budget,
                                                   int jobs) {
  require_even(n);
  const Group g = cyclic(n);
  std::vector<Element> gens;
  for (int u : units_mod(n)) gens.push_back(el(n, u));
  EnumerateOptions opts;
  opts.alphabet = gens;
  const AtomCatalog cat = enumerate_atoms(g, opts);
  // The length-n atoms over the generators must be exactly the g^n.
  std::vector<Sequence> powers;
  for (Element e : gens) powers.push_back(Sequence::from_elements(g, std::vector<Element>(n, e)));
  std::sort(powers.begin(), powers.end(), canonical_less);
  std::vector<Sequence> longest;
  for (const Sequence& a : cat.atoms())
    if (a.size() == static_cast<std::size_t>(n)) longest.push_back(a);
  if (cat.davenport() != static_cast<std::size_t>(n) || longest != powers)
    throw std::logic_error("max-length atoms over the generators are not the g^n");

  std::vector<ExhaustionCertificate> out;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const auto reps = orbit_representatives(n, k);
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> over{false};
    const std::uint64_t cap = budget.value_or(~std::uint64_t{0});
    std::vector<std::optional<Remark54Task>> tasks(reps.size());
    detail::parallel_for(reps.size(), jobs, [&](std::size_t t) {
      Sequence b(g);
      for (int x : reps[t]) b.add(el(n, x), n);
      Remark54Task task{cat, n, k + 1, nodes, cap, over, {}, 0, {}, 0};
      task.dfs(b, 0, 0);
      tasks[t].emplace(std::move(task));
    });

    ExhaustionCertificate c;
    c.n = n;
    c.k_prime = k;
    c.search_space_size = reps.size();
    c.nodes = std::min(nodes.load(), cap);
    c.exhausted = !over;
    for (std::size_t t = 0; t < reps.size(); ++t) {
      c.unrestricted_solutions += tasks[t]->unrestricted;
      for (const auto& idx : tasks[t]->found) {
        Remark54Solution s;
        for (std::uint32_t i : idx) s.lhs.push_back(cat[i]);
        for (int x : reps[t]) s.rhs.push_back(Sequence::from_elements(g, std::vector<Element>(n, el(n, x))));
        c.solutions.push_back(std::move(s));
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

OpenProblemResult open_problem_search(int n, std::size_t max_k) {
  require_even(n);
  if (!is_prime(n + 1)) throw NPlusOneComposite(std::to_string(n + 1) + " is composite");
  const Group g = cyclic(n);
  std::vector<Element> gens;
  for (int u : units_mod(n)) gens.push_back(el(n, u));
  EnumerateOptions opts;
  opts.alphabet = gens;
  const AtomCatalog cat = enumerate_atoms(g, opts);

  OpenProblemResult r{n, max_k, 0, std::nullopt};
  // Degree 2j: j blocks g^n (-g)^n; the g's are an orbit representative
  // multiset of units, each block taken once per listed g.
  for (std::size_t j = 1; 2 * j <= max_k && !r.witness; ++j) {
    for (const auto& rep : orbit_representatives(n, j)) {
      Sequence a(g);
      for (int x : rep) {
        a.add(el(n, x), n);
        a.add(el(n, -x), n);
      }
      ++r.searched;
      const LengthSet l = length_set(a, cat);
      if (l.contains(l.min() + 1)) {
        r.witness = a;
        break;
      }
    }
  }
  return r;
}

}  // namespace zslab
