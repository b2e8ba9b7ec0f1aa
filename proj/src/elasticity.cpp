#include "zslab/elasticity.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "zslab/errors.hpp"

namespace zslab {

namespace {

void require_full(const AtomCatalog& cat) {
  if (!cat.is_full_group()) throw CatalogIncomplete("maximal elasticity needs a catalog of all of G");
  if (!cat.complete()) throw CatalogIncomplete("maximal elasticity needs a complete catalog");
}

// Indices of the max-length atoms (no 0) grouped by smallest element.
struct MaxAtoms {
  std::vector<std::uint32_t> all;
  std::vector<std::vector<std::uint32_t>> with_min;

  explicit MaxAtoms(const AtomCatalog& cat) : with_min(cat.group().order()) {
    auto it = cat.by_length().find(cat.davenport());
    if (it == cat.by_length().end()) return;
    for (std::size_t i : it->second) {
      if (cat[i].count(cat.group().zero()) > 0) continue;
      all.push_back(static_cast<std::uint32_t>(i));
      with_min[cat[i].min_element().index].push_back(static_cast<std::uint32_t>(i));
    }
  }
};

// Exact cover of b by max-length atoms. Branches only on atoms through the
// smallest remaining element; residuals known to fail are remembered.
struct CoverSearch {
  const AtomCatalog& cat;
  const MaxAtoms& max;
  std::unordered_set<Sequence, SequenceHash> dead;
  std::vector<std::uint32_t> picked;

  bool run(Sequence& rest) {
    if (rest.empty()) return true;
    if (rest.size() % cat.davenport() != 0 || dead.count(rest)) return false;
    for (std::uint32_t i : max.with_min[rest.min_element().index]) {
      if (!cat[i].divides(rest)) continue;
      for (auto [e, m] : cat.sparse(i)) rest.remove(Element{e}, m);
      picked.push_back(i);
      const bool ok = run(rest);
      for (auto [e, m] : cat.sparse(i)) rest.add(Element{e}, m);
      if (ok) return true;
      picked.pop_back();
    }
    dead.insert(rest);
    return false;
  }
};

std::vector<Factorization::Part> to_parts(std::vector<std::uint32_t> idx) {
  std::sort(idx.begin(), idx.end());
  std::vector<Factorization::Part> parts;
  for (std::uint32_t i : idx) {
    if (!parts.empty() && parts.back().first == i)
      ++parts.back().second;
    else
      parts.emplace_back(i, 1);
  }
  return parts;
}

}  // namespace

bool pairs_up(const Sequence& b) {
  const Group& g = b.group();
  if (b.count(g.zero()) > 0) return false;
  for (Element e : b.support()) {
    const Element m = g.neg(e);
    if (m == e ? b.count(e) % 2 != 0 : b.count(e) != b.count(m)) return false;
  }
  return true;
}

std::optional<MaxElasticCertificate> is_max_elastic(const Sequence& b, const AtomCatalog& cat) {
  require_full(cat);
  if (!(b.group() == cat.group())) throw GroupMismatch("sequence and catalog over different groups");
  if (b.empty() || !pairs_up(b)) return std::nullopt;
  const MaxAtoms max(cat);
  CoverSearch cover{cat, max, {}, {}};
  Sequence rest = b;
  if (!cover.run(rest)) return std::nullopt;

  const Group& g = b.group();
  std::vector<std::uint32_t> twos;
  for (Element e : b.support()) {
    const Element m = g.neg(e);
    if (m < e) continue;
    const auto i = cat.index_of(Sequence::from_elements(g, {e, m}));
    if (!i) throw std::logic_error("missing length-2 atom in catalog");
    const std::uint32_t times = m == e ? b.count(e) / 2 : b.count(e);
    twos.insert(twos.end(), times, static_cast<std::uint32_t>(*i));
  }
  const std::size_t k = cover.picked.size();
  const std::size_t l = twos.size();
  return MaxElasticCertificate{Factorization(cat, to_parts(cover.picked), b),
                               Factorization(cat, to_parts(twos), b), k, l};
}

std::vector<Sequence> enumerate_max_elastic(const AtomCatalog& cat, std::size_t max_card) {
  require_full(cat);
  const MaxAtoms max(cat);
  std::unordered_set<Sequence, SequenceHash> seen;
  Sequence cur(cat.group());
  // Nondecreasing tuples of max-length atoms.
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    if (!cur.empty() && pairs_up(cur)) seen.insert(cur);
    if (cur.size() + cat.davenport() > max_card) return;
    for (std::size_t j = from; j < max.all.size(); ++j) {
      const std::uint32_t i = max.all[j];
      for (auto [e, m] : cat.sparse(i)) cur.add(Element{e}, m);
      self(self, j);
      for (auto [e, m] : cat.sparse(i)) cur.remove(Element{e}, m);
    }
  };
  dfs(dfs, 0);
  std::vector<Sequence> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Sequence> enumerate_max_elastic(const Group& g, std::size_t max_card) {
  return enumerate_max_elastic(enumerate_atoms(g), max_card);
}

std::optional<std::map<Element, std::uint32_t>> cyclic_max_elastic_form(const Sequence& b) {
  const Group& g = b.group();
  if (!g.is_cyclic() || g.order() < 3) throw NotCyclic("cyclic group of order >= 3 required, got " + g.name());
  const int n = static_cast<int>(g.order());
  if (b.empty()) return std::nullopt;
  std::map<Element, std::uint32_t> form;
  for (Element e : b.support()) {
    if (g.element_order(e) != n) return std::nullopt;
    const Element m = g.neg(e);
    if (b.count(e) != b.count(m) || b.count(e) % n != 0) return std::nullopt;
    form[std::min(e, m)] = b.count(e) / n;
  }
  return form;
}

BRhoCatalog enumerate_brho_atoms(const AtomCatalog& cat, std::size_t degree_bound) {
  require_full(cat);
  if (degree_bound < 1) throw std::invalid_argument("degree_bound must be >= 1");
  const Group& g = cat.group();
  const std::size_t d = cat.davenport();
  BRhoCatalog out{g, {}, degree_bound, false};

  const auto all = enumerate_max_elastic(cat, degree_bound * d);
  // canonical order is by size, so lower degrees are settled first
  for (const Sequence& b : all) {
    bool splits = false;
    for (const Sequence& x : out.generators) {
      if (x.size() >= b.size()) break;
      if (x.divides(b) && is_max_elastic(divide(b, x), cat)) {
        splits = true;
        break;
      }
    }
    if (!splits) out.generators.push_back(b);
  }

  // Cyclic closed form: exactly the g^n (-g)^n over generator pairs.
  if (g.is_cyclic() && g.order() >= 3 && degree_bound >= 2) {
    std::vector<Sequence> expected;
    for (Element e : g.elements()) {
      const Element m = g.neg(e);
      if (g.element_order(e) != static_cast<int>(g.order()) || m < e) continue;
      Sequence s(g);
      s.add(e, g.order());
      s.add(m, g.order());
      expected.push_back(std::move(s));
    }
    std::sort(expected.begin(), expected.end(), canonical_less);
    out.certified_complete = expected == out.generators;
  }
  return out;
}

BRhoCatalog enumerate_brho_atoms(const Group& g, std::size_t degree_bound) {
  return enumerate_brho_atoms(enumerate_atoms(g), degree_bound);
}

std::string Census::to_tsv() const {
  auto show = [](const std::optional<Rational>& r) { return r ? r->to_string() : std::string("NA"); };
  std::string out = "n\tomega_count\tcumulative_count\tratio_shift_k0\tratio_cumulative_alpha\n";
  for (const auto& r : rows)
    out += std::to_string(r.n) + "\t" + std::to_string(r.omega_count) + "\t" +
           std::to_string(r.cumulative_count) + "\t" + show(r.ratio_shift_k0) + "\t" +
           show(r.ratio_cumulative_alpha) + "\n";
  return out;
}

Census brho_census(const BRhoCatalog& brho, const AtomCatalog& cat, std::size_t n_max,
                   std::size_t k0, std::size_t alpha) {
  if (!(brho.group == cat.group())) throw GroupMismatch("census: catalog and generators disagree");
  Census c{brho.group, k0, alpha, brho.certified_complete, {}};

  // omega[n] = |n Omega|, with |0 Omega| = 1 (the identity).
  std::vector<std::uint64_t> omega{1};
  std::unordered_set<Sequence, SequenceHash> layer{Sequence(brho.group)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::unordered_set<Sequence, SequenceHash> next;
    for (const Sequence& s : layer)
      for (const Sequence& x : brho.generators) next.insert(s * x);
    layer = std::move(next);
    omega.push_back(layer.size());
  }

  // cumulative[n] = 1 + #{maximal-elastic b : |b| <= n}
  std::vector<std::uint64_t> cumulative(n_max + 1, 1);
  std::vector<std::uint64_t> by_size(n_max + 1, 0);
  for (const Sequence& b : enumerate_max_elastic(cat, n_max)) ++by_size[b.size()];
  for (std::size_t n = 1; n <= n_max; ++n) cumulative[n] = cumulative[n - 1] + by_size[n];

  auto ratio = [](std::uint64_t num, std::uint64_t den) -> std::optional<Rational> {
    if (den == 0) return std::nullopt;
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  };
  for (std::size_t n = 1; n <= n_max; ++n) {
    CensusRow r;
    r.n = n;
    r.omega_count = omega[n];
    r.cumulative_count = cumulative[n];
    r.ratio_shift_k0 = ratio(n >= k0 ? omega[n - k0] : 0, omega[n]);
    r.ratio_cumulative_alpha = ratio(n >= alpha ? cumulative[n - alpha] : 0, cumulative[n]);
    c.rows.push_back(r);
  }
  return c;
}

std::vector<long long> third_differences(const std::vector<std::uint64_t>& counts) {
  std::vector<long long> v(counts.begin(), counts.end());
  for (int step = 0; step < 3; ++step) {
    if (v.size() < 2) return {};
    std::vector<long long> next;
    for (std::size_t i = 1; i < v.size(); ++i) next.push_back(v[i] - v[i - 1]);
    v = std::move(next);
  }
  return v;
}

}  // namespace zslab
