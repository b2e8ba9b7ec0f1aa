#include "zslab/atoms.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <sstream>

#include "zslab/detail/parallel.hpp"
#include "zslab/errors.hpp"

namespace zslab {

bool is_atom(const Sequence& s) {
  if (s.empty() || sigma(s) != s.group().zero()) return false;
  // A zero-sum sequence is minimal iff dropping any one term leaves a
  // zero-sumfree sequence; the complement of a proper zero-sum subsequence
  // would otherwise sum to zero inside the remainder.
  Sequence rest = s;
  rest.remove(s.min_element());
  return is_zero_sumfree(rest);
}

AtomCatalog::AtomCatalog(Group group, std::vector<Element> alphabet, std::vector<Sequence> atoms,
                         bool complete, std::size_t bound)
    : group_(std::move(group)), alphabet_(std::move(alphabet)), atoms_(std::move(atoms)),
      complete_(complete) {
  if (alphabet_.empty()) alphabet_ = group_.elements();
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  std::sort(atoms_.begin(), atoms_.end(), canonical_less);
  with_min_.resize(group_.order());
  sparse_.reserve(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Sequence& a = atoms_[i];
    davenport_ = std::max(davenport_, a.size());
    by_length_[a.size()].push_back(i);
    if (!index_.emplace(a, i).second) throw std::logic_error("duplicate atom " + a.to_string());
    with_min_[a.min_element().index].push_back(static_cast<std::uint32_t>(i));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> sp;
    for (Element e : a.support()) sp.emplace_back(e.index, a.count(e));
    sparse_.push_back(std::move(sp));
  }
  complete_up_to_ = complete_ ? davenport_ : bound;
}

std::optional<std::size_t> AtomCatalog::index_of(const Sequence& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void AtomCatalog::require_covers(const Sequence& b) const {
  if (!(b.group() == group_)) throw GroupMismatch("catalog and sequence over different groups");
  if (!complete_)
    throw CatalogIncomplete("catalog for " + group_.name() + " is truncated at length " +
                            std::to_string(complete_up_to_));
  for (Element e : b.support())
    if (!std::binary_search(alphabet_.begin(), alphabet_.end(), e))
      throw CatalogIncomplete("catalog alphabet does not contain " + group_.format(e));
}

namespace {

struct AtomSearch {
  const Group& g;
  std::vector<Element> letters;  // nonzero alphabet, ascending
  std::vector<char> allowed;     // membership of the full alphabet
  std::size_t max_len;           // atom length bound
  std::uint64_t node_limit;
  std::atomic<std::uint64_t>& nodes;

  std::vector<Sequence> found;
  bool truncated = false;

  // Extend prefix `cur` (zero-sumfree, nonempty, last letter letters[last]).
  void dfs(Sequence& cur, std::deque<std::vector<char>>& sums, std::size_t depth, std::size_t last,
           Element sum) {
    if (++nodes > node_limit) throw BudgetExceeded("atom enumeration exceeded its node limit");
    const Element close = g.neg(sum);
    if (close >= letters[last] && allowed[close.index] && cur.size() + 1 <= max_len) {
      Sequence atom = cur;
      atom.add(close);
      if (!is_atom(atom)) throw std::logic_error("closed prefix is not minimal: " + atom.to_string());
      found.push_back(std::move(atom));
    }
    if (sums.size() <= depth + 1) sums.emplace_back(g.order(), 0);
    const std::vector<char>& have = sums[depth];
    for (std::size_t i = last; i < letters.size(); ++i) {
      const Element x = letters[i];
      std::vector<char>& next = sums[depth + 1];
      next = have;
      next[x.index] = 1;
      for (std::uint32_t s = 0; s < have.size(); ++s)
        if (have[s]) next[g.add(Element{s}, x).index] = 1;
      if (next[0]) continue;
      // A zero-sumfree prefix of length max_len means longer atoms exist.
      if (cur.size() + 1 >= max_len) {
        truncated = true;
        continue;
      }
      cur.add(x);
      dfs(cur, sums, depth + 1, i, g.add(sum, x));
      cur.remove(x);
    }
  }
};

}  // namespace

AtomCatalog enumerate_atoms(const Group& g, const EnumerateOptions& opts) {
  if (opts.max_len && *opts.max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  std::vector<Element> alphabet = opts.alphabet.empty() ? g.elements() : opts.alphabet;
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  std::vector<char> allowed(g.order(), 0);
  std::vector<Element> letters;
  for (Element e : alphabet) {
    if (e.index >= g.order()) throw std::invalid_argument("alphabet element out of range");
    allowed[e.index] = 1;
    if (e != g.zero()) letters.push_back(e);
  }
  // Without a bound the DFS stops on its own: zero-sumfree sequences are finite.
  const std::size_t max_len = opts.max_len.value_or(static_cast<std::size_t>(-1));

  std::vector<Sequence> atoms;
  if (allowed[0]) atoms.push_back(Sequence::from_elements(g, {g.zero()}));

  std::atomic<std::uint64_t> nodes{0};
  std::vector<AtomSearch> branches;
  branches.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i)
    branches.push_back(AtomSearch{g, letters, allowed, max_len, opts.node_limit, nodes, {}, false});

  bool truncated = false;
  if (max_len >= 2) {
    detail::parallel_for(letters.size(), opts.jobs, [&](std::size_t i) {
      AtomSearch& s = branches[i];
      Sequence cur(g);
      cur.add(letters[i]);
      std::deque<std::vector<char>> sums(1, std::vector<char>(g.order(), 0));
      sums[0][letters[i].index] = 1;
      if (sums[0][0]) return;
      s.dfs(cur, sums, 0, i, letters[i]);
    });
    for (auto& s : branches) {
      truncated = truncated || s.truncated;
      for (auto& a : s.found) atoms.push_back(std::move(a));
    }
  } else if (!letters.empty()) {
    truncated = true;  // any nonzero letter alone is zero-sumfree
  }
  const std::size_t bound = opts.max_len.value_or(0);
  return AtomCatalog(g, alphabet, std::move(atoms), !truncated, bound);
}

std::size_t davenport(const AtomCatalog& cat) {
  if (!cat.complete()) throw CatalogIncomplete("davenport constant needs a complete catalog");
  return std::max<std::size_t>(cat.davenport(), 1);
}

std::size_t davenport(const Group& g) { return davenport(enumerate_atoms(g)); }

std::size_t d_star(const Group& g) {
  std::size_t d = 1;
  for (int n : g.invariant_factors()) d += static_cast<std::size_t>(n - 1);
  return d;
}

std::vector<Sequence> max_length_atoms(const AtomCatalog& cat) {
  if (!cat.complete()) throw CatalogIncomplete("max-length atoms need a complete catalog");
  std::vector<Sequence> out;
  auto it = cat.by_length().find(cat.davenport());
  if (it == cat.by_length().end()) return out;
  for (std::size_t i : it->second)
    if (cat[i].count(cat.group().zero()) == 0) out.push_back(cat[i]);
  return out;
}

std::vector<Sequence> max_length_atoms(const Group& g) { return max_length_atoms(enumerate_atoms(g)); }

std::string render_catalog(const AtomCatalog& cat) {
  if (!cat.is_full_group()) throw std::invalid_argument("only full-group catalogs can be rendered");
  std::string out = "group " + cat.group().name() + "\n";
  if (cat.complete())
    out += "davenport " + std::to_string(cat.davenport()) + "\n";
  else
    out += "bound " + std::to_string(cat.complete_up_to()) + "\n";
  for (const Sequence& a : cat.atoms()) out += a.to_string() + "\n";
  return out;
}

AtomCatalog parse_catalog(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("group ", 0) != 0)
    throw ParseError("catalog: expected 'group <name>' header");
  const Group g = Group::parse(line.substr(6));
  if (!std::getline(in, line)) throw ParseError("catalog: missing davenport/bound line");
  bool complete = false;
  std::size_t value = 0;
  try {
    if (line.rfind("davenport ", 0) == 0) {
      complete = true;
      value = std::stoul(line.substr(10));
    } else if (line.rfind("bound ", 0) == 0) {
      value = std::stoul(line.substr(6));
    } else {
      throw ParseError("catalog: expected 'davenport <int>' or 'bound <int>'");
    }
  } catch (const std::logic_error&) {
    throw ParseError("catalog: malformed davenport/bound line: " + line);
  }
  std::vector<Sequence> atoms;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Sequence s = Sequence::parse(g, line);
    if (!is_atom(s)) throw ParseError("catalog: not an atom: " + line);
    atoms.push_back(std::move(s));
  }
  AtomCatalog cat(g, {}, std::move(atoms), complete, value);
  if (complete && cat.davenport() != value)
    throw ParseError("catalog: davenport line disagrees with listed atoms");
  return cat;
}

std::filesystem::path AtomCache::default_dir(const std::filesystem::path& fallback) {
  if (const char* env = std::getenv("ZSLAB_CACHE"); env && *env) return env;
  return fallback;
}

std::filesystem::path AtomCache::path_for(const Group& g, std::optional<std::size_t> max_len) const {
  std::string name = g.name();
  if (max_len) name += "." + std::to_string(*max_len);
  return dir_ / (name + ".atoms");
}

std::optional<AtomCatalog> AtomCache::load(const Group& g, std::optional<std::size_t> max_len) const {
  std::ifstream in(path_for(g, max_len), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  AtomCatalog cat = parse_catalog(buf.str());
  if (!(cat.group() == g)) throw ParseError("cache file holds a different group");
  return cat;
}

void AtomCache::store(const AtomCatalog& cat, std::optional<std::size_t> max_len) const {
  std::filesystem::create_directories(dir_);
  const auto path = path_for(cat.group(), max_len);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << render_catalog(cat);
    if (!out) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

AtomCatalog AtomCache::get(const Group& g, std::optional<std::size_t> max_len, int jobs,
                           bool* hit) const {
  if (auto cat = load(g, max_len)) {
    if (hit) *hit = true;
    return *std::move(cat);
  }
  if (hit) *hit = false;
  EnumerateOptions opts;
  opts.max_len = max_len;
  opts.jobs = jobs;
  AtomCatalog cat = enumerate_atoms(g, opts);
  store(cat, max_len);
  return cat;
}

}  // namespace zslab
