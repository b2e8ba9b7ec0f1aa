#include "zslab/factorizations.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "zslab/errors.hpp"

namespace zslab {

// ---------------------------------------------------------------- Factorization

Factorization::Factorization(std::vector<Part> parts, std::shared_ptr<const Sequence> target)
    : parts_(std::move(parts)), target_(std::move(target)) {
  for (const auto& [idx, mult] : parts_) length_ += mult;
}

Factorization::Factorization(const AtomCatalog& cat, std::vector<Part> parts,
                             const Sequence& target) {
  std::sort(parts.begin(), parts.end());
  std::vector<Part> merged;
  for (const auto& p : parts) {
    if (p.first >= cat.size()) throw std::out_of_range("atom index out of range");
    if (p.second == 0) continue;
    if (!merged.empty() && merged.back().first == p.first)
      merged.back().second += p.second;
    else
      merged.push_back(p);
  }
  Sequence product(cat.group());
  for (const auto& [idx, mult] : merged) product *= cat[idx].pow(mult);
  if (!(product == target))
    throw std::invalid_argument("factorization multiplies to " + product.to_string() + ", not " +
                                target.to_string());
  parts_ = std::move(merged);
  for (const auto& [idx, mult] : parts_) length_ += mult;
  target_ = std::make_shared<const Sequence>(target);
}

std::string Factorization::to_string(const AtomCatalog& cat) const {
  std::string out;
  for (const auto& [idx, mult] : parts_) {
    out += "(" + cat[idx].to_string() + ")";
    if (mult != 1) out += "^" + std::to_string(mult);
  }
  return out;
}

// ---------------------------------------------------------------- LengthSet

LengthSet::LengthSet(std::vector<std::size_t> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw std::invalid_argument("a length set is nonempty");
  std::sort(lengths_.begin(), lengths_.end());
  lengths_.erase(std::unique(lengths_.begin(), lengths_.end()), lengths_.end());
}

bool LengthSet::contains(std::size_t n) const {
  return std::binary_search(lengths_.begin(), lengths_.end(), n);
}

std::vector<std::size_t> LengthSet::delta() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < lengths_.size(); ++i) out.push_back(lengths_[i] - lengths_[i - 1]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t LengthSet::max_delta() const {
  const auto d = delta();
  return d.empty() ? 0 : d.back();
}

Rational LengthSet::elasticity() const {
  if (min() == 0) return Rational(1);
  return Rational(static_cast<std::int64_t>(max()), static_cast<std::int64_t>(min()));
}

LengthSetStats lengthset_stats(const LengthSet& l) {
  return LengthSetStats{l.delta(), l.elasticity(), l.is_interval()};
}

// ---------------------------------------------------------------- length DP

namespace {

// Memoized L(residual). Every factorization of a nonempty residual uses
// exactly one atom that covers a fixed copy of its smallest element, so it
// is enough to branch over the atoms whose smallest element is that one.
class LengthDP {
 public:
  LengthDP(const Sequence& b, const AtomCatalog& cat)
      : cat_(cat), cur_(b.counts()), remaining_(b.size()) {
    words_ = b.size() / 64 + 1;
    stride_.assign(cur_.size(), 0);
    unsigned __int128 radix = 1;
    for (std::uint32_t i = 0; i < cur_.size(); ++i) {
      if (!cur_[i]) continue;
      pos_.push_back(i);
      if (!wide_) {
        stride_[i] = static_cast<std::uint64_t>(radix);
        radix *= static_cast<unsigned __int128>(cur_[i]) + 1;
        if (radix > std::numeric_limits<std::uint64_t>::max()) wide_ = true;
      }
    }
    for (std::uint32_t i : pos_) key_ += static_cast<std::uint64_t>(cur_[i]) * stride_[i];
    // slot 0: the empty residual, L = {0}
    pool_.assign(words_, 0);
    pool_[0] = 1;
  }

  LengthSet run() {
    const std::uint32_t slot = solve();
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_; ++w)
      for (std::size_t bit = 0; bit < 64; ++bit)
        if (pool_[slot * words_ + w] >> bit & 1) out.push_back(w * 64 + bit);
    if (out.empty()) throw std::logic_error("sequence has no factorization (not zero-sum?)");
    return LengthSet(std::move(out));
  }

 private:
  std::string wide_key() const {
    std::string k;
    k.reserve(pos_.size() * 4);
    for (std::uint32_t i : pos_) k.append(reinterpret_cast<const char*>(&cur_[i]), 4);
    return k;
  }

  std::uint32_t solve() {
    if (remaining_ == 0) return 0;
    std::string skey;
    if (wide_) {
      skey = wide_key();
      if (auto it = memo_wide_.find(skey); it != memo_wide_.end()) return it->second;
    } else if (auto it = memo_.find(key_); it != memo_.end()) {
      return it->second;
    }

    std::uint32_t first = 0;
    for (std::uint32_t i : pos_)
      if (cur_[i]) {
        first = i;
        break;
      }
    std::vector<std::uint64_t> acc(words_, 0);
    for (std::uint32_t idx : cat_.with_min(Element{first})) {
      const auto& sp = cat_.sparse(idx);
      bool fits = true;
      for (const auto& [e, c] : sp)
        if (cur_[e] < c) {
          fits = false;
          break;
        }
      if (!fits) continue;
      std::size_t len = 0;
      for (const auto& [e, c] : sp) {
        cur_[e] -= c;
        key_ -= static_cast<std::uint64_t>(c) * stride_[e];
        len += c;
      }
      remaining_ -= len;
      const std::uint32_t child = solve();
      std::uint64_t carry = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        const std::uint64_t v = pool_[child * words_ + w];
        acc[w] |= (v << 1) | carry;
        carry = v >> 63;
      }
      remaining_ += len;
      for (const auto& [e, c] : sp) {
        cur_[e] += c;
        key_ += static_cast<std::uint64_t>(c) * stride_[e];
      }
    }
    const auto slot = static_cast<std::uint32_t>(pool_.size() / words_);
    pool_.insert(pool_.end(), acc.begin(), acc.end());
    if (wide_)
      memo_wide_.emplace(std::move(skey), slot);
    else
      memo_.emplace(key_, slot);
    return slot;
  }

  const AtomCatalog& cat_;
  std::vector<std::uint32_t> cur_;
  std::size_t remaining_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint64_t> stride_;
  bool wide_ = false;
  std::uint64_t key_ = 0;
  std::size_t words_ = 1;
  std::unordered_map<std::uint64_t, std::uint32_t> memo_;
  std::unordered_map<std::string, std::uint32_t> memo_wide_;
  std::vector<std::uint64_t> pool_;
};

void require_zero_sum(const Sequence& b) {
  if (sigma(b) != b.group().zero())
    throw std::invalid_argument("not a zero-sum sequence: " + b.to_string());
}

}  // namespace

LengthSet length_set(const Sequence& b, const AtomCatalog& cat) {
  cat.require_covers(b);
  require_zero_sum(b);
  return LengthDP(b, cat).run();
}

// ---------------------------------------------------------------- enumeration

namespace {

struct FactorizationSearch {
  const AtomCatalog& cat;
  std::size_t cap;
  std::shared_ptr<const Sequence> target;
  std::vector<std::uint32_t> cur;
  std::size_t remaining;
  std::vector<std::uint32_t> picks;
  std::vector<std::vector<Factorization::Part>> found;

  void emit() {
    std::vector<std::uint32_t> sorted = picks;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Factorization::Part> parts;
    for (std::uint32_t idx : sorted) {
      if (!parts.empty() && parts.back().first == idx)
        ++parts.back().second;
      else
        parts.emplace_back(idx, 1);
    }
    found.push_back(std::move(parts));
    if (found.size() > cap)
      throw FactorizationSetTooLarge("more than " + std::to_string(cap) + " factorizations of " +
                                     target->to_string());
  }

  // Picks are nondecreasing in (smallest element, atom index), which is a
  // unique ordering of every multiset of atoms.
  void dfs(std::uint32_t last_min, std::uint32_t last_idx) {
    if (remaining == 0) {
      emit();
      return;
    }
    std::uint32_t first = 0;
    while (cur[first] == 0) ++first;
    for (std::uint32_t idx : cat.with_min(Element{first})) {
      if (first == last_min && idx < last_idx) continue;
      const auto& sp = cat.sparse(idx);
      bool fits = true;
      for (const auto& [e, c] : sp)
        if (cur[e] < c) {
          fits = false;
          break;
        }
      if (!fits) continue;
      std::size_t len = 0;
      for (const auto& [e, c] : sp) {
        cur[e] -= c;
        len += c;
      }
      remaining -= len;
      picks.push_back(idx);
      dfs(first, idx);
      picks.pop_back();
      remaining += len;
      for (const auto& [e, c] : sp) cur[e] += c;
    }
  }
};

}  // namespace

std::vector<Factorization> enumerate_factorizations(const Sequence& b, const AtomCatalog& cat,
                                                    std::size_t cap) {
  cat.require_covers(b);
  require_zero_sum(b);
  auto target = std::make_shared<const Sequence>(b);
  FactorizationSearch s{cat, cap, target, b.counts(), b.size(), {}, {}};
  s.dfs(std::numeric_limits<std::uint32_t>::max(), 0);
  std::vector<Factorization> out;
  out.reserve(s.found.size());
  for (auto& parts : s.found) out.push_back(Factorization(std::move(parts), target));
  return out;
}

// ---------------------------------------------------------------- distance

std::size_t distance(const Factorization& x, const Factorization& y) {
  if (!(x.target() == y.target()))
    throw std::invalid_argument("distance between factorizations of different elements");
  std::size_t common = 0;
  auto i = x.parts().begin();
  auto j = y.parts().begin();
  while (i != x.parts().end() && j != y.parts().end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      common += std::min(i->second, j->second);
      ++i;
      ++j;
    }
  }
  return std::max(x.length(), y.length()) - common;
}

// The catenary degree is the bottleneck of a minimum spanning tree of the
// complete distance graph on Z(b); Prim's algorithm finds it without
// materializing the O(N^2) edge list.
std::size_t catenary_degree(const std::vector<Factorization>& z) {
  const std::size_t n = z.size();
  if (n <= 1) return 0;
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best(n, kInf);
  std::vector<char> in_tree(n, 0);
  std::size_t worst = 0;
  std::size_t v = 0;
  for (std::size_t step = 0; step < n; ++step) {
    in_tree[v] = 1;
    std::size_t next = n;
    for (std::size_t u = 0; u < n; ++u) {
      if (in_tree[u]) continue;
      best[u] = std::min(best[u], distance(z[v], z[u]));
      if (next == n || best[u] < best[next]) next = u;
    }
    if (next == n) break;
    worst = std::max(worst, best[next]);
    v = next;
  }
  return worst;
}

std::size_t catenary_degree(const Sequence& b, const AtomCatalog& cat, std::size_t cap) {
  return catenary_degree(enumerate_factorizations(b, cat, cap));
}

// ---------------------------------------------------------------- rho_k

namespace {

struct RhoSearch {
  const AtomCatalog& cat;
  std::size_t k;
  std::uint64_t node_cap;
  std::size_t atom_bound;  // D(G): longest atom
  RhoKResult result;
  Sequence product;

  void dfs(std::size_t depth, std::size_t from) {
    if (++result.nodes > node_cap) {
      result.exhaustive = false;
      return;
    }
    const std::size_t zeros = product.count(product.group().zero());
    // Every remaining atom adds at most D terms, and each factor of a
    // nonzero part uses at least two of them.
    const std::size_t optimistic =
        zeros + (product.size() - zeros + (k - depth) * std::max<std::size_t>(2, atom_bound)) / 2;
    if (result.witness && optimistic <= result.value) return;
    if (depth == k) {
      const std::size_t m = length_set(product, cat).max();
      if (!result.witness || m > result.value) {
        result.value = m;
        result.witness = product;
      }
      return;
    }
    for (std::size_t i = from; i < cat.size() && result.nodes <= node_cap; ++i) {
      product *= cat[i];
      dfs(depth + 1, i);
      product = divide(product, cat[i]);
    }
  }
};

}  // namespace

RhoKResult rho_k(const AtomCatalog& cat, std::size_t k, std::uint64_t node_cap) {
  if (k < 1) throw std::invalid_argument("rho_k needs k >= 1");
  if (!cat.complete()) throw CatalogIncomplete("rho_k needs a complete catalog");
  RhoSearch s{cat, k, node_cap, cat.davenport(), {}, Sequence(cat.group())};
  s.dfs(0, 0);
  return s.result;
}

// ---------------------------------------------------------------- AAMP

namespace {

// Every decomposition of L with difference d, keyed by (y, max L*).
std::vector<AAMPDecomposition> all_decompositions(const LengthSet& l, std::size_t d) {
  std::vector<long long> v(l.lengths().begin(), l.lengths().end());
  const long long dd = static_cast<long long>(d);
  const long long lo = v.front();
  const long long hi = v.back();
  std::vector<AAMPDecomposition> out;
  for (long long y : v) {
    std::vector<char> residue(d, 0);
    for (long long x : v) residue[static_cast<std::size_t>(((x - y) % dd + dd) % dd)] = 1;
    std::vector<std::size_t> period;
    for (std::size_t r = 0; r < d; ++r)
      if (residue[r]) period.push_back(r);
    period.push_back(d);
    for (long long end : v) {
      if (end < y) continue;
      const long long e = end - y;
      // L* must be all of (period + dZ) inside [0, e].
      std::vector<long long> central;
      for (long long x : v)
        if (x >= y && x <= end) central.push_back(x - y);
      std::size_t expected = 0;
      bool ok = true;
      for (long long t = 0; t <= e && ok; ++t) {
        if (!residue[static_cast<std::size_t>(t % dd)]) continue;
        if (expected >= central.size() || central[expected] != t) ok = false;
        ++expected;
      }
      if (!ok || expected != central.size()) continue;
      AAMPDecomposition dec;
      dec.shift = y;
      dec.difference = d;
      dec.period = period;
      dec.length = static_cast<std::size_t>(e / dd) + 1;
      dec.bound = static_cast<std::size_t>(std::max<long long>({0, y - lo, hi - end}));
      dec.central = std::move(central);
      for (long long x : v) {
        if (x < y) dec.initial.push_back(x - y);
        if (x > end) dec.final_part.push_back(x - y);
      }
      out.push_back(std::move(dec));
    }
  }
  return out;
}

}  // namespace

std::optional<AAMPDecomposition> aamp_decompose(const LengthSet& l, std::size_t d,
                                                std::size_t max_bound) {
  if (d < 1) throw std::invalid_argument("AAMP difference must be >= 1");
  std::optional<AAMPDecomposition> best;
  for (auto& dec : all_decompositions(l, d)) {
    if (dec.bound > max_bound) continue;
    if (!best || dec.length > best->length ||
        (dec.length == best->length &&
         (dec.bound < best->bound || (dec.bound == best->bound && dec.shift < best->shift))))
      best = std::move(dec);
  }
  return best;
}

AAMPBound minimal_aamp_bound(const LengthSet& l, const std::vector<std::size_t>& deltas) {
  std::vector<std::size_t> ds(deltas);
  std::sort(ds.begin(), ds.end());
  std::optional<AAMPBound> best;
  for (std::size_t d : ds) {
    if (d == 0) continue;
    for (const auto& dec : all_decompositions(l, d))
      if (!best || dec.bound < best->bound) best = AAMPBound{d, dec.bound};
  }
  if (!best) throw std::invalid_argument("minimal_aamp_bound needs a positive candidate difference");
  return *best;
}

}  // namespace zslab
