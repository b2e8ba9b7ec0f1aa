#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zslab/sequence.hpp"

namespace zslab {

// True iff s is a minimal zero-sum sequence: nonempty, sigma(s) = 0 and no
// proper nonempty sub-multiset sums to 0.
bool is_atom(const Sequence& s);

struct EnumerateOptions {
  // Only atoms of length <= max_len; unset runs to exhaustion.
  std::optional<std::size_t> max_len;
  // Restrict to atoms over this subset (the catalog of B(G_0)); empty = all of G.
  std::vector<Element> alphabet;
  // Hard stop on DFS nodes; BudgetExceeded when hit.
  std::uint64_t node_limit = 2'000'000'000ULL;
  int jobs = 1;
};

// The minimal zero-sum sequences over G (or over a subset G_0), in canonical
// order. Immutable once built.
class AtomCatalog {
 public:
  AtomCatalog(Group group, std::vector<Element> alphabet, std::vector<Sequence> atoms,
              bool complete, std::size_t bound);

  const Group& group() const { return group_; }
  // Sorted; equals all of G for a full catalog.
  const std::vector<Element>& alphabet() const { return alphabet_; }
  bool is_full_group() const { return alphabet_.size() == group_.order(); }

  std::size_t size() const { return atoms_.size(); }
  const Sequence& operator[](std::size_t i) const { return atoms_[i]; }
  const std::vector<Sequence>& atoms() const { return atoms_; }

  // Max atom length; equals D(G_0) when complete.
  std::size_t davenport() const { return davenport_; }
  bool complete() const { return complete_; }
  std::size_t complete_up_to() const { return complete_up_to_; }
  const std::map<std::size_t, std::vector<std::size_t>>& by_length() const { return by_length_; }

  std::optional<std::size_t> index_of(const Sequence& s) const;

  // Atom indices whose smallest element is g. Every atom dividing a sequence
  // whose smallest element is g and containing g is in this list.
  const std::vector<std::uint32_t>& with_min(Element g) const { return with_min_[g.index]; }
  // Sparse (element index, multiplicity) pairs of atom i.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& sparse(std::size_t i) const {
    return sparse_[i];
  }

  // Throws CatalogIncomplete unless this catalog can factor b exactly.
  void require_covers(const Sequence& b) const;

 private:
  Group group_;
  std::vector<Element> alphabet_;
  std::vector<Sequence> atoms_;
  std::size_t davenport_ = 0;
  bool complete_ = false;
  std::size_t complete_up_to_ = 0;
  std::map<std::size_t, std::vector<std::size_t>> by_length_;
  std::unordered_map<Sequence, std::size_t, SequenceHash> index_;
  std::vector<std::vector<std::uint32_t>> with_min_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> sparse_;
};

AtomCatalog enumerate_atoms(const Group& g, const EnumerateOptions& opts = {});

// D(G), by exhaustive enumeration.
std::size_t davenport(const Group& g);
std::size_t davenport(const AtomCatalog& cat);
// 1 + sum (n_i - 1).
std::size_t d_star(const Group& g);

// {U in A(G) : |U| = D(G)} in catalog order; the atom 0 is never included.
std::vector<Sequence> max_length_atoms(const AtomCatalog& cat);
std::vector<Sequence> max_length_atoms(const Group& g);

// Text form of a catalog:
//   group <name>
//   davenport <D>            (or "bound <B>" when truncated)
//   <atom>                   one per line, catalog order
// Only full-group catalogs have a file form.
std::string render_catalog(const AtomCatalog& cat);
AtomCatalog parse_catalog(const std::string& text);

// Catalogs persisted as "<dir>/<group>.atoms" (or "<group>.<bound>.atoms"
// for truncated ones).
class AtomCache {
 public:
  explicit AtomCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // ZSLAB_CACHE if set, else `fallback`.
  static std::filesystem::path default_dir(const std::filesystem::path& fallback);

  std::filesystem::path path_for(const Group& g, std::optional<std::size_t> max_len) const;
  std::optional<AtomCatalog> load(const Group& g, std::optional<std::size_t> max_len) const;
  void store(const AtomCatalog& cat, std::optional<std::size_t> max_len) const;
  // Returns the cached catalog or computes and stores it. `hit` reports which.
  AtomCatalog get(const Group& g, std::optional<std::size_t> max_len = std::nullopt, int jobs = 1,
                  bool* hit = nullptr) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace zslab
