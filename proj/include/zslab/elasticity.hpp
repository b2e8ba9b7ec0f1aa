#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zslab/factorizations.hpp"

namespace zslab {

// A sequence with rho(L(b)) = D(G)/2, witnessed by one factorization into
// atoms of length D(G) and one into atoms of length 2.
struct MaxElasticCertificate {
  Factorization top;
  Factorization bottom;
  std::size_t k = 0;  // min L(b) = |b| / D(G)
  std::size_t l = 0;  // max L(b) = |b| / 2
};

// Structural test: no 0 in the support, v_g = v_{-g} (even when 2g = 0),
// and an exact cover by maximal-length atoms. `cat` must be the complete
// catalog of the whole group.
std::optional<MaxElasticCertificate> is_max_elastic(const Sequence& b, const AtomCatalog& cat);

// v_g(b) = v_{-g}(b) for all g, v_g(b) even when 2g = 0, and 0 not in supp(b).
bool pairs_up(const Sequence& b);

// All maximal-elastic b with |b| <= max_card, canonically ordered.
std::vector<Sequence> enumerate_max_elastic(const AtomCatalog& cat, std::size_t max_card);
std::vector<Sequence> enumerate_max_elastic(const Group& g, std::size_t max_card);

// For cyclic G of order n >= 3: the exponents n_g with
// b = prod (g^n (-g)^n)^{n_g} over generator pairs, keyed by the smaller
// element of each pair {g, -g}; none if b does not have this shape.
std::optional<std::map<Element, std::uint32_t>> cyclic_max_elastic_form(const Sequence& b);

struct BRhoCatalog {
  Group group;
  std::vector<Sequence> generators;  // canonical order
  std::size_t degree_bound = 0;      // searched up to this many max-length atoms
  bool certified_complete = false;
};

// Irreducibles of the monoid of maximal-elastic sequences (plus 1), searched
// by degree = number of max-length atom factors.
BRhoCatalog enumerate_brho_atoms(const AtomCatalog& cat, std::size_t degree_bound);
BRhoCatalog enumerate_brho_atoms(const Group& g, std::size_t degree_bound);

struct CensusRow {
  std::size_t n = 0;
  std::uint64_t omega_count = 0;       // |n Omega|
  std::uint64_t cumulative_count = 0;  // #{B in B_rho : |B| <= n}, identity included
  std::optional<Rational> ratio_shift_k0;          // |(n-k0) Omega| / |n Omega|
  std::optional<Rational> ratio_cumulative_alpha;  // cumulative(n-alpha) / cumulative(n)
};

struct Census {
  Group group;
  std::size_t k0 = 1;
  std::size_t alpha = 1;
  bool generators_complete = false;
  std::vector<CensusRow> rows;

  // Header plus one line per row; undefined ratios print as "NA".
  std::string to_tsv() const;
};

Census brho_census(const BRhoCatalog& brho, const AtomCatalog& cat, std::size_t n_max,
                   std::size_t k0 = 1, std::size_t alpha = 1);

// Third finite differences of a count column; empty if fewer than 4 values.
std::vector<long long> third_differences(const std::vector<std::uint64_t>& counts);

}  // namespace zslab
