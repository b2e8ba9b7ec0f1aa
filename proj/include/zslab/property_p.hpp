#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zslab/elasticity.hpp"

namespace zslab {

// g1 g2 | u1 and g1 + g2 in supp(u2), with |u1| = |u2| = D(G).
struct PropertyPWitness {
  Element g1;
  Element g2;
  Sequence u1;
  Sequence u2;
};

// First witness in the order (u1 index, g1, g2, u2 index) over the
// max-length atoms. Throws GroupTooSmall when |G| <= 2.
std::optional<PropertyPWitness> check_property_p(const AtomCatalog& cat);
std::optional<PropertyPWitness> check_property_p(const Group& g);

// Independent re-check of all witness conditions.
bool witness_valid(const PropertyPWitness& w, const AtomCatalog& cat);

// g -> first max-length atom containing g, for every nonzero g; none if some
// g lies in no such atom. Throws GroupTooSmall for the trivial group.
std::optional<std::map<Element, Sequence>> check_property_p_star(const AtomCatalog& cat);
std::optional<std::map<Element, Sequence>> check_property_p_star(const Group& g);

struct IntervalShifter {
  PropertyPWitness witness;
  Sequence a_prime;  // (-U1) U1 (-U2) U2
  LengthSet a_prime_lengths;
  bool has_min_plus_one = false;
  bool has_max_minus_one = false;
  std::size_t delta_bar = 0;  // stand-in for max Delta(G)
  std::string delta_policy;
  std::size_t k = 0;
  Sequence a_star;  // (A')^k
};

// Empirical max Delta(L(b)) over zero-sum b with |b| <= max_card (0 left out
// of the support; it only shifts length sets).
std::size_t scan_max_delta(const AtomCatalog& cat, std::size_t max_card);

// Without delta_bound, delta_bar = 2 * scan_max_delta(cat, scan_factor * D(G)).
IntervalShifter build_interval_shifter(const AtomCatalog& cat,
                                       std::optional<std::size_t> delta_bound = std::nullopt,
                                       std::size_t scan_factor = 3);

// prod over nonzero g of A_g (-A_g). Throws PropertyPStarFails.
Sequence build_catenary_shifter(const AtomCatalog& cat);

enum class ShifterMode { interval, catenary3 };

struct ShifterSample {
  Sequence a;
  LengthSet lengths;  // L(a* a)
  bool is_interval = false;
  Rational elasticity;
  std::optional<std::size_t> catenary;  // catenary3 mode only
  bool pass = false;
};

struct ShifterReport {
  Sequence a_star;
  std::size_t k = 0;
  ShifterMode mode = ShifterMode::interval;
  std::vector<ShifterSample> samples;
  bool all_pass = true;
};

// Every sample must be maximal-elastic (SampleNotMaxElastic). Passing means
// L(a* a) is an interval with elasticity D(G)/2, and in catenary3 mode also
// c(a* a) <= 3.
ShifterReport verify_shifter(const AtomCatalog& cat, const Sequence& a_star,
                             const std::vector<Sequence>& samples, ShifterMode mode,
                             std::size_t k = 0, std::size_t cap = 20000, int jobs = 1);

// Maximal-elastic a with |a| <= factor * D(G), plus the B_rho generators of
// degree <= factor; canonical order.
std::vector<Sequence> default_shifter_samples(const AtomCatalog& cat, std::size_t factor = 4);

}  // namespace zslab
