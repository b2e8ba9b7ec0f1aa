#include "zslab/property_p.hpp"

#include <algorithm>

#include "zslab/detail/parallel.hpp"
#include "zslab/errors.hpp"

namespace zslab {

namespace {

void require_full(const AtomCatalog& cat) {
  if (!cat.is_full_group() || !cat.complete())
    throw CatalogIncomplete("Property P needs the complete catalog of all of G");
}

}  // namespace

std::optional<PropertyPWitness> check_property_p(const AtomCatalog& cat) {
  require_full(cat);
  const Group& g = cat.group();
  if (g.order() <= 2) throw GroupTooSmall("Property P needs |G| >= 3, got " + g.name());
  const auto max = max_length_atoms(cat);
  for (const Sequence& u1 : max) {
    const auto supp = u1.support();
    for (std::size_t i = 0; i < supp.size(); ++i)
      for (std::size_t j = i; j < supp.size(); ++j) {
        if (i == j && u1.count(supp[i]) < 2) continue;
        const Element s = g.add(supp[i], supp[j]);
        for (const Sequence& u2 : max)
          if (u2.count(s) > 0) return PropertyPWitness{supp[i], supp[j], u1, u2};
      }
  }
  return std::nullopt;
}

std::optional<PropertyPWitness> check_property_p(const Group& g) {
  if (g.order() <= 2) throw GroupTooSmall("Property P needs |G| >= 3, got " + g.name());
  return check_property_p(enumerate_atoms(g));
}

bool witness_valid(const PropertyPWitness& w, const AtomCatalog& cat) {
  const std::size_t d = davenport(cat);
  if (!is_atom(w.u1) || !is_atom(w.u2) || w.u1.size() != d || w.u2.size() != d) return false;
  Sequence pair = Sequence::from_elements(cat.group(), {w.g1, w.g2});
  return pair.divides(w.u1) && w.u2.count(cat.group().add(w.g1, w.g2)) > 0;
}

std::optional<std::map<Element, Sequence>> check_property_p_star(const AtomCatalog& cat) {
  require_full(cat);
  const Group& g = cat.group();
  if (g.order() < 2) throw GroupTooSmall("Property P* needs |G| >= 2");
  const auto max = max_length_atoms(cat);
  std::map<Element, Sequence> out;
  for (Element e : g.elements()) {
    if (e == g.zero()) continue;
    auto it = std::find_if(max.begin(), max.end(), [&](const Sequence& u) { return u.count(e) > 0; });
    if (it == max.end()) return std::nullopt;
    out.emplace(e, *it);
  }
  return out;
}

std::optional<std::map<Element, Sequence>> check_property_p_star(const Group& g) {
  if (g.order() < 2) throw GroupTooSmall("Property P* needs |G| >= 2");
  return check_property_p_star(enumerate_atoms(g));
}

std::size_t scan_max_delta(const AtomCatalog& cat, std::size_t max_card) {
  std::vector<Element> nonzero = cat.group().elements();
  nonzero.erase(nonzero.begin());
  std::size_t best = 0;
  for_each_zero_sum(cat.group(), nonzero, max_card, [&](const Sequence& b) {
    best = std::max(best, length_set(b, cat).max_delta());
  });
  return best;
}

IntervalShifter build_interval_shifter(const AtomCatalog& cat, std::optional<std::size_t> delta_bound,
                                       std::size_t scan_factor) {
  require_full(cat);
  if (cat.group().order() <= 2) throw PropertyPFails("Property P needs |G| >= 3");
  auto w = check_property_p(cat);
  if (!w) throw PropertyPFails(cat.group().name() + " does not satisfy Property P");

  Sequence a_prime = negate(w->u1) * w->u1 * negate(w->u2) * w->u2;
  LengthSet l = length_set(a_prime, cat);
  IntervalShifter s{*w, a_prime, l, l.contains(l.min() + 1), l.contains(l.max() - 1), 0, {}, 0,
                    Sequence(cat.group())};
  if (delta_bound) {
    s.delta_bar = *delta_bound;
    s.delta_policy = "supplied";
  } else {
    const std::size_t card = scan_factor * cat.davenport();
    s.delta_bar = 2 * scan_max_delta(cat, card);
    s.delta_policy = "2 * max Delta(L(b)) over zero-sum b with |b| <= " + std::to_string(card);
  }
  s.k = std::max<std::size_t>({1, s.delta_bar, l.max() - l.min()});
  s.a_star = a_prime.pow(static_cast<std::uint32_t>(s.k));
  return s;
}

Sequence build_catenary_shifter(const AtomCatalog& cat) {
  const auto assignment = check_property_p_star(cat);
  if (!assignment) throw PropertyPStarFails(cat.group().name() + " does not satisfy Property P*");
  Sequence out(cat.group());
  for (const auto& [g, a] : *assignment) out *= a * negate(a);
  return out;
}

ShifterReport verify_shifter(const AtomCatalog& cat, const Sequence& a_star,
                             const std::vector<Sequence>& samples, ShifterMode mode, std::size_t k,
                             std::size_t cap, int jobs) {
  require_full(cat);
  for (const Sequence& a : samples)
    if (!is_max_elastic(a, cat)) throw SampleNotMaxElastic("sample is not maximal-elastic: " + a.to_string());
  const Rational target(static_cast<std::int64_t>(cat.davenport()), 2);

  std::vector<std::optional<ShifterSample>> slots(samples.size());
  detail::parallel_for(samples.size(), jobs, [&](std::size_t i) {
    const Sequence b = a_star * samples[i];
    LengthSet l = length_set(b, cat);
    ShifterSample s{samples[i], l, l.is_interval(), l.elasticity(), std::nullopt, false};
    s.pass = s.is_interval && s.elasticity == target;
    if (mode == ShifterMode::catenary3) {
      s.catenary = catenary_degree(b, cat, cap);
      s.pass = s.pass && *s.catenary <= 3;
    }
    slots[i] = std::move(s);
  });

  ShifterReport r{a_star, k, mode, {}, true};
  for (auto& s : slots) {
    r.all_pass = r.all_pass && s->pass;
    r.samples.push_back(std::move(*s));
  }
  return r;
}

std::vector<Sequence> default_shifter_samples(const AtomCatalog& cat, std::size_t factor) {
  std::vector<Sequence> out = enumerate_max_elastic(cat, factor * cat.davenport());
  for (Sequence& x : enumerate_brho_atoms(cat, factor).generators)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace zslab
