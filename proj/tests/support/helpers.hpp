#pragma once

#include <random>
#include <string>
#include <vector>

#include "zslab/sequence.hpp"

namespace zslab::testing {

inline Sequence seq(const Group& g, const std::string& text) { return Sequence::parse(g, text); }
inline Sequence seq(const std::string& group, const std::string& text) {
  return Sequence::parse(Group::parse(group), text);
}

inline std::vector<std::string> render(const std::vector<Sequence>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

// Random sequence with |s| <= max_len over the whole group.
inline Sequence random_sequence(const Group& g, std::mt19937_64& rng, std::size_t max_len) {
  Sequence s(g);
  const std::size_t n = rng() % (max_len + 1);
  for (std::size_t i = 0; i < n; ++i) s.add(Element{static_cast<std::uint32_t>(rng() % g.order())});
  return s;
}

// Random automorphism: random basis images until the map is bijective.
inline GroupMap random_automorphism(const Group& g, std::mt19937_64& rng) {
  const auto factors = g.invariant_factors();
  while (true) {
    std::vector<Element> imgs;
    bool ok = true;
    for (std::size_t i = 0; i < factors.size() && ok; ++i) {
      std::vector<Element> cand;
      for (Element e : g.elements())
        if (g.mul(factors[i], e) == g.zero()) cand.push_back(e);
      imgs.push_back(cand[rng() % cand.size()]);
    }
    GroupMap m(g, imgs);
    if (m.is_isomorphism()) return m;
  }
}

}  // namespace zslab::testing
