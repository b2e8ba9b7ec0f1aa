#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace zslab {

namespace detail {

template <class Fn>
void zero_sum_dfs(const Group& g, const std::vector<Element>& alphabet, std::size_t max_card,
                  std::size_t from, Element sum, Sequence& cur, Fn& fn) {
  if (!cur.empty() && sum == g.zero()) fn(static_cast<const Sequence&>(cur));
  if (cur.size() == max_card) return;
  for (std::size_t i = from; i < alphabet.size(); ++i) {
    cur.add(alphabet[i]);
    zero_sum_dfs(g, alphabet, max_card, i, g.add(sum, alphabet[i]), cur, fn);
    cur.remove(alphabet[i]);
  }
}

}  // namespace detail

template <class Fn>
void for_each_zero_sum(const Group& g, const std::vector<Element>& alphabet, std::size_t max_card,
                       Fn&& fn) {
  Sequence cur(g);
  detail::zero_sum_dfs(g, alphabet, max_card, 0, g.zero(), cur, fn);
}

}  // namespace zslab
