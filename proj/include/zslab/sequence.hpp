#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zslab/group.hpp"

namespace zslab {

// A finite multiset over a group: the free abelian monoid F(G).
//
// Multiplicities are stored densely by element index, so two sequences over
// the same group are equal iff their count vectors are equal.
class Sequence {
 public:
  explicit Sequence(Group group);
  Sequence(Group group, std::vector<std::uint32_t> counts);
  static Sequence from_elements(Group group, const std::vector<Element>& elems);

  // "<coords>^<mult>" terms joined by '+', e.g. "1^2+2" over C4 or
  // "0,1+1,0+1,1" over C2xC2. The empty sequence is "".
  static Sequence parse(const Group& group, std::string_view text);
  std::string to_string() const;

  const Group& group() const { return group_; }
  const std::vector<std::uint32_t>& counts() const { return counts_; }

  std::uint32_t count(Element g) const { return counts_[g.index]; }  // v_g
  std::size_t size() const { return size_; }                         // |S|
  bool empty() const { return size_ == 0; }
  std::vector<Element> support() const;
  std::vector<Element> elements() const;  // with repetition, nondecreasing
  // Smallest element of the support; the sequence must be nonempty.
  Element min_element() const;

  void add(Element g, std::uint32_t mult = 1);
  // Throws NotADivisor if fewer than `mult` copies are present.
  void remove(Element g, std::uint32_t mult = 1);

  Sequence operator*(const Sequence& other) const;
  Sequence& operator*=(const Sequence& other);
  Sequence pow(std::uint32_t k) const;

  // v_g(this) <= v_g(other) for all g.
  bool divides(const Sequence& other) const;

  friend bool operator==(const Sequence& a, const Sequence& b) {
    return a.counts_ == b.counts_ && a.group_ == b.group_;
  }

 private:
  Group group_;
  std::vector<std::uint32_t> counts_;
  std::size_t size_ = 0;
};

// Catalog order: shorter first, then lexicographic on the nondecreasing
// element lists.
bool canonical_less(const Sequence& a, const Sequence& b);

struct SequenceHash {
  std::size_t operator()(const Sequence& s) const noexcept;
};

Element sigma(const Sequence& s);

struct Classification {
  bool is_empty = false;
  bool is_zero_sum = false;  // true for the empty sequence (monoid identity)
  bool is_zero_sumfree = false;
  bool is_squarefree = false;
};
Classification classify(const Sequence& s);

// Sums of all nonempty sub-multisets, as a membership vector over G.
std::vector<char> subsequence_sums(const Sequence& s);
bool is_zero_sumfree(const Sequence& s);

// Quotient b * a^{-1} in F(G). Throws NotADivisor.
Sequence divide(const Sequence& b, const Sequence& a);
Sequence negate(const Sequence& s);
Sequence apply_map(const GroupMap& m, const Sequence& s);

// Calls fn(seq) for every zero-sum sequence with 1 <= |seq| <= max_card whose
// support lies in `alphabet`, in a deterministic order.
template <class Fn>
void for_each_zero_sum(const Group& g, const std::vector<Element>& alphabet, std::size_t max_card,
                       Fn&& fn);

}  // namespace zslab

#include "zslab/detail/sequence_enum.hpp"
