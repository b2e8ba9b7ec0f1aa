#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zslab {

// An element of a finite abelian group, identified by its position in the
// lexicographic order on coordinate vectors. Index 0 is always the identity.
struct Element {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

// A finite abelian group C_{n_1} + ... + C_{n_r} in invariant-factor form,
// 1 < n_1 | n_2 | ... | n_r. The trivial group has r = 0.
//
// Groups are cheap to copy: the arithmetic tables are shared.
class Group {
 public:
  Group();  // trivial group
  explicit Group(std::vector<int> invariant_factors);

  // Accepts "C<n>" factors joined by 'x' (either case), e.g. "C2xC3" or
  // "c2xC2xC4", and regroups them into invariant-factor form.
  static Group parse(std::string_view text);

  std::span<const int> invariant_factors() const;
  int rank() const;
  std::uint32_t order() const;
  int exponent() const;
  bool is_cyclic() const { return rank() <= 1; }

  // Canonical rendering, e.g. "C2xC2xC4"; the trivial group is "C1".
  std::string name() const;

  Element zero() const { return Element{0}; }
  Element element(std::span<const int> coords) const;  // reduces mod n_i
  Element element(std::initializer_list<int> coords) const;
  std::vector<int> coords(Element g) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element neg(Element a) const;
  Element mul(long long k, Element a) const;

  // Least m >= 1 with m*g = 0.
  int element_order(Element g) const;

  // Coordinates joined by ','; the only element of the trivial group is "0".
  std::string format(Element g) const;
  Element parse_element(std::string_view text) const;

  // All elements in index order.
  std::vector<Element> elements() const;

  // Canonical generators e_1..e_r with ord(e_i) = n_i.
  Element basis(int i) const;

  friend bool operator==(const Group& a, const Group& b);

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

// Homomorphism G -> G given by the images of the canonical basis.
class GroupMap {
 public:
  // Throws std::invalid_argument unless n_i * images[i] = 0 for every i.
  GroupMap(Group group, std::vector<Element> images);

  static GroupMap identity(const Group& group);
  // g -> k*g
  static GroupMap scaling(const Group& group, long long k);

  const Group& group() const { return group_; }
  std::span<const Element> images() const { return images_; }
  bool is_isomorphism() const { return is_iso_; }

  Element operator()(Element g) const { return table_[g.index]; }

 private:
  Group group_;
  std::vector<Element> images_;
  std::vector<Element> table_;
  bool is_iso_ = false;
};

}  // namespace zslab
