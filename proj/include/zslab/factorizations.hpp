#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "zslab/atoms.hpp"
#include "zslab/rational.hpp"

namespace zslab {

// A multiset of catalog atoms, stored as sorted (atom index, multiplicity)
// pairs. Every factorization remembers the sequence it factors.
class Factorization {
 public:
  using Part = std::pair<std::uint32_t, std::uint32_t>;

  // Validates that the product of the parts equals `target`.
  Factorization(const AtomCatalog& cat, std::vector<Part> parts, const Sequence& target);

  const std::vector<Part>& parts() const { return parts_; }
  std::size_t length() const { return length_; }
  const Sequence& target() const { return *target_; }

  // Rendered as "(atom)(atom)^k..." in catalog order.
  std::string to_string(const AtomCatalog& cat) const;

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.parts_ == b.parts_ && *a.target_ == *b.target_;
  }

 private:
  friend std::vector<Factorization> enumerate_factorizations(const Sequence&, const AtomCatalog&,
                                                             std::size_t);
  Factorization(std::vector<Part> parts, std::shared_ptr<const Sequence> target);

  std::vector<Part> parts_;
  std::size_t length_ = 0;
  std::shared_ptr<const Sequence> target_;
};

class LengthSet {
 public:
  explicit LengthSet(std::vector<std::size_t> lengths);

  const std::vector<std::size_t>& lengths() const { return lengths_; }
  std::size_t min() const { return lengths_.front(); }
  std::size_t max() const { return lengths_.back(); }
  bool contains(std::size_t n) const;

  // Consecutive gaps, sorted and deduplicated.
  std::vector<std::size_t> delta() const;
  std::size_t max_delta() const;  // 0 when there is no gap
  // max/min; 1 for the identity's length set {0}.
  Rational elasticity() const;
  bool is_interval() const { return max() - min() + 1 == lengths_.size(); }

  friend bool operator==(const LengthSet&, const LengthSet&) = default;

 private:
  std::vector<std::size_t> lengths_;
};

struct LengthSetStats {
  std::vector<std::size_t> delta;
  Rational elasticity;
  bool is_interval = false;
};
LengthSetStats lengthset_stats(const LengthSet& l);

// All factorizations of b, duplicate-free, in DFS order. Throws
// FactorizationSetTooLarge once more than `cap` are found.
std::vector<Factorization> enumerate_factorizations(const Sequence& b, const AtomCatalog& cat,
                                                    std::size_t cap = 20000);

// L(b) by memoized DP over residual exponent vectors; Z(b) is never built.
LengthSet length_set(const Sequence& b, const AtomCatalog& cat);

// max(|x| - |w|, |y| - |w|) where w = gcd(x, y).
std::size_t distance(const Factorization& x, const Factorization& y);

// Least N such that Z(b) is connected under steps of distance <= N.
std::size_t catenary_degree(const Sequence& b, const AtomCatalog& cat, std::size_t cap = 20000);
std::size_t catenary_degree(const std::vector<Factorization>& z);

struct RhoKResult {
  std::size_t value = 0;
  bool exhaustive = true;
  std::uint64_t nodes = 0;
  std::optional<Sequence> witness;  // a product of k atoms attaining the value
};

// rho_k(G): the largest factorization length of a product of k atoms.
// `node_cap` bounds the tuple search; exhaustive=false when it stops early.
RhoKResult rho_k(const AtomCatalog& cat, std::size_t k, std::uint64_t node_cap = 50'000'000);

struct AAMPDecomposition {
  long long shift = 0;  // y
  std::size_t difference = 1;
  std::vector<std::size_t> period;  // subset of [0,d] containing 0 and d
  std::size_t length = 0;           // l
  std::size_t bound = 0;            // M actually needed
  std::vector<long long> initial;   // L'
  std::vector<long long> central;   // L*
  std::vector<long long> final_part;  // L''
};

// Best decomposition with difference d and bound <= max_bound: maximal
// length, then minimal bound, then minimal shift.
std::optional<AAMPDecomposition> aamp_decompose(const LengthSet& l, std::size_t d,
                                                std::size_t max_bound);

struct AAMPBound {
  std::size_t difference = 0;
  std::size_t bound = 0;
};
// Over candidate differences, the least bound admitting a decomposition
// (ties: smallest difference).
AAMPBound minimal_aamp_bound(const LengthSet& l, const std::vector<std::size_t>& deltas);

}  // namespace zslab
