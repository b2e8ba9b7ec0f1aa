#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zslab/property_p.hpp"

namespace zslab {

struct PenultimateRow {
  Sequence b;
  LengthSet lengths;
  bool max_minus_one_absent = false;
};

struct PenultimateReport {
  int n = 0;
  std::size_t max_card = 0;
  std::vector<PenultimateRow> rows;
  bool all_absent = true;  // max L(b) - 1 not in L(b) for every row
};

// Maximal-elastic sequences over C_n with |b| <= max_card, built from the
// cyclic closed form prod (g^n (-g)^n)^{n_g}; canonical order. n >= 3.
std::vector<Sequence> cyclic_max_elastic(int n, std::size_t max_card);

// The penultimate-length scan for any n >= 3 (odd n gives the contrast).
PenultimateReport scan_penultimate(int n, std::size_t max_card);
// Same scan, restricted to its theorem's hypothesis: n even, n >= 4
// (OddOrder otherwise).
PenultimateReport verify_no_penultimate(int n, std::size_t max_card);

struct ThreeAtomWitness {
  int n = 0;
  int a = 0;
  int b = 0;  // n + 1 = a b, 3 <= a <= b
  Element g;
  Sequence a_prime;  // g^n (ag)^n
  std::array<Sequence, 3> triple;
  bool atoms_ok = false;
  bool product_ok = false;
  LengthSet doubled_lengths;  // L((-A') A')
  bool min_plus_one = false;  // min L + 1 in L((-A') A')
};

// n even >= 4 with n + 1 composite; g = 1 and a the least factor >= 3.
// Throws OddOrder / NPlusOnePrime.
ThreeAtomWitness build_three_atom_witness(int n);

struct TailShifter {
  ThreeAtomWitness witness;
  std::size_t m = 0;  // AAMP bound used
  std::string m_policy;
  std::size_t max_delta = 0;  // empirical
  std::size_t l = 0;          // m + max_delta
  Sequence a_star;            // ((-A') A')^l
};

// Without m_policy, M and max Delta come from the maximal-elastic b with
// |b| <= scan_factor * n.
TailShifter build_tail_interval_shifter(int n, std::optional<std::size_t> m_policy = std::nullopt,
                                        std::size_t scan_factor = 4);

struct TailSample {
  Sequence a;
  LengthSet lengths;       // L(a* a)
  bool tail_interval = false;  // L cap [min, max - M] is an interval
  Rational elasticity;
  bool pass = false;
};

std::vector<TailSample> verify_tail_shifter(const TailShifter& s, const std::vector<Sequence>& samples,
                                            int jobs = 1);

struct Remark54Solution {
  std::vector<Sequence> lhs;  // the k'+1 atoms V'
  std::vector<Sequence> rhs;  // the k' atoms U' = g_i^n
};

struct ExhaustionCertificate {
  int n = 0;
  std::size_t k_prime = 0;
  std::uint64_t search_space_size = 0;  // generator multisets searched (orbit representatives)
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<Remark54Solution> solutions;  // no V' is a maximal-length atom
  std::uint64_t unrestricted_solutions = 0;  // (k'+1)-factorizations with no restriction

  // {"n","k","exhausted","nodes","solutions":[{"lhs","rhs"}], ...}
  std::string to_json() const;
};

// One certificate per k' in [1, k_max]. `budget` caps DFS nodes per k';
// running out gives exhausted = false rather than an exception.
std::vector<ExhaustionCertificate> remark54_search(int n, std::size_t k_max,
                                                   std::optional<std::uint64_t> budget = std::nullopt,
                                                   int jobs = 1);

struct OpenProblemResult {
  int n = 0;
  std::size_t max_k = 0;
  std::uint64_t searched = 0;  // orbit representatives whose length set was computed
  std::optional<Sequence> witness;  // maximal-elastic A with min L(A) + 1 in L(A)
};

// Degrees (numbers of max-length factors) up to max_k; only even degrees
// carry maximal-elastic sequences. Throws OddOrder / NPlusOneComposite.
OpenProblemResult open_problem_search(int n, std::size_t max_k);

// Units of Z/n in increasing order.
std::vector<int> units_mod(int n);
// Multisets of k units, sorted, that are the least in their orbit under
// multiplication by units.
std::vector<std::vector<int>> orbit_representatives(int n, std::size_t k);

}  // namespace zslab
