#include "zslab/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "zslab/errors.hpp"

namespace zslab {

namespace {

void require_same_group(const Sequence& a, const Sequence& b) {
  if (!(a.group() == b.group()))
    throw GroupMismatch("sequences over different groups: " + a.group().name() + " vs " +
                        b.group().name());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Sequence::Sequence(Group group) : group_(std::move(group)), counts_(group_.order(), 0) {}

Sequence::Sequence(Group group, std::vector<std::uint32_t> counts)
    : group_(std::move(group)), counts_(std::move(counts)) {
  if (counts_.size() != group_.order())
    throw std::invalid_argument("count vector size does not match group order");
  size_ = std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

Sequence Sequence::from_elements(Group group, const std::vector<Element>& elems) {
  Sequence s(std::move(group));
  for (Element g : elems) s.add(g);
  return s;
}

Sequence Sequence::parse(const Group& group, std::string_view text) {
  Sequence s(group);
  text = trim(text);
  if (text.empty()) return s;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('+', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = trim(text.substr(pos, end - pos));
    if (term.empty()) throw ParseError("empty term in sequence: " + std::string(text));
    std::uint32_t mult = 1;
    if (auto caret = term.find('^'); caret != std::string_view::npos) {
      std::string_view m = trim(term.substr(caret + 1));
      auto [ptr, ec] = std::from_chars(m.data(), m.data() + m.size(), mult);
      if (ec != std::errc() || ptr != m.data() + m.size() || mult == 0)
        throw ParseError("bad multiplicity in term: " + std::string(term));
      term = trim(term.substr(0, caret));
    }
    s.add(group.parse_element(term), mult);
    pos = end + 1;
  }
  return s;
}

std::string Sequence::to_string() const {
  std::string out;
  for (std::uint32_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0) continue;
    if (!out.empty()) out += '+';
    out += group_.format(Element{i});
    if (counts_[i] != 1) out += '^' + std::to_string(counts_[i]);
  }
  return out;
}

std::vector<Element> Sequence::support() const {
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < counts_.size(); ++i)
    if (counts_[i]) out.push_back(Element{i});
  return out;
}

std::vector<Element> Sequence::elements() const {
  std::vector<Element> out;
  out.reserve(size_);
  for (std::uint32_t i = 0; i < counts_.size(); ++i) out.insert(out.end(), counts_[i], Element{i});
  return out;
}

Element Sequence::min_element() const {
  for (std::uint32_t i = 0; i < counts_.size(); ++i)
    if (counts_[i]) return Element{i};
  throw std::logic_error("min_element of the empty sequence");
}

void Sequence::add(Element g, std::uint32_t mult) {
  counts_.at(g.index) += mult;
  size_ += mult;
}

void Sequence::remove(Element g, std::uint32_t mult) {
  if (counts_.at(g.index) < mult)
    throw NotADivisor("cannot remove " + group_.format(g) + " from " + to_string());
  counts_[g.index] -= mult;
  size_ -= mult;
}

Sequence Sequence::operator*(const Sequence& other) const {
  Sequence out = *this;
  out *= other;
  return out;
}

Sequence& Sequence::operator*=(const Sequence& other) {
  require_same_group(*this, other);
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  size_ += other.size_;
  return *this;
}

Sequence Sequence::pow(std::uint32_t k) const {
  Sequence out = *this;
  for (auto& c : out.counts_) c *= k;
  out.size_ = size_ * k;
  return out;
}

bool Sequence::divides(const Sequence& other) const {
  require_same_group(*this, other);
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] > other.counts_[i]) return false;
  return true;
}

bool canonical_less(const Sequence& a, const Sequence& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Nondecreasing element lists compared lexicographically: walk both count
  // vectors from the smallest element.
  std::size_t i = 0, j = 0;
  std::uint32_t ra = 0, rb = 0;
  const auto& ca = a.counts();
  const auto& cb = b.counts();
  for (std::size_t k = 0; k < a.size(); ++k) {
    while (ra == 0) ra = ca[i++];
    while (rb == 0) rb = cb[j++];
    if (i != j) return i < j;
    --ra;
    --rb;
  }
  return false;
}

std::size_t SequenceHash::operator()(const Sequence& s) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (std::uint32_t c : s.counts()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Element sigma(const Sequence& s) {
  const Group& g = s.group();
  Element acc = g.zero();
  for (Element e : s.support()) acc = g.add(acc, g.mul(s.count(e), e));
  return acc;
}

std::vector<char> subsequence_sums(const Sequence& s) {
  const Group& g = s.group();
  std::vector<char> reach(g.order(), 0);
  std::vector<char> next;
  for (Element e : s.support()) {
    const std::uint32_t rounds =
        std::min<std::uint32_t>(s.count(e), static_cast<std::uint32_t>(g.element_order(e)));
    for (std::uint32_t r = 0; r < rounds; ++r) {
      next = reach;
      next[e.index] = 1;
      for (std::uint32_t x = 0; x < reach.size(); ++x)
        if (reach[x]) next[g.add(Element{x}, e).index] = 1;
      if (next == reach) break;
      reach.swap(next);
    }
  }
  return reach;
}

bool is_zero_sumfree(const Sequence& s) {
  if (s.count(s.group().zero()) > 0) return false;
  return !subsequence_sums(s)[0];
}

Classification classify(const Sequence& s) {
  Classification c;
  c.is_empty = s.empty();
  c.is_zero_sum = sigma(s) == s.group().zero();
  c.is_zero_sumfree = is_zero_sumfree(s);
  c.is_squarefree = s.size() == s.support().size();
  return c;
}

Sequence divide(const Sequence& b, const Sequence& a) {
  require_same_group(b, a);
  std::vector<std::uint32_t> out(b.counts());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (a.counts()[i] > out[i])
      throw NotADivisor(a.to_string() + " does not divide " + b.to_string());
    out[i] -= a.counts()[i];
  }
  return Sequence(b.group(), std::move(out));
}

Sequence negate(const Sequence& s) {
  const Group& g = s.group();
  Sequence out(g);
  for (Element e : s.support()) out.add(g.neg(e), s.count(e));
  return out;
}

Sequence apply_map(const GroupMap& m, const Sequence& s) {
  if (!(m.group() == s.group())) throw GroupMismatch("map and sequence over different groups");
  Sequence out(s.group());
  for (Element e : s.support()) out.add(m(e), s.count(e));
  return out;
}

}  // namespace zslab
