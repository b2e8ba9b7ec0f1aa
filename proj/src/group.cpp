#include "zslab/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "zslab/errors.hpp"

namespace zslab {

namespace {

// Groups up to this order get full addition tables.
constexpr std::uint32_t kTableLimit = 1024;
constexpr std::uint64_t kMaxOrder = 1u << 30;

std::vector<std::pair<int, int>> prime_powers(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    int q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    out.emplace_back(p, q);
  }
  if (n > 1) out.emplace_back(n, n);
  return out;
}

}  // namespace

struct Group::Data {
  std::vector<int> factors;
  std::vector<std::uint32_t> strides;  // mixed-radix weights, last is 1
  std::uint32_t order = 1;
  std::vector<std::uint32_t> add;  // order*order, empty for large groups
  std::vector<std::uint32_t> neg;

  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto n = static_cast<std::uint32_t>(factors[i]);
      const std::uint32_t ca = (a / strides[i]) % n;
      const std::uint32_t cb = (b / strides[i]) % n;
      out += ((ca + cb) % n) * strides[i];
    }
    return out;
  }
  std::uint32_t neg_slow(std::uint32_t a) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto n = static_cast<std::uint32_t>(factors[i]);
      const std::uint32_t c = (a / strides[i]) % n;
      out += ((n - c) % n) * strides[i];
    }
    return out;
  }
};

Group::Group() : Group(std::vector<int>{}) {}

Group::Group(std::vector<int> invariant_factors) {
  auto d = std::make_shared<Data>();
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    const int n = invariant_factors[i];
    if (n < 2) throw ParseError("invariant factors must be >= 2");
    if (i > 0 && n % invariant_factors[i - 1] != 0)
      throw ParseError("invariant factors must form a divisibility chain");
    order *= static_cast<std::uint64_t>(n);
    if (order > kMaxOrder) throw ParseError("group order too large");
  }
  d->factors = std::move(invariant_factors);
  d->order = static_cast<std::uint32_t>(order);
  d->strides.assign(d->factors.size(), 1);
  for (int i = static_cast<int>(d->factors.size()) - 2; i >= 0; --i)
    d->strides[i] = d->strides[i + 1] * static_cast<std::uint32_t>(d->factors[i + 1]);
  if (d->order <= kTableLimit) {
    const std::uint32_t n = d->order;
    d->add.resize(static_cast<std::size_t>(n) * n);
    d->neg.resize(n);
    for (std::uint32_t a = 0; a < n; ++a) {
      d->neg[a] = d->neg_slow(a);
      for (std::uint32_t b = 0; b < n; ++b) d->add[a * n + b] = d->add_slow(a, b);
    }
  }
  d_ = std::move(d);
}

Group Group::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty group string");
  std::vector<int> cyclic;
  std::size_t pos = 0;
  while (true) {
    if (pos >= text.size() || (text[pos] != 'C' && text[pos] != 'c'))
      throw ParseError("expected 'C' in group string: " + std::string(text));
    ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected digits after 'C': " + std::string(text));
    long long n = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, n);
    if (ec != std::errc() || ptr != text.data() + pos || n > (1LL << 30))
      throw ParseError("cyclic order out of range: " + std::string(text));
    if (n <= 0) throw ParseError("cyclic order must be positive: " + std::string(text));
    cyclic.push_back(static_cast<int>(n));
    if (pos == text.size()) break;
    if (text[pos] != 'x' && text[pos] != 'X')
      throw ParseError("expected 'x' between factors: " + std::string(text));
    ++pos;
  }

  // Elementary divisors per prime, largest first.
  std::map<int, std::vector<int>> by_prime;
  for (int n : cyclic)
    for (auto [p, q] : prime_powers(n)) by_prime[p].push_back(q);
  std::size_t rank = 0;
  for (auto& [p, qs] : by_prime) {
    std::sort(qs.rbegin(), qs.rend());
    rank = std::max(rank, qs.size());
  }
  std::vector<long long> factors(rank, 1);
  for (auto& [p, qs] : by_prime)
    for (std::size_t j = 0; j < qs.size(); ++j) factors[rank - 1 - j] *= qs[j];
  std::uint64_t order = 1;
  for (long long f : factors) {
    order *= static_cast<std::uint64_t>(f);
    if (order > kMaxOrder) throw ParseError("group order too large");
  }
  return Group(std::vector<int>(factors.begin(), factors.end()));
}

std::span<const int> Group::invariant_factors() const { return d_->factors; }
int Group::rank() const { return static_cast<int>(d_->factors.size()); }
std::uint32_t Group::order() const { return d_->order; }
int Group::exponent() const { return d_->factors.empty() ? 1 : d_->factors.back(); }

std::string Group::name() const {
  if (d_->factors.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < d_->factors.size(); ++i) {
    if (i) out += 'x';
    out += 'C' + std::to_string(d_->factors[i]);
  }
  return out;
}

Element Group::element(std::span<const int> coords) const {
  if (coords.size() != d_->factors.size())
    throw std::invalid_argument("coordinate count does not match group rank");
  std::uint32_t idx = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const int n = d_->factors[i];
    const int c = ((coords[i] % n) + n) % n;
    idx += static_cast<std::uint32_t>(c) * d_->strides[i];
  }
  return Element{idx};
}

Element Group::element(std::initializer_list<int> coords) const {
  return element(std::span<const int>(coords.begin(), coords.size()));
}

std::vector<int> Group::coords(Element g) const {
  std::vector<int> out(d_->factors.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<int>((g.index / d_->strides[i]) % static_cast<std::uint32_t>(d_->factors[i]));
  return out;
}

Element Group::add(Element a, Element b) const {
  if (!d_->add.empty()) return Element{d_->add[a.index * d_->order + b.index]};
  return Element{d_->add_slow(a.index, b.index)};
}

Element Group::neg(Element a) const {
  if (!d_->neg.empty()) return Element{d_->neg[a.index]};
  return Element{d_->neg_slow(a.index)};
}

Element Group::mul(long long k, Element a) const {
  auto c = coords(a);
  std::vector<int> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const long long n = d_->factors[i];
    out[i] = static_cast<int>((((k % n) * c[i]) % n + n) % n);
  }
  return element(out);
}

int Group::element_order(Element g) const {
  long long ord = 1;
  const auto c = coords(g);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int n = d_->factors[i];
    ord = std::lcm(ord, static_cast<long long>(n / std::gcd(n, c[i])));
  }
  return static_cast<int>(ord);
}

std::string Group::format(Element g) const {
  if (d_->factors.empty()) return "0";
  const auto c = coords(g);
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

Element Group::parse_element(std::string_view text) const {
  if (d_->factors.empty()) {
    if (text == "0") return zero();
    throw ParseError("the trivial group has only the element 0");
  }
  std::vector<int> c;
  std::size_t pos = 0;
  while (true) {
    const std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, v);
    if (ec != std::errc() || ptr != text.data() + pos || pos == start)
      throw ParseError("malformed element: " + std::string(text));
    const int n = d_->factors[c.size() < d_->factors.size() ? c.size() : 0];
    c.push_back(static_cast<int>(((v % n) + n) % n));
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("malformed element: " + std::string(text));
    ++pos;
  }
  if (c.size() != d_->factors.size())
    throw ParseError("element needs " + std::to_string(d_->factors.size()) +
                     " coordinates: " + std::string(text));
  return element(c);
}

std::vector<Element> Group::elements() const {
  std::vector<Element> out(d_->order);
  for (std::uint32_t i = 0; i < d_->order; ++i) out[i] = Element{i};
  return out;
}

Element Group::basis(int i) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("basis index");
  return Element{d_->strides[static_cast<std::size_t>(i)]};
}

bool operator==(const Group& a, const Group& b) {
  return a.d_ == b.d_ || a.d_->factors == b.d_->factors;
}

GroupMap::GroupMap(Group group, std::vector<Element> images)
    : group_(std::move(group)), images_(std::move(images)) {
  const auto factors = group_.invariant_factors();
  if (images_.size() != factors.size())
    throw std::invalid_argument("a group map needs one image per basis element");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].index >= group_.order()) throw std::invalid_argument("image out of range");
    if (group_.mul(factors[i], images_[i]) != group_.zero())
      throw std::invalid_argument("map is not well defined: n_i * image_i != 0");
  }
  table_.resize(group_.order());
  std::vector<char> hit(group_.order(), 0);
  std::size_t distinct = 0;
  for (Element g : group_.elements()) {
    const auto c = group_.coords(g);
    Element img = group_.zero();
    for (std::size_t i = 0; i < c.size(); ++i) img = group_.add(img, group_.mul(c[i], images_[i]));
    table_[g.index] = img;
    if (!hit[img.index]) {
      hit[img.index] = 1;
      ++distinct;
    }
  }
  is_iso_ = distinct == group_.order();
}

GroupMap GroupMap::identity(const Group& group) {
  std::vector<Element> imgs;
  for (int i = 0; i < group.rank(); ++i) imgs.push_back(group.basis(i));
  return GroupMap(group, std::move(imgs));
}

GroupMap GroupMap::scaling(const Group& group, long long k) {
  std::vector<Element> imgs;
  for (int i = 0; i < group.rank(); ++i) imgs.push_back(group.mul(k, group.basis(i)));
  return GroupMap(group, std::move(imgs));
}

}  // namespace zslab
