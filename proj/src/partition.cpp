#include "ua/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "ua/errors.hpp"

namespace ua {

Partition::Partition(std::vector<int> parts) {
  for (int v : parts) {
    if (v < 0) throw DomainError("partition parts must be nonnegative");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  sum_ = std::accumulate(parts.begin(), parts.end(), 0);
  parts_ = std::move(parts);
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

int Partition::count_even_parts() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int v) { return v % 2 == 0; }));
}

int Partition::count_odd_parts() const { return static_cast<int>(parts_.size()) - count_even_parts(); }

Partition Partition::merged(const Partition& other) const {
  std::vector<int> all(parts_);
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(all));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  const std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < len; ++i) {
    if (auto c = a.part(i) <=> b.part(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(p.part(i));
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return {};
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value <= 0) {
      throw DomainError("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition dual(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
  for (int v : p.parts()) {
    for (int i = 0; i < v; ++i) ++out[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(out));
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::Less:
      return "less";
    case Dominance::Equal:
      return "equal";
    case Dominance::Greater:
      return "greater";
    case Dominance::Incomparable:
      return "incomparable";
  }
  return "?";
}

Dominance compare_dominance(const Partition& a, const Partition& b) {
  if (a.sum() != b.sum()) {
    throw DomainError("dominance compares partitions of the same integer (" + std::to_string(a.sum()) + " vs " +
                      std::to_string(b.sum()) + ")");
  }
  bool some_less = false;
  bool some_greater = false;
  int pa = 0;
  int pb = 0;
  const std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < len; ++i) {
    pa += a.part(i);
    pb += b.part(i);
    some_less |= pa < pb;
    some_greater |= pa > pb;
  }
  if (some_less && some_greater) return Dominance::Incomparable;
  if (some_less) return Dominance::Less;
  if (some_greater) return Dominance::Greater;
  return Dominance::Equal;
}

std::size_t count_differing_places(const Partition& a, const Partition& b) {
  const std::size_t len = std::max(a.length(), b.length());
  std::size_t n = 0;
  for (std::size_t i = 0; i < len; ++i) n += a.part(i) != b.part(i);
  return n;
}

std::vector<Partition> two_place_chain(const Partition& a, const Partition& b) {
  if (compare_dominance(a, b) != Dominance::Less) {
    throw DomainError("two_place_chain needs " + to_string(a) + " strictly below " + to_string(b));
  }
  std::vector<Partition> chain{a};
  const std::size_t len = std::max(a.length(), b.length()) + 1;
  std::vector<int> cur(len, 0);
  for (std::size_t i = 0; i < a.length(); ++i) cur[i] = a.part(i);

  while (true) {
    // First row whose prefix sum falls short of the target: it can take one more box.
    std::size_t raise = 0;
    int pc = 0;
    int pt = 0;
    for (; raise < len; ++raise) {
      pc += cur[raise];
      pt += b.part(raise);
      if (pc < pt) break;
    }
    if (raise == len) break;  // prefix sums agree everywhere: reached b
    // Prefix sums stay strictly short of the target up to `tight`.
    std::size_t tight = raise;
    for (int c = pc, t = pt; c < t;) {
      ++tight;
      c += cur[tight];
      t += b.part(tight);
    }
    // First row after `raise` (and no later than `tight`) that can give up a box.
    std::size_t drop = raise + 1;
    while (drop < tight && !(cur[drop] > cur[drop + 1])) ++drop;
    ++cur[raise];
    --cur[drop];
    chain.emplace_back(cur);
  }
  return chain;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> stack;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(stack);
      return;
    }
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
      stack.push_back(v);
      rec(remaining - v, v);
      stack.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

bool even_parts_have_even_multiplicity(const Partition& p) {
  for (int v : p.parts()) {
    if (v % 2 == 0 && p.multiplicity(v) % 2 != 0) return false;
  }
  return true;
}

bool odd_parts_have_even_multiplicity(const Partition& p) {
  for (int v : p.parts()) {
    if (v % 2 == 1 && p.multiplicity(v) % 2 != 0) return false;
  }
  return true;
}

}  // namespace

bool satisfies_parity(const Partition& p, const GroupSpec& g) {
  validate(g);
  if (p.sum() != g.natural_dim()) {
    throw DomainError("partition " + to_string(p) + " does not partition the natural dimension " +
                      std::to_string(g.natural_dim()) + " of " + to_string(g));
  }
  const bool two = g.char_class == CharClass::Two;
  switch (g.family) {
    case Family::GL:
      return true;
    case Family::Sp:
      return odd_parts_have_even_multiplicity(p);
    case Family::SOeven:
      if (p.length() % 2 != 0) return false;
      return two ? odd_parts_have_even_multiplicity(p) : even_parts_have_even_multiplicity(p);
    case Family::Oeven:
      return two ? odd_parts_have_even_multiplicity(p) : even_parts_have_even_multiplicity(p);
    case Family::SOodd: {
      if (!two) return even_parts_have_even_multiplicity(p);
      if (p.multiplicity(1) == 0) return false;
      std::vector<int> rest(p.parts().begin(), p.parts().end());
      rest.pop_back();  // one part equal to 1
      return odd_parts_have_even_multiplicity(Partition(std::move(rest)));
    }
  }
  return false;
}

std::vector<Partition> enumerate_class_partitions(const GroupSpec& g) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(g.natural_dim())) {
    if (satisfies_parity(p, g)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace ua
