#include "ua/root_system.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>

#include "ua/errors.hpp"

namespace ua {

std::string to_string(RootFamily f) {
  switch (f) {
    case RootFamily::A:
      return "A";
    case RootFamily::B:
      return "B";
    case RootFamily::C:
      return "C";
    case RootFamily::D:
      return "D";
    case RootFamily::E6:
      return "E6";
    case RootFamily::E7:
      return "E7";
    case RootFamily::E8:
      return "E8";
    case RootFamily::F4:
      return "F4";
    case RootFamily::G2:
      return "G2";
  }
  return "?";
}

RootFamily parse_root_family(std::string_view text) {
  std::string key;
  for (char c : text) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (key == "a") return RootFamily::A;
  if (key == "b") return RootFamily::B;
  if (key == "c") return RootFamily::C;
  if (key == "d") return RootFamily::D;
  if (key == "e6") return RootFamily::E6;
  if (key == "e7") return RootFamily::E7;
  if (key == "e8") return RootFamily::E8;
  if (key == "f4") return RootFamily::F4;
  if (key == "g2") return RootFamily::G2;
  throw DomainError("unknown root system family '" + std::string(text) + "'");
}

int exceptional_rank(RootFamily f) {
  switch (f) {
    case RootFamily::E6:
      return 6;
    case RootFamily::E7:
      return 7;
    case RootFamily::E8:
      return 8;
    case RootFamily::F4:
      return 4;
    case RootFamily::G2:
      return 2;
    default:
      return 0;
  }
}

ParabolicLabel ParabolicLabel::from_nodes(const std::vector<int>& nodes) {
  std::uint64_t mask = 0;
  for (int v : nodes) {
    if (v < 1 || v > 64) throw DomainError("node index " + std::to_string(v) + " out of range");
    mask |= 1ULL << (v - 1);
  }
  return ParabolicLabel(mask);
}

std::vector<int> ParabolicLabel::nodes() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i) {
    if ((mask_ >> i) & 1U) out.push_back(i + 1);
  }
  return out;
}

int ParabolicLabel::size() const { return std::popcount(mask_); }

ParabolicLabel parse_nodes(std::string_view text) {
  std::vector<int> nodes;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw DomainError("malformed node list '" + std::string(text) + "'");
    }
    nodes.push_back(value);
    pos = comma + 1;
  }
  return ParabolicLabel::from_nodes(nodes);
}

std::string to_string(const ParabolicLabel& j) {
  std::string out;
  for (int v : j.nodes()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(v);
  }
  return out;
}

namespace {

using Gram = std::vector<std::vector<int>>;

// Inner products of simple roots, scaled to integers, Bourbaki labels.
Gram simple_root_gram(RootFamily family, int rank) {
  Gram g(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
  auto bond = [&](int i, int j, int value) {
    g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = value;
    g[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = value;
  };
  auto norm = [&](int i, int value) { g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] = value; };
  switch (family) {
    case RootFamily::A:
      for (int i = 1; i <= rank; ++i) norm(i, 2);
      for (int i = 1; i < rank; ++i) bond(i, i + 1, -1);
      break;
    case RootFamily::B:  // α_n short
      for (int i = 1; i < rank; ++i) norm(i, 2);
      norm(rank, 1);
      for (int i = 1; i < rank; ++i) bond(i, i + 1, -1);
      break;
    case RootFamily::C:  // α_n long
      for (int i = 1; i < rank; ++i) norm(i, 2);
      norm(rank, 4);
      for (int i = 1; i + 1 < rank; ++i) bond(i, i + 1, -1);
      if (rank >= 2) bond(rank - 1, rank, -2);
      break;
    case RootFamily::D:
      for (int i = 1; i <= rank; ++i) norm(i, 2);
      for (int i = 1; i + 1 < rank; ++i) bond(i, i + 1, -1);
      if (rank >= 3) bond(rank - 2, rank, -1);
      break;
    case RootFamily::E6:
    case RootFamily::E7:
    case RootFamily::E8:
      for (int i = 1; i <= rank; ++i) norm(i, 2);
      bond(1, 3, -1);
      bond(2, 4, -1);
      for (int i = 3; i < rank; ++i) bond(i, i + 1, -1);
      break;
    case RootFamily::F4:
      norm(1, 4);
      norm(2, 4);
      norm(3, 2);
      norm(4, 2);
      bond(1, 2, -2);
      bond(2, 3, -2);
      bond(3, 4, -1);
      break;
    case RootFamily::G2:  // α_1 short
      norm(1, 2);
      norm(2, 6);
      bond(1, 2, -3);
      break;
  }
  return g;
}

void check_rank(RootFamily family, int rank) {
  const int fixed = exceptional_rank(family);
  if (fixed != 0) {
    if (rank != fixed) throw DomainError(to_string(family) + " has rank " + std::to_string(fixed));
    return;
  }
  const int min_rank = family == RootFamily::A ? 0 : (family == RootFamily::D ? 2 : 1);
  if (rank < min_rank || rank > 64) {
    throw DomainError("invalid rank " + std::to_string(rank) + " for type " + to_string(family));
  }
}

}  // namespace

RootSystem RootSystem::build(RootFamily family, int rank) {
  check_rank(family, rank);
  const Gram gram = simple_root_gram(family, rank);
  const auto n = static_cast<std::size_t>(rank);

  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    const RootVector beta = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      int inner = 0;
      for (std::size_t k = 0; k < n; ++k) inner += beta[k] * gram[k][i];
      const int pairing = 2 * inner / gram[i][i];
      if (pairing == 0) continue;
      RootVector image = beta;
      image[i] -= pairing;
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }

  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  for (const auto& r : seen) {
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) rs.positive_.push_back(r);
  }
  auto height = [](const RootVector& r) { return std::accumulate(r.begin(), r.end(), 0); };
  std::stable_sort(rs.positive_.begin(), rs.positive_.end(),
                   [&](const RootVector& a, const RootVector& b) { return height(a) < height(b); });
  return rs;
}

const RootVector& RootSystem::highest_root() const {
  if (positive_.empty()) throw DomainError("empty root system has no highest root");
  return positive_.back();
}

std::string RootSystem::name() const {
  if (exceptional_rank(family_) != 0) return to_string(family_);
  return to_string(family_) + std::to_string(rank_);
}

int p_height(const RootVector& root, const ParabolicLabel& j) {
  int h = 0;
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (!j.contains(static_cast<int>(i) + 1)) h += root[i];
  }
  return h;
}

bool supported_in(const RootVector& root, const ParabolicLabel& j) {
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (root[i] != 0 && !j.contains(static_cast<int>(i) + 1)) return false;
  }
  return true;
}

RadicalDims radical_dims(const RootSystem& rs, const ParabolicLabel& j) {
  if (!rs.is_valid(j)) throw DomainError("J = {" + to_string(j) + "} is not a subset of the nodes of " + rs.name());
  RadicalDims d;
  int levi_positive = 0;
  for (const auto& r : rs.positive_roots()) {
    if (supported_in(r, j)) {
      ++levi_positive;
    } else {
      ++d.dim_q;
      if (p_height(r, j) == 1) ++d.dim_q_mod_qprime;
    }
  }
  d.dim_l_mod_z = rs.rank() + 2 * levi_positive;
  return d;
}

bool is_distinguished(const RootSystem& rs, const ParabolicLabel& j) {
  const RadicalDims d = radical_dims(rs, j);
  return d.dim_l_mod_z == d.dim_q_mod_qprime;
}

LeviDatum parse_levi(std::string_view text) {
  const std::size_t plus = text.find('+');
  LeviDatum levi;
  levi.gl_parts = parse_partition(text.substr(0, plus));
  if (plus != std::string_view::npos) {
    std::string_view tail = text.substr(plus + 1);
    while (!tail.empty() && tail.front() == ' ') tail.remove_prefix(1);
    while (!tail.empty() && tail.back() == ' ') tail.remove_suffix(1);
    int m = 0;
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), m);
    if (tail.empty() || ec != std::errc() || ptr != tail.data() + tail.size() || m < 0) {
      throw DomainError("malformed Levi datum '" + std::string(text) + "' (expected n1,n2,...+m)");
    }
    levi.cl_rank = m;
  }
  return levi;
}

std::string to_string(const LeviDatum& levi) { return to_string(levi.gl_parts) + "+" + std::to_string(levi.cl_rank); }

RootSystem root_system_for(const GroupSpec& g) {
  validate(g);
  switch (g.family) {
    case Family::GL:
      if (g.rank < 1) throw DomainError("GL_n needs n >= 1");
      return RootSystem::build(RootFamily::A, g.rank - 1);
    case Family::SOodd:
      return RootSystem::build(RootFamily::B, g.rank);
    case Family::Sp:
      return RootSystem::build(RootFamily::C, g.rank);
    case Family::SOeven:
    case Family::Oeven:
      return RootSystem::build(RootFamily::D, g.rank);
  }
  throw DomainError("unsupported family");
}

ParabolicLabel fork_swap(const ParabolicLabel& j, int rank) {
  std::uint64_t mask = j.mask();
  const std::uint64_t a = 1ULL << (rank - 2);
  const std::uint64_t b = 1ULL << (rank - 1);
  const bool has_a = (mask & a) != 0;
  const bool has_b = (mask & b) != 0;
  mask &= ~(a | b);
  if (has_a) mask |= b;
  if (has_b) mask |= a;
  return ParabolicLabel(mask);
}

LeviDatum levi_partition(const RootSystem& rs, const ParabolicLabel& j, const GroupSpec& g) {
  const RootSystem expected_shape = root_system_for(g);
  if (rs.family() != expected_shape.family() || rs.rank() != expected_shape.rank()) {
    throw DomainError("root system " + rs.name() + " does not belong to " + to_string(g));
  }
  if (!rs.is_valid(j)) throw DomainError("J = {" + to_string(j) + "} is not a subset of the nodes of " + rs.name());

  const int n = g.rank;
  ParabolicLabel label = j;
  if (rs.family() == RootFamily::D && label.contains(n) && !label.contains(n - 1)) label = fork_swap(label, n);

  int m = 0;
  if (g.family != Family::GL) {
    while (m < n && label.contains(n - m)) ++m;
  }
  // GL blocks: maximal runs of consecutive indices 1..n-m joined by nodes of J.
  const int free_indices = n - m;
  std::vector<int> parts;
  int run = 1;
  for (int i = 1; i <= free_indices; ++i) {
    if (i < free_indices && label.contains(i)) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  return LeviDatum{Partition(std::move(parts)), m};
}

long long levi_dim(const GroupSpec& g, const LeviDatum& levi) {
  long long d = 0;
  for (int v : levi.gl_parts.parts()) d += static_cast<long long>(v) * v;
  const long long m = levi.cl_rank;
  switch (g.family) {
    case Family::GL:
      break;
    case Family::SOodd:
    case Family::Sp:
      d += m * (2 * m + 1);
      break;
    case Family::SOeven:
    case Family::Oeven:
      d += m * (2 * m - 1);
      break;
  }
  return d;
}

}  // namespace ua
