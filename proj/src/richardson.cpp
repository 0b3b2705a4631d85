#include "ua/richardson.hpp"

#include <map>

#include "ua/errors.hpp"

namespace ua {

void validate_levi(const GroupSpec& g, const LeviDatum& levi) {
  validate(g);
  if (levi.cl_rank < 0) throw DomainError("classical rank must be nonnegative");
  if (levi.total() != g.rank) {
    throw DomainError("Levi datum " + to_string(levi) + " does not sum to the rank " + std::to_string(g.rank) +
                      " of " + to_string(g));
  }
  if (g.family == Family::GL && levi.cl_rank != 0) throw DomainError("GL_n Levi data have no classical factor");
}

namespace {

void repeat(std::vector<int>& out, int value, int count) {
  for (int i = 0; i < count; ++i) out.push_back(value);
}

// j+1, j^{2c-2}, j-1
void split_pair(std::vector<int>& out, int j, int c) {
  out.push_back(j + 1);
  repeat(out, j, 2 * c - 2);
  out.push_back(j - 1);
}

void so_even_row(std::vector<int>& out, int j, int c, int m, CharClass p) {
  const bool odd = j % 2 == 1;
  if (p == CharClass::Good) {
    if (!odd || j <= 2 * m) {
      repeat(out, j, 2 * c);
    } else {
      split_pair(out, j, c);
    }
    return;
  }
  if (!odd) {
    repeat(out, j, 2 * c);
  } else if (j <= 2 * m) {
    split_pair(out, j, c);
  } else if (c == 1) {
    out.push_back(j + 1);
    out.push_back(j - 1);
  } else {
    repeat(out, j + 1, 2);
    repeat(out, j, 2 * c - 4);
    repeat(out, j - 1, 2);
  }
}

void so_odd_row(std::vector<int>& out, int j, int c, int m) {
  const bool even = j % 2 == 0;
  if (even && j > 2 * m + 1) {
    split_pair(out, j, c);
  } else {
    repeat(out, j, 2 * c);
  }
}

void sp_row(std::vector<int>& out, int j, int c, int m) {
  if (j % 2 == 0 || j >= 2 * m) {
    repeat(out, j, 2 * c);
  } else {
    split_pair(out, j, c);
  }
}

}  // namespace

Partition psi_image(const GroupSpec& g, const LeviDatum& levi) {
  validate_levi(g, levi);
  if (g.family == Family::SOodd && g.char_class == CharClass::Two) {
    throw UnsupportedRegime("psi has no SO_{2n+1}, p=2 row; richardson_partition routes it through Sp_{2n}");
  }
  if (g.family == Family::GL) return levi.gl_parts;

  const int m = levi.cl_rank;
  std::vector<int> out;
  out.push_back(g.family == Family::SOodd ? 2 * m + 1 : 2 * m);

  std::map<int, int> mult;
  for (int v : levi.gl_parts.parts()) ++mult[v];
  for (const auto& [j, c] : mult) {
    switch (g.family) {
      case Family::SOeven:
      case Family::Oeven:
        so_even_row(out, j, c, m, g.char_class);
        break;
      case Family::SOodd:
        so_odd_row(out, j, c, m);
        break;
      case Family::Sp:
        sp_row(out, j, c, m);
        break;
      case Family::GL:
        break;
    }
  }
  return Partition(std::move(out));
}

Partition richardson_psi(const GroupSpec& g, const LeviDatum& levi) {
  if (g.family == Family::SOodd && g.char_class == CharClass::Two) {
    validate_levi(g, levi);
    return psi_image(GroupSpec{Family::Sp, g.rank, CharClass::Two}, levi);
  }
  return psi_image(g, levi);
}

Partition richardson_partition(const GroupSpec& g, const LeviDatum& levi) {
  Partition lambda = dual(richardson_psi(g, levi));
  if (g.family == Family::SOodd && g.char_class == CharClass::Two) lambda = lambda.merged(Partition{1});
  return lambda;
}

std::vector<Partition> regular_partition(const GroupSpec& g) {
  validate(g);
  const int n = g.rank;
  const bool two = g.char_class == CharClass::Two;
  switch (g.family) {
    case Family::GL:
      return {Partition{n}};
    case Family::Sp:
      return {Partition{2 * n}};
    case Family::SOodd:
      if (two) throw DomainError("SO_{2n+1} with p=2 has no regular-class Jordan data here");
      return {Partition{2 * n + 1}};
    case Family::SOeven:
      if (n == 1) return {Partition{1, 1}};  // SO_2 is a torus
      return {two ? Partition{2 * n - 2, 2} : Partition{2 * n - 1, 1}};
    case Family::Oeven:
      if (!two) {
        if (n == 1) return {Partition{1, 1}};
        return {Partition{2 * n - 1, 1}};
      }
      if (n < 2) throw DomainError("O_2 with p=2 is excluded");
      return {Partition{2 * n}, Partition{2 * n - 2, 2}};
  }
  return {};
}

LeviDatum gl_richardson_preimage(const Partition& lambda) { return LeviDatum{dual(lambda), 0}; }

int natural_flag_length(const GroupSpec& g, const LeviDatum& levi) {
  const int s = static_cast<int>(levi.gl_parts.length());
  if (g.family == Family::GL) return s;
  if (levi.cl_rank >= 1 || g.family == Family::SOodd) return 2 * s + 1;
  return 2 * s;
}

}  // namespace ua
