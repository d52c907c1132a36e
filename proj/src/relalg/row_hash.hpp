#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "reldp/relalg/table.hpp"

namespace reldp::relalg {

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline std::uint64_t hash_big(const BigInt& v) {
  const mpz_srcptr z = v.get_mpz_t();
  std::uint64_t h = static_cast<std::uint64_t>(z->_mp_size);
  if (z->_mp_size != 0) h ^= mix64(static_cast<std::uint64_t>(mpz_getlimbn(z, 0)));
  return h;
}

/// Hashes a row of one table over a fixed list of column indices.
struct RowKeyHash {
  const Table* table;
  std::vector<std::size_t> columns;

  std::size_t operator()(std::size_t row) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    const auto sc = table->scalars(row);
    const auto wd = table->wides(row);
    for (std::size_t c : columns) {
      const auto s = table->slot(c);
      const std::uint64_t v = s.wide ? hash_big(wd[s.index]) : static_cast<std::uint64_t>(sc[s.index]);
      h = mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
    }
    return static_cast<std::size_t>(h);
  }
};

/// Compares row `a` of `lhs` over `lhs_cols` with row `b` of `rhs` over
/// `rhs_cols`, position by position.
struct RowKeyEq {
  const Table* lhs;
  const Table* rhs;
  std::vector<std::size_t> lhs_cols;
  std::vector<std::size_t> rhs_cols;

  bool operator()(std::size_t a, std::size_t b) const {
    const auto ls = lhs->scalars(a);
    const auto lw = lhs->wides(a);
    const auto rs = rhs->scalars(b);
    const auto rw = rhs->wides(b);
    for (std::size_t i = 0; i < lhs_cols.size(); ++i) {
      const auto x = lhs->slot(lhs_cols[i]);
      const auto y = rhs->slot(rhs_cols[i]);
      if (x.wide && y.wide) {
        if (lw[x.index] != rw[y.index]) return false;
      } else if (!x.wide && !y.wide) {
        if (ls[x.index] != rs[y.index]) return false;
      } else {
        const BigInt l = x.wide ? lw[x.index] : BigInt(static_cast<long>(ls[x.index]));
        const BigInt r = y.wide ? rw[y.index] : BigInt(static_cast<long>(rs[y.index]));
        if (l != r) return false;
      }
    }
    return true;
  }
};

}  // namespace reldp::relalg
