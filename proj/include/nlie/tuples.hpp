#ifndef NLIE_TUPLES_HPP
#define NLIE_TUPLES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "nlie/field.hpp"

namespace nlie {

// Strictly increasing index tuples are the storage keys for structure
// constants and representation tables.  A tuple (i1 < ... < ik), 0-based with
// ij < 255, packs big-endian into a uint64 so that numeric order on keys is
// lexicographic order on tuples.
inline std::uint64_t tuple_key(std::span<const std::size_t> t) {
  std::uint64_t k = 0;
  for (std::size_t i : t) k = (k << 8) | (static_cast<std::uint64_t>(i) + 1);
  return k;
}

inline std::vector<std::size_t> key_tuple(std::uint64_t k, std::size_t len) {
  std::vector<std::size_t> t(len);
  for (std::size_t i = len; i-- > 0;) {
    t[i] = static_cast<std::size_t>(k & 0xff) - 1;
    k >>= 8;
  }
  return t;
}

// All strictly increasing tuples of the given length from {0, ..., dim-1},
// in lexicographic order.
inline std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t dim, std::size_t len) {
  std::vector<std::vector<std::size_t>> out;
  if (len > dim) return out;
  std::vector<std::size_t> t(len);
  for (std::size_t i = 0; i < len; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    if (len == 0) break;
    std::size_t i = len;
    while (i-- > 0) {
      if (t[i] + (len - i) < dim) {
        ++t[i];
        for (std::size_t j = i + 1; j < len; ++j) t[j] = t[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
  return out;
}

// Sorts idx ascending in place.  Returns the sign of the sorting permutation,
// or 0 if two entries coincide.
inline int sort_with_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
      --j;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

// Odometer over the nonzero supports of each argument; the workhorse of
// multilinear expansion.  fn receives one basis index per argument.
template <class Fn>
void for_each_support_combo(std::span<const Vec> args, Fn&& fn) {
  const std::size_t k = args.size();
  std::vector<std::vector<std::size_t>> supports(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < args[i].size(); ++j)
      if (!args[i][j].is_zero()) supports[i].push_back(j);
    if (supports[i].empty()) return;
  }
  std::vector<std::size_t> pos(k, 0);
  std::vector<std::size_t> idx(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) idx[i] = supports[i][pos[i]];
    fn(idx);
    std::size_t i = k;
    bool done = true;
    while (i-- > 0) {
      if (++pos[i] < supports[i].size()) {
        done = false;
        break;
      }
      pos[i] = 0;
      if (i == 0) break;
    }
    if (done) break;
  }
}

}  // namespace nlie

#endif
