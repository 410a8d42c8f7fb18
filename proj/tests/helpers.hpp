#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "subalg/linalg.hpp"
#include "subalg/mat.hpp"

// Shared test scaffolding: small builders over Q plus an independent
// fraction-arithmetic rank oracle that shares no code with the library.
namespace testsupport {

inline subalg::Field Q() { return subalg::Field::rationals(); }

inline subalg::Mat mat_from(const std::vector<std::vector<long>>& rows) {
  const std::size_t n = rows.size();
  subalg::Mat m(n, Q());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = subalg::Scalar::from_int(rows[i][j], Q());
  return m;
}

inline subalg::Grid grid_from(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  subalg::Grid g(r, c, Q());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      g.at(i, j) = subalg::Scalar::from_int(rows[i][j], Q());
  return g;
}

inline subalg::Vec vec_from(const std::vector<long>& entries) {
  subalg::Vec v;
  v.reserve(entries.size());
  for (long e : entries) v.push_back(subalg::Scalar::from_int(e, Q()));
  return v;
}

// Minimal exact fraction on int64, safe for the tiny integers the oracle
// sees. Deliberately independent of the library's Scalar.
struct Frac {
  long long nu = 0;
  long long de = 1;

  static long long gcd_ll(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
      long long t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void reduce() {
    if (de < 0) {
      nu = -nu;
      de = -de;
    }
    long long g = gcd_ll(nu, de);
    if (g > 1) {
      nu /= g;
      de /= g;
    }
    if (nu == 0) de = 1;
  }
  Frac() = default;
  Frac(long long n, long long d = 1) : nu(n), de(d) { reduce(); }
  bool zero() const { return nu == 0; }
  Frac operator*(const Frac& o) const { return Frac(nu * o.nu, de * o.de); }
  Frac operator-(const Frac& o) const {
    return Frac(nu * o.de - o.nu * de, de * o.de);
  }
  Frac operator/(const Frac& o) const { return Frac(nu * o.de, de * o.nu); }
};

// Plain forward elimination with partial row swaps; returns the rank.
inline std::size_t oracle_rank(std::vector<std::vector<Frac>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col].zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col].zero()) continue;
      Frac factor = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < cols; ++j)
        a[i][j] = a[i][j] - factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// xorshift-based toy generator for oracle-side randomness; intentionally a
// different algorithm from the library's Rng.
struct ToyRng {
  std::uint64_t s;
  explicit ToyRng(std::uint64_t seed) : s(seed ? seed : 1) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long pick(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace testsupport
