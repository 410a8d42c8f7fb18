#pragma once

#include <optional>

#include "subalg/subspace.hpp"

namespace subalg {

// Multiplicatively closed subspace. Constructible only through paths that
// certify closure (explicit check or an operation that preserves it).
class Subalgebra {
public:
  // Verifies all pairwise basis products stay inside; certification_failed otherwise.
  static Subalgebra certify(const Subspace& s);
  static bool is_closed(const Subspace& s);

  const Subspace& space() const { return space_; }
  std::size_t n() const { return space_.n(); }
  const Field& field() const { return space_.field(); }
  std::size_t dim() const { return space_.dim(); }
  const std::vector<Mat>& basis() const { return space_.basis(); }
  bool contains(const Mat& m) const { return space_.contains(m); }

  bool operator==(const Subalgebra& o) const { return space_ == o.space_; }
  bool operator!=(const Subalgebra& o) const { return !(*this == o); }

private:
  struct trusted_t {};
  Subalgebra(Subspace s, trusted_t) : space_(std::move(s)) {}
  Subspace space_;

  friend Subalgebra multiplicative_closure(const Subspace&);
  friend Subalgebra conjugate_algebra(const Subalgebra&, const Mat&);
  friend Subalgebra transpose_algebra(const Subalgebra&);
  friend Subalgebra intersect(const Subalgebra&, const Subalgebra&);
};

// Smallest subalgebra containing s: rounds of pairwise basis products
// folded into the span until the dimension stabilizes.
Subalgebra multiplicative_closure(const Subspace& s);

Subalgebra zero_algebra(std::size_t n, const Field& f);

// {g^-1 x g : x in a}; g must be invertible. Dimension is preserved.
Subalgebra conjugate_algebra(const Subalgebra& a, const Mat& g);
Subspace conjugate_subspace(const Subspace& s, const Mat& g);

Subalgebra transpose_algebra(const Subalgebra& a);

// Closure certificate carries over: an intersection of closed spaces is closed.
Subalgebra intersect(const Subalgebra& a, const Subalgebra& b);

enum class UnityStatus { contains_identity, unital_proper, nonunital };

const char* unity_status_name(UnityStatus s);

// Affine solution family: particular element plus direction space, or empty.
struct AffineFamily {
  std::optional<Mat> particular;
  Subspace directions;

  bool empty() const { return !particular.has_value(); }
  std::size_t parameters() const { return empty() ? 0 : directions.dim(); }
};

struct UnitySummary {
  std::optional<Mat> two_sided;
  AffineFamily left;
  AffineFamily right;
  UnityStatus status;
};

UnitySummary unity_summary(const Subalgebra& a);

// Just the two-sided identity, via one combined solve. Cheaper than
// unity_summary when the one-sided families are not needed.
std::optional<Mat> two_sided_identity(const Subalgebra& a);

enum class CompressMode { right_multiply, two_sided };

// span{x e} or span{e x e}; e must be idempotent. The result is certified
// closed; inputs whose compression is not closed raise certification_failed.
Subalgebra compress_by_idempotent(const Subalgebra& a, const Mat& e, CompressMode mode);

// Reinterpret a subalgebra of M_n supported away from row n and column n
// as a subalgebra of M_{n-1}. Dimension is preserved.
Subalgebra corner_extract(const Subalgebra& a);

// Inverse of corner_extract: place an (n-1)-algebra in the top-left corner.
Subalgebra corner_embed(const Subalgebra& a);

}  // namespace subalg
