#pragma once

#include <vector>

#include "subalg/linalg.hpp"
#include "subalg/mat.hpp"

namespace subalg {

// Subspace of M_n(K), held as the canonical RREF basis of the row-major
// vectorizations. Equality is structural equality of those bases.
class Subspace {
public:
  static Subspace zero(std::size_t n, const Field& f);
  static Subspace span(std::size_t n, const Field& f, const std::vector<Mat>& mats);

  std::size_t n() const { return n_; }
  const Field& field() const { return space_.field(); }
  std::size_t dim() const { return space_.dim(); }
  const std::vector<Mat>& basis() const { return basis_; }
  const VecSpace& vectors() const { return space_; }

  bool contains(const Mat& m) const;
  bool contains_all(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
  Subspace(std::size_t n, VecSpace space);
  std::size_t n_;
  VecSpace space_;
  std::vector<Mat> basis_;
};

void check_same_ambient(const Subspace& a, const Subspace& b, const char* where);

}  // namespace subalg
