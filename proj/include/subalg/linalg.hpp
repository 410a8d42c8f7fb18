#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subalg/mat.hpp"

namespace subalg {

// Rectangular exact matrix, the elimination workhorse. Rows are whole
// vectors so swaps stay cheap.
class Grid {
public:
  Grid(std::size_t rows, std::size_t cols, const Field& f);
  static Grid from_rows(std::vector<Vec> rows, std::size_t cols, const Field& f);
  static Grid from_mat(const Mat& m);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Scalar& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Vec& row(std::size_t i) const { return rows_[i]; }
  Vec& row(std::size_t i) { return rows_[i]; }

  void append_row(Vec v);

  bool operator==(const Grid& o) const;

private:
  std::size_t cols_;
  Field field_;
  std::vector<Vec> rows_;
};

struct RrefResult {
  Grid echelon;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank;
};

// Reduced row echelon form. Pivot choice: first row with a nonzero entry,
// columns scanned left to right. Exact, so no conditioning concerns.
RrefResult rref(const Grid& a);

// One solution of a x = b with every free variable set to zero, or nullopt.
std::optional<Vec> solve_linear(const Grid& a, const Vec& b);

// Canonical kernel basis: one vector per free column, 1 in the free slot.
std::vector<Vec> kernel_basis(const Grid& a);

std::size_t rank_of(const Grid& a);
std::size_t rank_of(const Mat& m);

// Inverse via Gauss-Jordan on [m | I]; singular_matrix if rank < n.
Mat invert(const Mat& m);

// Canonical subspace of K^m given by the RREF basis of its spanning rows.
// Structural equality of bases decides subspace equality.
class VecSpace {
public:
  static VecSpace zero(std::size_t ambient, const Field& f);
  static VecSpace span(std::size_t ambient, const Field& f, const std::vector<Vec>& vs);

  std::size_t ambient() const { return ambient_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains_all(const VecSpace& o) const;
  VecSpace sum(const VecSpace& o) const;
  VecSpace intersect(const VecSpace& o) const;  // Zassenhaus
  bool operator==(const VecSpace& o) const;
  bool operator!=(const VecSpace& o) const { return !(*this == o); }

  // Residue of v after reduction by the echelon basis.
  Vec reduce(const Vec& v) const;

  // Index of the first standard basis vector outside this space.
  std::optional<std::size_t> first_standard_outside() const;

private:
  VecSpace(std::size_t ambient, const Field& f) : ambient_(ambient), field_(f) {}
  std::size_t ambient_;
  Field field_;
  std::vector<Vec> basis_;          // canonical echelon rows
  std::vector<std::size_t> pivots_;
};

}  // namespace subalg
