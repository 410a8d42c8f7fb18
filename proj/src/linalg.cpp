#include "subalg/linalg.hpp"

#include <utility>

namespace subalg {

Grid::Grid(std::size_t rows, std::size_t cols, const Field& f)
    : cols_(cols), field_(f), rows_(rows, Vec(cols, Scalar::zero(f))) {}

Grid Grid::from_rows(std::vector<Vec> rows, std::size_t cols, const Field& f) {
  Grid g(0, cols, f);
  for (auto& r : rows) g.append_row(std::move(r));
  return g;
}

Grid Grid::from_mat(const Mat& m) {
  Grid g(0, m.n(), m.field());
  for (std::size_t i = 0; i < m.n(); ++i) g.append_row(m.row(i));
  return g;
}

void Grid::append_row(Vec v) {
  if (v.size() != cols_) fail(errc::dimension_mismatch, "grid row length mismatch");
  for (const auto& x : v) check_same_field(x.field(), field_, "grid row");
  rows_.push_back(std::move(v));
}

bool Grid::operator==(const Grid& o) const {
  if (cols_ != o.cols_ || rows_.size() != o.rows_.size()) return false;
  check_same_field(field_, o.field_, "grid ==");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (rows_[i][j] != o.rows_[i][j]) return false;
  return true;
}

RrefResult rref(const Grid& a) {
  Grid e = a;
  const std::size_t m = e.rows(), n = e.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t sel = m;
    for (std::size_t i = r; i < m; ++i) {
      if (!e.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == m) continue;
    std::swap(e.row(r), e.row(sel));
    const Scalar inv = e.at(r, c).inverse();
    for (std::size_t j = c; j < n; ++j) e.at(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      const Scalar f = e.at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < n; ++j) {
        if (e.at(r, j).is_zero()) continue;
        e.at(i, j).submul(f, e.at(r, j));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(e), std::move(pivots), r};
}

std::optional<Vec> solve_linear(const Grid& a, const Vec& b) {
  if (b.size() != a.rows()) fail(errc::dimension_mismatch, "solve: rhs length mismatch");
  Grid aug(0, a.cols() + 1, a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vec row = a.row(i);
    row.push_back(b[i]);
    aug.append_row(std::move(row));
  }
  RrefResult rr = rref(aug);
  for (std::size_t k = 0; k < rr.rank; ++k)
    if (rr.pivot_cols[k] == a.cols()) return std::nullopt;
  Vec x(a.cols(), Scalar::zero(a.field()));
  for (std::size_t k = 0; k < rr.rank; ++k)
    x[rr.pivot_cols[k]] = rr.echelon.at(k, a.cols());
  return x;
}

std::vector<Vec> kernel_basis(const Grid& a) {
  RrefResult rr = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(a.cols(), Scalar::zero(a.field()));
    v[f] = Scalar::one(a.field());
    for (std::size_t k = 0; k < rr.rank; ++k)
      v[rr.pivot_cols[k]] = -rr.echelon.at(k, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank_of(const Grid& a) { return rref(a).rank; }

std::size_t rank_of(const Mat& m) { return rank_of(Grid::from_mat(m)); }

Mat invert(const Mat& m) {
  const std::size_t n = m.n();
  Grid aug(0, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    Vec row = m.row(i);
    row.resize(2 * n, Scalar::zero(m.field()));
    row[n + i] = Scalar::one(m.field());
    aug.append_row(std::move(row));
  }
  RrefResult rr = rref(aug);
  std::size_t left_rank = 0;
  for (std::size_t c : rr.pivot_cols)
    if (c < n) ++left_rank;
  if (left_rank < n) fail(errc::singular_matrix, "matrix is not invertible");
  Mat inv(n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.echelon.at(i, n + j);
  return inv;
}

VecSpace VecSpace::zero(std::size_t ambient, const Field& f) {
  return VecSpace(ambient, f);
}

VecSpace VecSpace::span(std::size_t ambient, const Field& f,
                        const std::vector<Vec>& vs) {
  for (const auto& v : vs)
    if (v.size() != ambient)
      fail(errc::ambient_mismatch, "span: vector length != ambient");
  RrefResult rr = rref(Grid::from_rows(vs, ambient, f));
  VecSpace s(ambient, f);
  for (std::size_t k = 0; k < rr.rank; ++k) s.basis_.push_back(rr.echelon.row(k));
  s.pivots_ = std::move(rr.pivot_cols);
  return s;
}

Vec VecSpace::reduce(const Vec& v) const {
  if (v.size() != ambient_) fail(errc::ambient_mismatch, "reduce: length mismatch");
  Vec r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar c = r[pivots_[k]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[k]; j < ambient_; ++j) {
      if (basis_[k][j].is_zero()) continue;
      r[j].submul(c, basis_[k][j]);
    }
  }
  return r;
}

bool VecSpace::contains(const Vec& v) const {
  Vec r = reduce(v);
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

bool VecSpace::contains_all(const VecSpace& o) const {
  for (const auto& b : o.basis_)
    if (!contains(b)) return false;
  return true;
}

VecSpace VecSpace::sum(const VecSpace& o) const {
  check_same_field(field_, o.field_, "vecspace sum");
  if (ambient_ != o.ambient_) fail(errc::ambient_mismatch, "vecspace sum");
  std::vector<Vec> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return span(ambient_, field_, all);
}

VecSpace VecSpace::intersect(const VecSpace& o) const {
  check_same_field(field_, o.field_, "vecspace intersect");
  if (ambient_ != o.ambient_) fail(errc::ambient_mismatch, "vecspace intersect");
  // Zassenhaus: reduce [u | u] over our basis and [v | 0] over the other;
  // rows whose left half vanishes carry the intersection in the right half.
  Grid g(0, 2 * ambient_, field_);
  for (const auto& u : basis_) {
    Vec row = u;
    row.insert(row.end(), u.begin(), u.end());
    g.append_row(std::move(row));
  }
  for (const auto& v : o.basis_) {
    Vec row = v;
    row.resize(2 * ambient_, Scalar::zero(field_));
    g.append_row(std::move(row));
  }
  RrefResult rr = rref(g);
  std::vector<Vec> inter;
  for (std::size_t k = 0; k < rr.rank; ++k) {
    bool left_zero = true;
    for (std::size_t j = 0; j < ambient_ && left_zero; ++j)
      left_zero = rr.echelon.at(k, j).is_zero();
    if (!left_zero) continue;
    Vec right;
    right.reserve(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) right.push_back(rr.echelon.at(k, ambient_ + j));
    inter.push_back(std::move(right));
  }
  return span(ambient_, field_, inter);
}

bool VecSpace::operator==(const VecSpace& o) const {
  check_same_field(field_, o.field_, "vecspace ==");
  if (ambient_ != o.ambient_) fail(errc::ambient_mismatch, "vecspace ==");
  if (basis_.size() != o.basis_.size()) return false;
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (std::size_t j = 0; j < ambient_; ++j)
      if (basis_[k][j] != o.basis_[k][j]) return false;
  return true;
}

std::optional<std::size_t> VecSpace::first_standard_outside() const {
  for (std::size_t j = 0; j < ambient_; ++j) {
    Vec e(ambient_, Scalar::zero(field_));
    e[j] = Scalar::one(field_);
    if (!contains(e)) return j;
  }
  return std::nullopt;
}

}  // namespace subalg
