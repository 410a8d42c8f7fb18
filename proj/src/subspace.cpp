#include "subalg/subspace.hpp"

namespace subalg {

Subspace::Subspace(std::size_t n, VecSpace space) : n_(n), space_(std::move(space)) {
  basis_.reserve(space_.dim());
  for (const auto& row : space_.basis()) basis_.push_back(Mat::from_vectorized(n_, row));
}

Subspace Subspace::zero(std::size_t n, const Field& f) {
  if (n == 0) fail(errc::invalid_params, "ambient side must be positive");
  return Subspace(n, VecSpace::zero(n * n, f));
}

Subspace Subspace::span(std::size_t n, const Field& f, const std::vector<Mat>& mats) {
  if (n == 0) fail(errc::invalid_params, "ambient side must be positive");
  std::vector<Vec> rows;
  rows.reserve(mats.size());
  for (const auto& m : mats) {
    if (m.n() != n) fail(errc::ambient_mismatch, "span: matrix side != ambient");
    check_same_field(m.field(), f, "span");
    rows.push_back(m.vectorize());
  }
  return Subspace(n, VecSpace::span(n * n, f, rows));
}

void check_same_ambient(const Subspace& a, const Subspace& b, const char* where) {
  check_same_field(a.field(), b.field(), where);
  if (a.n() != b.n())
    fail(errc::ambient_mismatch, std::string(where) + ": " +
                                     std::to_string(a.n()) + " vs " +
                                     std::to_string(b.n()));
}

bool Subspace::contains(const Mat& m) const {
  if (m.n() != n_) fail(errc::ambient_mismatch, "contains: matrix side != ambient");
  check_same_field(m.field(), field(), "contains");
  return space_.contains(m.vectorize());
}

bool Subspace::contains_all(const Subspace& o) const {
  check_same_ambient(*this, o, "contains_all");
  return space_.contains_all(o.space_);
}

Subspace Subspace::intersect(const Subspace& o) const {
  check_same_ambient(*this, o, "intersect");
  return Subspace(n_, space_.intersect(o.space_));
}

Subspace Subspace::sum(const Subspace& o) const {
  check_same_ambient(*this, o, "sum");
  return Subspace(n_, space_.sum(o.space_));
}

bool Subspace::operator==(const Subspace& o) const {
  check_same_ambient(*this, o, "subspace ==");
  return space_ == o.space_;
}

}  // namespace subalg
