#include "subalg/mat.hpp"

#include <sstream>

namespace subalg {

Mat::Mat(std::size_t n, const Field& f)
    : n_(n), field_(f), e_(n * n, Scalar::zero(f)) {
  if (n == 0) fail(errc::invalid_params, "matrix side must be positive");
}

Mat Mat::identity(std::size_t n, const Field& f) {
  Mat m(n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::elementary(std::size_t n, std::size_t i, std::size_t j, const Field& f) {
  if (i >= n || j >= n) fail(errc::invalid_spec, "elementary index out of range");
  Mat m(n, f);
  m.at(i, j) = Scalar::one(f);
  return m;
}

Mat Mat::diag_idempotent(std::size_t n, std::size_t r, const Field& f) {
  if (r > n) fail(errc::invalid_spec, "diagonal idempotent rank out of range");
  Mat m(n, f);
  for (std::size_t i = 0; i < r; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::reversal_permutation(std::size_t n, const Field& f) {
  Mat m(n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1 - i) = Scalar::one(f);
  return m;
}

Mat Mat::outer(const Vec& y, const Covec& mu) {
  if (y.empty() || y.size() != mu.size())
    fail(errc::dimension_mismatch, "outer product needs equal nonzero lengths");
  const std::size_t n = y.size();
  Mat m(n, y[0].field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = y[i] * mu[j];
  return m;
}

Mat Mat::from_vectorized(std::size_t n, const Vec& v) {
  if (v.size() != n * n) fail(errc::dimension_mismatch, "vectorized length != n^2");
  Mat m(n, v[0].field());
  m.e_ = v;
  return m;
}

void check_same_ambient(const Mat& a, const Mat& b, const char* where) {
  check_same_field(a.field(), b.field(), where);
  if (a.n() != b.n())
    fail(errc::ambient_mismatch, std::string(where) + ": " +
                                     std::to_string(a.n()) + " vs " +
                                     std::to_string(b.n()));
}

Mat Mat::operator+(const Mat& o) const {
  check_same_ambient(*this, o, "mat +");
  Mat m = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] += o.e_[k];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  check_same_ambient(*this, o, "mat -");
  Mat m = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] -= o.e_[k];
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  check_same_ambient(*this, o, "mat *");
  Mat m(n_, field_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        m.at(i, j) += a * b;
      }
    }
  }
  return m;
}

Mat Mat::operator-() const {
  Mat m = *this;
  for (auto& x : m.e_) x = -x;
  return m;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat m = *this;
  for (auto& x : m.e_) x *= c;
  return m;
}

Mat Mat::transpose() const {
  Mat m(n_, field_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Scalar Mat::trace() const {
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const {
  check_same_ambient(*this, o, "mat ==");
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (e_[k] != o.e_[k]) return false;
  return true;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != n_) fail(errc::dimension_mismatch, "mat apply: length mismatch");
  Vec out(n_, Scalar::zero(field_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += at(i, j) * v[j];
    }
  return out;
}

Vec Mat::col(std::size_t j) const {
  Vec v;
  v.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) v.push_back(at(i, j));
  return v;
}

Covec Mat::row(std::size_t i) const {
  Covec v;
  v.reserve(n_);
  for (std::size_t j = 0; j < n_; ++j) v.push_back(at(i, j));
  return v;
}

Vec Mat::vectorize() const { return e_; }

std::string Mat::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i == 0 ? "[" : " ");
    os << "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << " ";
      os << at(i, j).str();
    }
    os << "]";
    if (i + 1 < n_) os << "\n";
  }
  os << "]";
  return os.str();
}

}  // namespace subalg
