#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "subalg/scalar.hpp"

namespace subalg {

using Vec = std::vector<Scalar>;    // column vector
using Covec = std::vector<Scalar>;  // row functional

// Square n x n matrix over one field, row-major storage.
class Mat {
public:
  Mat(std::size_t n, const Field& f);

  static Mat identity(std::size_t n, const Field& f);
  // Matrix unit E_{i,j}, 0-based indices.
  static Mat elementary(std::size_t n, std::size_t i, std::size_t j, const Field& f);
  // D_r = E_{0,0} + ... + E_{r-1,r-1}.
  static Mat diag_idempotent(std::size_t n, std::size_t r, const Field& f);
  // Permutation sending index i to n-1-i.
  static Mat reversal_permutation(std::size_t n, const Field& f);
  static Mat outer(const Vec& y, const Covec& mu);
  static Mat from_vectorized(std::size_t n, const Vec& v);

  std::size_t n() const { return n_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Scalar& c) const;
  Mat transpose() const;

  Scalar trace() const;
  bool is_zero() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Vec apply(const Vec& v) const;  // m * v
  Vec col(std::size_t j) const;
  Covec row(std::size_t i) const;

  // Row-major flattening, length n^2; fixes pivot order everywhere.
  Vec vectorize() const;

  std::string str() const;

private:
  std::size_t n_;
  Field field_;
  std::vector<Scalar> e_;
};

void check_same_ambient(const Mat& a, const Mat& b, const char* where);

}  // namespace subalg
