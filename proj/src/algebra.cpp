#include "subalg/algebra.hpp"

namespace subalg {

bool Subalgebra::is_closed(const Subspace& s) {
  for (const auto& x : s.basis())
    for (const auto& y : s.basis())
      if (!s.contains(x * y)) return false;
  return true;
}

Subalgebra Subalgebra::certify(const Subspace& s) {
  if (!is_closed(s))
    fail(errc::certification_failed, "subspace is not multiplicatively closed");
  return Subalgebra(s, trusted_t{});
}

Subalgebra multiplicative_closure(const Subspace& s) {
  Subspace cur = s;
  for (;;) {
    std::vector<Mat> prods;
    prods.reserve(cur.dim() * cur.dim());
    for (const auto& x : cur.basis())
      for (const auto& y : cur.basis()) {
        Mat p = x * y;
        if (!cur.contains(p)) prods.push_back(std::move(p));
      }
    if (prods.empty()) break;
    std::vector<Mat> all = cur.basis();
    all.insert(all.end(), prods.begin(), prods.end());
    Subspace next = Subspace::span(cur.n(), cur.field(), all);
    cur = std::move(next);
  }
  return Subalgebra(cur, Subalgebra::trusted_t{});
}

Subalgebra zero_algebra(std::size_t n, const Field& f) {
  return Subalgebra::certify(Subspace::zero(n, f));
}

Subspace conjugate_subspace(const Subspace& s, const Mat& g) {
  if (g.n() != s.n()) fail(errc::ambient_mismatch, "conjugate: side mismatch");
  check_same_field(g.field(), s.field(), "conjugate");
  const Mat gi = invert(g);
  std::vector<Mat> mapped;
  mapped.reserve(s.dim());
  for (const auto& x : s.basis()) mapped.push_back(gi * x * g);
  return Subspace::span(s.n(), s.field(), mapped);
}

Subalgebra conjugate_algebra(const Subalgebra& a, const Mat& g) {
  return Subalgebra(conjugate_subspace(a.space(), g), Subalgebra::trusted_t{});
}

Subalgebra transpose_algebra(const Subalgebra& a) {
  std::vector<Mat> mapped;
  mapped.reserve(a.dim());
  for (const auto& x : a.basis()) mapped.push_back(x.transpose());
  return Subalgebra(Subspace::span(a.n(), a.field(), mapped),
                    Subalgebra::trusted_t{});
}

Subalgebra intersect(const Subalgebra& a, const Subalgebra& b) {
  return Subalgebra(a.space().intersect(b.space()), Subalgebra::trusted_t{});
}

const char* unity_status_name(UnityStatus s) {
  switch (s) {
    case UnityStatus::contains_identity: return "ContainsI";
    case UnityStatus::unital_proper: return "UnitalProper";
    case UnityStatus::nonunital: return "Nonunital";
  }
  return "?";
}

namespace {

// Solve sum_i x_i B_i * B_j = B_j for all j (side == left), or B_j * e = B_j
// (side == right), or both. Returns the affine family in algebra coordinates
// mapped back to matrices.
AffineFamily identity_family(const Subalgebra& a, bool want_left, bool want_right) {
  const auto& B = a.basis();
  const std::size_t k = B.size();
  const std::size_t n = a.n();
  const Field f = a.field();
  if (k == 0) {
    // the zero algebra: e = 0 is its (unique) two-sided identity
    return AffineFamily{Mat(n, f), Subspace::zero(n, f)};
  }
  std::size_t eq_blocks = (want_left ? k : 0) + (want_right ? k : 0);
  Grid sys(0, k, f);
  Vec rhs;
  rhs.reserve(eq_blocks * n * n);
  auto add_block = [&](bool left, const Mat& Bj) {
    // rows: one equation per matrix position of (e * Bj - Bj) or (Bj * e - Bj)
    std::vector<Vec> cols;
    cols.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
      cols.push_back((left ? B[i] * Bj : Bj * B[i]).vectorize());
    const Vec target = Bj.vectorize();
    for (std::size_t pos = 0; pos < n * n; ++pos) {
      Vec row(k, Scalar::zero(f));
      bool all_zero = true;
      for (std::size_t i = 0; i < k; ++i) {
        row[i] = cols[i][pos];
        if (!row[i].is_zero()) all_zero = false;
      }
      if (all_zero && target[pos].is_zero()) continue;
      sys.append_row(std::move(row));
      rhs.push_back(target[pos]);
    }
  };
  for (std::size_t j = 0; j < k; ++j) {
    if (want_left) add_block(true, B[j]);
    if (want_right) add_block(false, B[j]);
  }
  auto sol = solve_linear(sys, rhs);
  if (!sol) return AffineFamily{std::nullopt, Subspace::zero(n, f)};
  auto to_mat = [&](const Vec& coeffs) {
    Mat m(n, f);
    for (std::size_t i = 0; i < k; ++i)
      if (!coeffs[i].is_zero()) m = m + B[i].scaled(coeffs[i]);
    return m;
  };
  std::vector<Mat> dirs;
  for (const auto& kv : kernel_basis(sys)) dirs.push_back(to_mat(kv));
  return AffineFamily{to_mat(*sol), Subspace::span(n, f, dirs)};
}

}  // namespace

std::optional<Mat> two_sided_identity(const Subalgebra& a) {
  return identity_family(a, true, true).particular;
}

UnitySummary unity_summary(const Subalgebra& a) {
  UnitySummary u{std::nullopt,
                 identity_family(a, true, false),
                 identity_family(a, false, true),
                 UnityStatus::nonunital};
  AffineFamily both = identity_family(a, true, true);
  if (!both.empty()) {
    // a two-sided identity is unique, so the family is a point
    u.two_sided = both.particular;
    u.status = *u.two_sided == Mat::identity(a.n(), a.field())
                   ? UnityStatus::contains_identity
                   : UnityStatus::unital_proper;
  }
  return u;
}

Subalgebra compress_by_idempotent(const Subalgebra& a, const Mat& e, CompressMode mode) {
  if (e.n() != a.n()) fail(errc::ambient_mismatch, "compress: side mismatch");
  check_same_field(e.field(), a.field(), "compress");
  if (e * e != e) fail(errc::not_idempotent, "compress: e is not idempotent");
  std::vector<Mat> mapped;
  mapped.reserve(a.dim());
  for (const auto& x : a.basis())
    mapped.push_back(mode == CompressMode::right_multiply ? x * e : e * x * e);
  return Subalgebra::certify(Subspace::span(a.n(), a.field(), mapped));
}

Subalgebra corner_extract(const Subalgebra& a) {
  const std::size_t n = a.n();
  if (n < 2) fail(errc::invalid_params, "corner_extract needs n >= 2");
  std::vector<Mat> small;
  small.reserve(a.dim());
  for (const auto& x : a.basis()) {
    for (std::size_t j = 0; j < n; ++j)
      if (!x.at(n - 1, j).is_zero())
        fail(errc::not_in_corner, "basis element has a nonzero bottom row");
    for (std::size_t i = 0; i < n; ++i)
      if (!x.at(i, n - 1).is_zero())
        fail(errc::not_in_corner, "basis element has a nonzero last column");
    Mat y(n - 1, a.field());
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j + 1 < n; ++j) y.at(i, j) = x.at(i, j);
    small.push_back(std::move(y));
  }
  return Subalgebra::certify(Subspace::span(n - 1, a.field(), small));
}

Subalgebra corner_embed(const Subalgebra& a) {
  const std::size_t n = a.n() + 1;
  std::vector<Mat> big;
  big.reserve(a.dim());
  for (const auto& x : a.basis()) {
    Mat y(n, a.field());
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j + 1 < n; ++j) y.at(i, j) = x.at(i, j);
    big.push_back(std::move(y));
  }
  return Subalgebra::certify(Subspace::span(n, a.field(), big));
}

}  // namespace subalg
