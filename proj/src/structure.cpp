#include "subalg/structure.hpp"

#include <utility>

namespace subalg {

Conjugator::Conjugator(Mat g) : g_(g), g_inv_(invert(g)) {}

Conjugator::Conjugator(Mat g, Mat g_inv)
    : g_(std::move(g)), g_inv_(std::move(g_inv)) {
  if (g_ * g_inv_ != Mat::identity(g_.n(), g_.field()))
    fail(errc::certification_failed, "conjugator pair does not invert");
}

Conjugator Conjugator::identity(std::size_t n, const Field& f) {
  Mat i = Mat::identity(n, f);
  return Conjugator(i, i);
}

Subspace Conjugator::apply(const Subspace& s) const {
  // conjugate_subspace maps x to g^-1 x g, so feed it the inverse
  return conjugate_subspace(s, g_inv_);
}

Subalgebra Conjugator::apply(const Subalgebra& a) const {
  return conjugate_algebra(a, g_inv_);
}

Conjugator Conjugator::after(const Conjugator& first) const {
  return Conjugator(g_ * first.g_, first.g_inv_ * g_inv_);
}

RankOneFactor rank_one_factor(const Mat& x) {
  const std::size_t n = x.n();
  const Field f = x.field();
  std::size_t j0 = n;
  for (std::size_t j = 0; j < n && j0 == n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!x.at(i, j).is_zero()) {
        j0 = j;
        break;
      }
  if (j0 == n) fail(errc::wrong_rank, "zero matrix has no rank-one factorization");
  Vec y = x.col(j0);
  std::size_t i0 = 0;
  while (y[i0].is_zero()) ++i0;
  const Scalar s = y[i0].inverse();
  for (auto& c : y) c *= s;
  Covec mu = x.row(i0);
  if (x != Mat::outer(y, mu)) fail(errc::wrong_rank, "matrix has rank > 1");
  return RankOneFactor{std::move(y), std::move(mu)};
}

namespace {

Mat mat_from_columns(const std::vector<Vec>& cols, const Field& f) {
  const std::size_t n = cols.size();
  Mat m(n, f);
  for (std::size_t j = 0; j < n; ++j) {
    if (cols[j].size() != n) fail(errc::dimension_mismatch, "column length mismatch");
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

bool parallel(const Vec& a, const Vec& b) {
  std::size_t p = a.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) {
      p = i;
      break;
    }
  if (p == a.size()) return false;  // zero vector: callers exclude this
  if (b[p].is_zero()) return false;
  const Scalar c = b[p] / a[p];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != a[i] * c) return false;
  return true;
}

Scalar dot(const Covec& mu, const Vec& y) {
  Scalar s = Scalar::zero(mu[0].field());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i].is_zero() || y[i].is_zero()) continue;
    s += mu[i] * y[i];
  }
  return s;
}

// Common-functional construction: given factors x_i = y_i (x) mu_i with all
// mu_i parallel, returns g = Y^-1 where Y = [c_1 y_1 | ... | c_{n-1} y_{n-1} | y_n],
// so that g maps the span onto span{E_{i,n}}. Nullopt when the pattern or
// independence fails.
std::optional<Conjugator> common_functional_frame(
    const std::vector<RankOneFactor>& factors, std::size_t n, const Field& f) {
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (!parallel(factors[0].mu, factors[i].mu)) return std::nullopt;
  std::size_t p = n;
  for (std::size_t j = 0; j < n; ++j)
    if (!factors[0].mu[j].is_zero()) {
      p = j;
      break;
    }
  if (p == n) return std::nullopt;
  Covec nu = factors[0].mu;
  const Scalar inv = nu[p].inverse();
  for (auto& c : nu) c *= inv;
  std::vector<Vec> cols;
  cols.reserve(n);
  for (const auto& fac : factors) {
    const Scalar ci = fac.mu[p];  // x_i = (ci y_i) (x) nu
    Vec yi = fac.y;
    for (auto& c : yi) c *= ci;
    if (!dot(nu, yi).is_zero()) return std::nullopt;  // needs square-zero geometry
    cols.push_back(std::move(yi));
  }
  Vec yn(n, Scalar::zero(f));
  yn[p] = nu[p].inverse();  // nu(yn) = 1
  cols.push_back(std::move(yn));
  Mat y_mat = mat_from_columns(cols, f);
  if (rank_of(y_mat) != n) return std::nullopt;
  Mat g = invert(y_mat);
  return Conjugator(std::move(g), std::move(y_mat));
}

std::vector<RankOneFactor> factor_basis(const std::vector<Mat>& basis) {
  std::vector<RankOneFactor> out;
  out.reserve(basis.size());
  for (const auto& x : basis) out.push_back(rank_one_factor(x));
  return out;
}

Subspace elementary_column_span(std::size_t n, const Field& f) {
  std::vector<Mat> basis;
  for (std::size_t i = 0; i + 1 < n; ++i)
    basis.push_back(Mat::elementary(n, i, n - 1, f));
  return Subspace::span(n, f, basis);
}

Subspace elementary_row_span(std::size_t n, const Field& f) {
  std::vector<Mat> basis;
  for (std::size_t i = 0; i + 1 < n; ++i)
    basis.push_back(Mat::elementary(n, n - 1, i, f));
  return Subspace::span(n, f, basis);
}

}  // namespace

std::pair<Conjugator, std::size_t> idempotent_normal_form(const Mat& e) {
  const std::size_t n = e.n();
  const Field f = e.field();
  if (e * e != e) fail(errc::not_idempotent, "matrix is not idempotent");
  const Grid eg = Grid::from_mat(e);
  RrefResult rr = rref(eg);
  const std::size_t r = rr.rank;
  if (e == Mat::diag_idempotent(n, r, f))
    return {Conjugator::identity(n, f), r};
  std::vector<Vec> cols;
  cols.reserve(n);
  for (std::size_t c : rr.pivot_cols) cols.push_back(e.col(c));
  for (auto& kv : kernel_basis(eg)) cols.push_back(std::move(kv));
  Mat s = mat_from_columns(cols, f);
  Conjugator conj(s);
  if (conj.g_inv() * e * conj.g() != Mat::diag_idempotent(n, r, f))
    fail(errc::certification_failed, "idempotent normal form did not verify");
  return {std::move(conj), r};
}

Subspace jacobson_radical(const Subalgebra& a) {
  if (a.field().tag() != FieldTag::rationals)
    fail(errc::wrong_characteristic,
         "radical via the trace form needs characteristic zero");
  const std::size_t k = a.dim();
  const std::size_t n = a.n();
  const Field f = a.field();
  if (k == 0) return Subspace::zero(n, f);
  const auto& B = a.basis();
  auto trace_product = [&](const Mat& x, const Mat& y) {
    Scalar t = Scalar::zero(f);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (x.at(i, l).is_zero() || y.at(l, i).is_zero()) continue;
        t += x.at(i, l) * y.at(l, i);
      }
    return t;
  };
  Grid gram(k, k, f);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) gram.at(j, i) = trace_product(B[i], B[j]);
  std::vector<Mat> rad_mats;
  for (const auto& coeffs : kernel_basis(gram)) {
    Mat x(n, f);
    for (std::size_t i = 0; i < k; ++i)
      if (!coeffs[i].is_zero()) x = x + B[i].scaled(coeffs[i]);
    rad_mats.push_back(std::move(x));
  }
  Subspace rad = Subspace::span(n, f, rad_mats);
  // certification: two-sided ideal
  for (const auto& x : rad.basis())
    for (const auto& b : B)
      if (!rad.contains(x * b) || !rad.contains(b * x))
        fail(errc::certification_failed, "radical candidate is not an ideal");
  // certification: nilpotent
  Subspace power = rad;
  for (std::size_t step = 0; step <= rad.dim() && power.dim() > 0; ++step) {
    std::vector<Mat> prods;
    for (const auto& x : power.basis())
      for (const auto& y : rad.basis()) prods.push_back(x * y);
    power = Subspace::span(n, f, prods);
  }
  if (power.dim() > 0)
    fail(errc::certification_failed, "radical candidate is not nilpotent");
  return rad;
}

std::pair<FrameCase, Conjugator> radical_frame(const Subspace& j) {
  const std::size_t n = j.n();
  const Field f = j.field();
  if (n < 2 || j.dim() + 1 != n)
    fail(errc::frame_violation, "frame needs dim j = n-1");
  for (const auto& x : j.basis())
    for (const auto& y : j.basis())
      if (!(x * y).is_zero())
        fail(errc::frame_violation, "basis products are not all zero");
  std::vector<RankOneFactor> factors;
  try {
    factors = factor_basis(j.basis());
  } catch (const error& e) {
    fail(errc::frame_violation, e.what());
  }
  if (auto conj = common_functional_frame(factors, n, f)) {
    if (conj->apply(j) != elementary_column_span(n, f))
      fail(errc::frame_violation, "common-functional frame did not verify");
    return {FrameCase::common_functional, std::move(*conj)};
  }
  // transpose reduction: a common vector becomes a common functional
  std::vector<Mat> transposed;
  transposed.reserve(j.dim());
  for (const auto& x : j.basis()) transposed.push_back(x.transpose());
  Subspace jt = Subspace::span(n, f, transposed);
  std::vector<RankOneFactor> t_factors;
  try {
    t_factors = factor_basis(jt.basis());
  } catch (const error& e) {
    fail(errc::frame_violation, e.what());
  }
  if (auto conj_t = common_functional_frame(t_factors, n, f)) {
    Conjugator conj(conj_t->g_inv().transpose(), conj_t->g().transpose());
    if (conj.apply(j) != elementary_row_span(n, f))
      fail(errc::frame_violation, "common-vector frame did not verify");
    return {FrameCase::common_vector, std::move(conj)};
  }
  fail(errc::frame_violation, "factors share neither a functional nor a vector");
}

const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::gamma_w: return "GammaW";
    case WitnessKind::gamma_w_transpose: return "GammaWTranspose";
    case WitnessKind::row_algebra: return "RowAlgebra";
    case WitnessKind::column_algebra: return "ColumnAlgebra";
    case WitnessKind::parabolic_p: return "ParabolicP";
    case WitnessKind::parabolic_p_transpose: return "ParabolicPTranspose";
    case WitnessKind::omega_max_column: return "OmegaMaxColumn";
    case WitnessKind::omega_max_row: return "OmegaMaxRow";
  }
  return "?";
}

WitnessKind witness_kind_parse(const std::string& s) {
  for (WitnessKind k :
       {WitnessKind::gamma_w, WitnessKind::gamma_w_transpose,
        WitnessKind::row_algebra, WitnessKind::column_algebra,
        WitnessKind::parabolic_p, WitnessKind::parabolic_p_transpose,
        WitnessKind::omega_max_column, WitnessKind::omega_max_row})
    if (s == witness_kind_name(k)) return k;
  fail(errc::parse_error, "unknown witness kind '" + s + "'");
}

VecSpace joint_image(const Subalgebra& a) {
  std::vector<Vec> cols;
  cols.reserve(a.dim() * a.n());
  for (const auto& x : a.basis())
    for (std::size_t j = 0; j < a.n(); ++j) cols.push_back(x.col(j));
  return VecSpace::span(a.n(), a.field(), cols);
}

VecSpace joint_kernel(const Subalgebra& a) {
  Grid stacked(0, a.n(), a.field());
  for (const auto& x : a.basis())
    for (std::size_t i = 0; i < a.n(); ++i) stacked.append_row(x.row(i));
  return VecSpace::span(a.n(), a.field(), kernel_basis(stacked));
}

namespace {

void require_rationals(const Subalgebra& a, const char* who) {
  if (a.field().tag() != FieldTag::rationals)
    fail(errc::wrong_characteristic, std::string(who) + " runs over the rationals only");
}

CanonicalSpec make_spec(CanonicalTag tag, std::size_t n) {
  CanonicalSpec spec;
  spec.tag = tag;
  spec.n = n;
  return spec;
}

CanonicalSpec row_algebra_spec(std::size_t n) {
  CanonicalSpec spec;
  spec.tag = CanonicalTag::zero_pattern;
  spec.n = n;
  spec.zero_rows.insert(n);
  return spec;
}

CanonicalSpec column_algebra_spec(std::size_t n) {
  CanonicalSpec spec;
  spec.tag = CanonicalTag::zero_pattern;
  spec.n = n;
  spec.zero_cols.insert(n);
  return spec;
}

}  // namespace

ClassificationWitness recognize_parabolic(const Subalgebra& l) {
  require_rationals(l, "recognize_parabolic");
  const std::size_t n = l.n();
  const Field f = l.field();
  if (n < 2) fail(errc::invalid_params, "recognize_parabolic needs n >= 2");
  if (l.dim() != n * n - n + 1)
    fail(errc::not_parabolic, "dimension is not n^2-n+1");
  Subspace j = jacobson_radical(l);
  if (j.dim() + 1 != n) fail(errc::not_parabolic, "radical dimension is not n-1");
  FrameCase fc = FrameCase::common_functional;
  std::optional<Conjugator> frame;
  try {
    auto [c, conj] = radical_frame(j);
    fc = c;
    frame = std::move(conj);
  } catch (const error& e) {
    fail(errc::not_parabolic, e.what());
  }
  if (fc == FrameCase::common_functional) {
    const CanonicalSpec target = make_spec(CanonicalTag::parabolic_p, n);
    if (frame->apply(l) != canonical_algebra(target, f))
      fail(errc::not_parabolic, "frame does not map onto the parabolic");
    return ClassificationWitness{WitnessKind::parabolic_p, std::move(*frame),
                                 target, true};
  }
  // common vector: compose with the fixed reversal to land on the prime form
  Mat rho = Mat::reversal_permutation(n, f);
  Conjugator full = Conjugator(rho, rho).after(*frame);
  const CanonicalSpec target = make_spec(CanonicalTag::parabolic_p_prime, n);
  if (full.apply(l) != canonical_algebra(target, f))
    fail(errc::not_parabolic, "frame does not map onto the opposite parabolic");
  return ClassificationWitness{WitnessKind::parabolic_p_transpose,
                               std::move(full), target, true};
}

ClassificationWitness recognize_max_nonunital(const Subalgebra& l) {
  require_rationals(l, "recognize_max_nonunital");
  const std::size_t n = l.n();
  const Field f = l.field();
  if (n < 2) fail(errc::invalid_params, "recognize_max_nonunital needs n >= 2");
  if (l.dim() != n * (n - 1))
    fail(errc::not_max_nonunital, "dimension is not n(n-1)");
  if (two_sided_identity(l).has_value())
    fail(errc::not_max_nonunital, "algebra is unital");

  auto try_row_route = [&](const Subalgebra& cand) -> std::optional<Conjugator> {
    VecSpace u = joint_image(cand);
    if (u.dim() + 1 != n) return std::nullopt;
    std::vector<Vec> cols = u.basis();
    auto outside = u.first_standard_outside();
    if (!outside) return std::nullopt;
    Vec comp(n, Scalar::zero(f));
    comp[*outside] = Scalar::one(f);
    cols.push_back(std::move(comp));
    Mat h = mat_from_columns(cols, f);
    Conjugator conj = Conjugator(h).inverse();  // g = h^-1
    if (conj.apply(cand) != canonical_algebra(row_algebra_spec(n), f))
      return std::nullopt;
    return conj;
  };

  if (auto conj = try_row_route(l))
    return ClassificationWitness{WitnessKind::row_algebra, std::move(*conj),
                                 row_algebra_spec(n), true};
  if (auto conj_t = try_row_route(transpose_algebra(l))) {
    Conjugator conj(conj_t->g_inv().transpose(), conj_t->g().transpose());
    if (conj.apply(l) != canonical_algebra(column_algebra_spec(n), f))
      fail(errc::not_max_nonunital, "transpose route failed certification");
    return ClassificationWitness{WitnessKind::column_algebra, std::move(conj),
                                 column_algebra_spec(n), true};
  }
  fail(errc::not_max_nonunital, "joint image matches neither orientation");
}

ClassificationWitness classify_gamma_max(const Subalgebra& nn) {
  require_rationals(nn, "classify_gamma_max");
  const std::size_t n = nn.n();
  const Field f = nn.field();
  if (n < 3)
    fail(errc::dimension_too_small, "maximal intersections need n >= 3");
  if (nn.dim() != (n - 1) * (n - 2))
    fail(errc::not_gamma_max, "dimension is not (n-1)(n-2)");
  if (two_sided_identity(nn).has_value())
    fail(errc::not_gamma_max, "algebra is unital");

  auto try_w_route = [&](const Subalgebra& cand) -> std::optional<Conjugator> {
    VecSpace u = joint_image(cand);
    VecSpace z = joint_kernel(cand);
    if (u.dim() != n - 2 || z.dim() != 1) return std::nullopt;
    if (u.intersect(z).dim() != 0) return std::nullopt;
    auto outside = u.sum(z).first_standard_outside();
    if (!outside) return std::nullopt;
    std::vector<Vec> cols = u.basis();
    Vec comp(n, Scalar::zero(f));
    comp[*outside] = Scalar::one(f);
    cols.push_back(std::move(comp));
    cols.push_back(z.basis()[0]);
    Mat h = mat_from_columns(cols, f);
    if (rank_of(h) != n) return std::nullopt;
    Conjugator conj = Conjugator(h).inverse();
    if (conj.apply(cand) !=
        canonical_algebra(make_spec(CanonicalTag::w, n), f))
      return std::nullopt;
    return conj;
  };

  if (auto conj = try_w_route(nn))
    return ClassificationWitness{WitnessKind::gamma_w, std::move(*conj),
                                 make_spec(CanonicalTag::w, n), true};
  if (auto conj_t = try_w_route(transpose_algebra(nn))) {
    Conjugator conj(conj_t->g_inv().transpose(), conj_t->g().transpose());
    const CanonicalSpec target = make_spec(CanonicalTag::w_transpose, n);
    if (conj.apply(nn) != canonical_algebra(target, f))
      fail(errc::not_gamma_max, "transpose route failed certification");
    return ClassificationWitness{WitnessKind::gamma_w_transpose,
                                 std::move(conj), target, true};
  }
  fail(errc::not_gamma_max, "image/kernel signature matches neither class");
}

ClassificationWitness classify_omega_max(const Subalgebra& b) {
  require_rationals(b, "classify_omega_max");
  const std::size_t n = b.n();
  const Field f = b.field();
  if (n < 3)
    fail(errc::dimension_too_small,
         "the two maximizer families separate only for n >= 3");
  const Subalgebra p = canonical_algebra(make_spec(CanonicalTag::parabolic_p, n), f);
  if (!p.space().contains_all(b.space()))
    fail(errc::not_in_omega, "not contained in the parabolic");
  const Subalgebra row = canonical_algebra(row_algebra_spec(n), f);
  if (b == row) fail(errc::not_in_omega, "the zero-bottom-row algebra is excluded");
  if (b == p) fail(errc::not_in_omega, "the full parabolic is excluded");
  if (b.dim() != n * n - 2 * n + 3)
    fail(errc::not_in_omega, "dimension is not n^2-2n+3");

  const Mat e = Mat::diag_idempotent(n, n - 1, f);
  Subalgebra be = compress_by_idempotent(b, e, CompressMode::right_multiply);
  Subspace col_block = elementary_column_span(n, f).sum(
      Subspace::span(n, f, {Mat::elementary(n, n - 1, n - 1, f)}));
  if (b.space() != be.space().sum(col_block))
    fail(errc::not_omega_max, "b does not split as b*e plus the last column");

  Subalgebra corner = [&] {
    try {
      return corner_extract(be);
    } catch (const error& e2) {
      fail(errc::not_omega_max, e2.what());
    }
  }();
  ClassificationWitness inner = [&] {
    try {
      return recognize_parabolic(corner);
    } catch (const error& e2) {
      if (is_rejection(e2.code()))
        fail(errc::not_omega_max, std::string("corner: ") + e2.what());
      throw;
    }
  }();

  Mat s(n, f);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) s.at(i, j) = inner.conj.g().at(i, j);
  s.at(n - 1, n - 1) = Scalar::one(f);
  Mat s_inv(n, f);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) s_inv.at(i, j) = inner.conj.g_inv().at(i, j);
  s_inv.at(n - 1, n - 1) = Scalar::one(f);
  Conjugator conj(std::move(s), std::move(s_inv));

  Subalgebra normalized = conj.apply(b);
  for (CanonicalTag tag : {CanonicalTag::omega_max_column, CanonicalTag::omega_max_row}) {
    const CanonicalSpec target = make_spec(tag, n);
    if (normalized == canonical_algebra(target, f)) {
      WitnessKind kind = tag == CanonicalTag::omega_max_column
                             ? WitnessKind::omega_max_column
                             : WitnessKind::omega_max_row;
      return ClassificationWitness{kind, std::move(conj), target, true};
    }
  }
  fail(errc::not_omega_max, "normal form matches neither maximizer");
}

GammaCheckReport gamma_bound_check(const Subalgebra& u, const Subalgebra& v) {
  check_same_ambient(u.space(), v.space(), "gamma_bound_check");
  const std::size_t n = u.n();
  const Field f = u.field();
  Subalgebra inter = intersect(u, v);
  const auto eu = two_sided_identity(u);
  const auto ev = two_sided_identity(v);
  const bool inter_nonunital = !two_sided_identity(inter).has_value();
  GammaCheckReport rep;
  rep.is_gamma = eu.has_value() && ev.has_value() && inter_nonunital;
  rep.dim_n = inter.dim();
  rep.bound_ok = !rep.is_gamma || rep.dim_n <= (n - 1) * (n - 2);
  const Mat id = Mat::identity(n, f);
  const Mat* proper = nullptr;
  bool from_u = true;
  if (eu.has_value() && *eu != id) {
    proper = &*eu;
  } else if (ev.has_value() && *ev != id) {
    proper = &*ev;
    from_u = false;
  }
  if (proper) {
    auto [s, r] = idempotent_normal_form(*proper);
    (void)r;
    Subalgebra moved_u = conjugate_algebra(u, s.g());  // {S^-1 x S}
    Subalgebra moved_v = conjugate_algebra(v, s.g());
    Subalgebra moved_inter = conjugate_algebra(inter, s.g());
    const Subalgebra& moved_factor = from_u ? moved_u : moved_v;
    CanonicalSpec corner_spec;
    corner_spec.tag = CanonicalTag::zero_pattern;
    corner_spec.n = n;
    corner_spec.zero_rows.insert(n);
    corner_spec.zero_cols.insert(n);
    const Subalgebra corner = canonical_algebra(corner_spec, f);
    const bool contained = corner.space().contains_all(moved_factor.space());
    rep.trace = GammaCheckTrace{s.g(),
                                from_u,
                                std::move(moved_u),
                                std::move(moved_v),
                                std::move(moved_inter),
                                contained};
  }
  return rep;
}

}  // namespace subalg
