#include "subalg/search.hpp"

#include <algorithm>
#include <chrono>

#include "subalg/canonical.hpp"
#include "subalg/structure.hpp"

namespace subalg {

Mat random_matrix(std::size_t n, std::int64_t bound, Rng& rng, const Field& f) {
  if (bound < 1) fail(errc::invalid_params, "entry bound must be at least 1");
  Mat m(n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = Scalar::from_int(rng.uniform_int(-bound, bound), f);
  return m;
}

Mat random_invertible(std::size_t n, std::int64_t bound, Rng& rng, const Field& f) {
  std::int64_t b = bound;
  std::size_t rejections = 0;
  for (;;) {
    Mat m = random_matrix(n, b, rng, f);
    if (rank_of(m) == n) return m;
    if (++rejections >= 1000) {
      b *= 2;
      rejections = 0;
    }
  }
}

Mat random_idempotent(std::size_t n, std::size_t r, Rng& rng, const Field& f) {
  if (r > n) fail(errc::invalid_params, "idempotent rank exceeds the side");
  const Mat d = Mat::diag_idempotent(n, r, f);
  if (r == 0 || r == n) return d;  // rigid cases, no conjugation needed
  Mat g = random_invertible(n, 3, rng, f);
  return g * d * invert(g);
}

Mat random_span_element(const Subspace& s, std::int64_t bound, Rng& rng) {
  Mat m(s.n(), s.field());
  for (const auto& b : s.basis()) {
    const std::int64_t c = rng.uniform_int(-bound, bound);
    if (c != 0) m = m + b.scaled(Scalar::from_int(c, s.field()));
  }
  return m;
}

Subalgebra random_subalgebra(std::size_t n, std::size_t k_generators,
                             std::int64_t bound, Rng& rng,
                             const std::optional<Subalgebra>& ambient,
                             const Field& f) {
  const Field field = ambient ? ambient->field() : f;
  if (ambient && ambient->n() != n)
    fail(errc::ambient_mismatch, "ambient algebra has a different side");
  std::vector<Mat> gens;
  gens.reserve(k_generators);
  for (std::size_t i = 0; i < k_generators; ++i)
    gens.push_back(ambient ? random_span_element(ambient->space(), bound, rng)
                           : random_matrix(n, bound, rng, field));
  return multiplicative_closure(Subspace::span(n, field, gens));
}

Subalgebra random_unital_subalgebra(std::size_t n, std::size_t r, std::size_t k,
                                    std::int64_t bound, Rng& rng, const Field& f) {
  if (r < 1 || r > n) fail(errc::invalid_params, "unity rank must be in 1..n");
  const Mat e = random_idempotent(n, r, rng, f);
  std::vector<Mat> gens{e};
  for (std::size_t i = 0; i < k; ++i) {
    const Mat x = random_matrix(n, bound, rng, f);
    gens.push_back(e * x * e);
  }
  return multiplicative_closure(Subspace::span(n, f, gens));
}

namespace {

CanonicalSpec tag_spec(CanonicalTag tag, std::size_t n) {
  CanonicalSpec s;
  s.tag = tag;
  s.n = n;
  return s;
}

Subalgebra zero_row_algebra(std::size_t n, const Field& f) {
  CanonicalSpec s = tag_spec(CanonicalTag::zero_pattern, n);
  s.zero_rows.insert(n);
  return canonical_algebra(s, f);
}

Subalgebra zero_col_algebra(std::size_t n, const Field& f) {
  CanonicalSpec s = tag_spec(CanonicalTag::zero_pattern, n);
  s.zero_cols.insert(n);
  return canonical_algebra(s, f);
}

Subalgebra corner_full_algebra(std::size_t n, const Field& f) {
  CanonicalSpec s = tag_spec(CanonicalTag::zero_pattern, n);
  s.zero_rows.insert(n);
  s.zero_cols.insert(n);
  return canonical_algebra(s, f);
}

void record_dim(SuiteReport& rep, std::size_t dim) {
  ++rep.histogram[dim];
  rep.attained_max = std::max(rep.attained_max, dim);
}

void add_violation(SuiteReport& rep, std::size_t trial, std::string detail) {
  rep.violations.push_back(Violation{trial, std::move(detail)});
}

bool is_structured(std::size_t trial) { return trial != 0 && trial % 5 == 1; }

// Embeds an (n-1)-conjugator into the block shape diag(g', 1).
Mat diag_extend(const Mat& g, const Field& f) {
  const std::size_t n = g.n() + 1;
  Mat s(n, f);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) s.at(i, j) = g.at(i, j);
  s.at(n - 1, n - 1) = Scalar::one(f);
  return s;
}

void suite_thm31(SuiteReport& rep, const SuiteParams& p) {
  const std::size_t n = p.n;
  const Field f = p.field;
  const std::size_t bound_dim = (n - 1) * (n - 2);
  const Subalgebra u0 = corner_full_algebra(n, f);
  const Mat shear_inv =
      Mat::identity(n, f) - Mat::elementary(n, n - 1, n - 2, f);
  const Subalgebra v0 = conjugate_algebra(u0, shear_inv);  // A u0 A^-1
  for (std::size_t t = 0; t < p.trials; ++t) {
    Rng rng = Rng(p.seed).split(t);
    bool expect_tight = false;
    std::optional<Subalgebra> u, v;
    if (t == 0) {
      u = u0;
      v = v0;
      expect_tight = n >= 3;
    } else if (is_structured(t)) {
      const Mat g = random_invertible(n, p.bound, rng, f);
      u = conjugate_algebra(u0, g);
      v = conjugate_algebra(v0, g);
      expect_tight = n >= 3;
    } else {
      const std::size_t ru = 1 + rng.uniform_index(n);
      const std::size_t rv = 1 + rng.uniform_index(n);
      const std::size_t ku = 1 + rng.uniform_index(3);
      const std::size_t kv = 1 + rng.uniform_index(3);
      u = random_unital_subalgebra(n, ru, ku, p.bound, rng, f);
      v = random_unital_subalgebra(n, rv, kv, p.bound, rng, f);
    }
    const GammaCheckReport r = gamma_bound_check(*u, *v);
    if (r.is_gamma) {
      record_dim(rep, r.dim_n);
      if (!r.bound_ok)
        add_violation(rep, t,
                      "nonunital intersection of dimension " +
                          std::to_string(r.dim_n) + " exceeds the bound " +
                          std::to_string(bound_dim));
    }
    if (expect_tight && !(r.is_gamma && r.dim_n == bound_dim))
      add_violation(rep, t, "extremal pair failed to attain the bound");
  }
}

void suite_lem22(SuiteReport& rep, const SuiteParams& p) {
  const std::size_t n = p.n;
  const Field f = p.field;
  const std::size_t bound_dim = n * (n - 1);
  const Subalgebra row0 = zero_row_algebra(n, f);
  const Subalgebra col0 = zero_col_algebra(n, f);
  for (std::size_t t = 0; t < p.trials; ++t) {
    Rng rng = Rng(p.seed).split(t);
    bool expect_tight = false;
    std::optional<Subalgebra> l;
    if (t == 0) {
      l = row0;
      expect_tight = true;
    } else if (is_structured(t)) {
      const Mat g = random_invertible(n, p.bound, rng, f);
      l = conjugate_algebra((t / 5) % 2 == 0 ? row0 : col0, g);
      expect_tight = true;
    } else {
      const std::size_t k = 1 + rng.uniform_index(3);
      l = random_subalgebra(n, k, p.bound, rng, std::nullopt, f);
    }
    const bool nonunital = !two_sided_identity(*l).has_value();
    if (nonunital) {
      record_dim(rep, l->dim());
      if (l->dim() > bound_dim)
        add_violation(rep, t,
                      "nonunital subalgebra of dimension " +
                          std::to_string(l->dim()) + " exceeds the bound " +
                          std::to_string(bound_dim));
    }
    if (expect_tight && !(nonunital && l->dim() == bound_dim))
      add_violation(rep, t, "extremal algebra failed to attain the bound");
  }
}

void suite_lem21(SuiteReport& rep, const SuiteParams& p) {
  const std::size_t n = p.n;
  const Field f = p.field;
  rep.trials = 1;  // deterministic identity, nothing to sample
  const Subalgebra u = corner_full_algebra(n, f);
  const Mat shear_inv =
      Mat::identity(n, f) - Mat::elementary(n, n - 1, n - 2, f);
  const Subalgebra v = conjugate_algebra(u, shear_inv);
  const Subalgebra inter = intersect(u, v);
  const Subalgebra w = canonical_algebra(tag_spec(CanonicalTag::w, n), f);
  if (inter != w)
    add_violation(rep, 0, "intersection differs from the canonical maximizer");
  if (inter.dim() != (n - 1) * (n - 2))
    add_violation(rep, 0, "intersection dimension is not (n-1)(n-2)");
  if (n >= 3 && two_sided_identity(inter).has_value())
    add_violation(rep, 0, "intersection unexpectedly has an identity");
  record_dim(rep, inter.dim());
}

void suite_lem23rem(SuiteReport& rep, const SuiteParams& p) {
  const std::size_t n = p.n;
  const Field f = p.field;
  const Subalgebra base = zero_row_algebra(n, f);
  const Subalgebra parab =
      canonical_algebra(tag_spec(CanonicalTag::parabolic_p, n), f);
  const Mat id = Mat::identity(n, f);
  for (std::size_t t = 0; t < p.trials; ++t) {
    Rng rng = Rng(p.seed).split(t);
    Mat x(n, f);
    if (t == 0) {
      x = Mat::elementary(n, n - 1, n - 1, f);
    } else if (is_structured(t)) {
      x = random_span_element(parab.space(), p.bound, rng);
      if (x.at(n - 1, n - 1).is_zero())
        x = x + Mat::elementary(n, n - 1, n - 1, f);
    } else {
      x = random_matrix(n, p.bound, rng, f);
      if (base.contains(x)) x = x + Mat::elementary(n, n - 1, 0, f);
    }
    const Subalgebra b = multiplicative_closure(
        base.space().sum(Subspace::span(n, f, {x})));
    record_dim(rep, b.dim());
    if (!b.contains(id))
      add_violation(rep, t,
                    "proper extension of the zero-row algebra omits I");
  }
}

void suite_thm33(SuiteReport& rep, const SuiteParams& p) {
  const std::size_t n = p.n;
  const Field f = p.field;
  const std::size_t max_dim = n * n - 2 * n + 3;
  const Subalgebra parab =
      canonical_algebra(tag_spec(CanonicalTag::parabolic_p, n), f);
  const Subalgebra row0 = zero_row_algebra(n, f);
  const Subalgebra omc =
      canonical_algebra(tag_spec(CanonicalTag::omega_max_column, n), f);
  const Subalgebra omr =
      canonical_algebra(tag_spec(CanonicalTag::omega_max_row, n), f);
  const Subalgebra corner = corner_full_algebra(n, f);
  // full-compression instance: the corner algebra plus the lone corner unit
  const Subalgebra side0 = Subalgebra::certify(corner.space().sum(
      Subspace::span(n, f, {Mat::elementary(n, n - 1, n - 1, f)})));
  const Mat e = Mat::diag_idempotent(n, n - 1, f);
  for (std::size_t t = 0; t < p.trials; ++t) {
    Rng rng = Rng(p.seed).split(t);
    std::optional<Subalgebra> b;
    std::optional<WitnessKind> expect_kind;
    bool side_claim = false;
    if (t == 0) {
      b = omc;
      expect_kind = WitnessKind::omega_max_column;
    } else if (is_structured(t)) {
      const Mat g = random_invertible(n - 1, p.bound, rng, f);
      const Mat s = diag_extend(g, f);
      switch ((t / 5) % 3) {
        case 0:
          b = conjugate_algebra(omc, s);
          expect_kind = WitnessKind::omega_max_column;
          break;
        case 1:
          b = conjugate_algebra(omr, s);
          // the two families coincide at n = 3; fixed trial order wins there
          expect_kind = n == 3 ? WitnessKind::omega_max_column
                               : WitnessKind::omega_max_row;
          break;
        default:
          b = conjugate_algebra(side0, s);
          side_claim = true;
          break;
      }
    } else {
      const std::size_t k = 1 + rng.uniform_index(3);
      b = random_subalgebra(n, k, p.bound, rng, parab);
    }
    if (*b == parab || *b == row0) continue;  // outside the family under test
    record_dim(rep, b->dim());
    if (b->dim() > max_dim)
      add_violation(rep, t,
                    "member of dimension " + std::to_string(b->dim()) +
                        " exceeds the bound " + std::to_string(max_dim));
    if (side_claim) {
      if (b->dim() > max_dim - 1)
        add_violation(rep, t, "full-compression instance exceeds n^2-2n+2");
      const Subalgebra be =
          compress_by_idempotent(*b, e, CompressMode::right_multiply);
      if (be != corner)
        add_violation(rep, t, "full-compression instance lost its compression");
    }
    if (expect_kind) {
      try {
        const ClassificationWitness w = classify_omega_max(*b);
        if (!w.certified || w.kind != *expect_kind)
          add_violation(rep, t, "maximizer conjugate classified with wrong kind");
      } catch (const error& err) {
        add_violation(rep, t,
                      std::string("maximizer conjugate rejected: ") + err.what());
      }
    }
  }
}

void suite_thm32(SuiteReport& rep, const SuiteParams& p) {
  const std::size_t n = p.n;
  const Field f = p.field;
  const Subalgebra w0 = canonical_algebra(tag_spec(CanonicalTag::w, n), f);
  const Subalgebra wt0 =
      canonical_algebra(tag_spec(CanonicalTag::w_transpose, n), f);
  for (std::size_t t = 0; t < p.trials; ++t) {
    Rng rng = Rng(p.seed).split(t);
    std::optional<Subalgebra> nn;
    std::optional<WitnessKind> expect_kind;
    if (t == 0) {
      nn = w0;
      expect_kind = WitnessKind::gamma_w;
    } else if (is_structured(t)) {
      const Mat g = random_invertible(n, p.bound, rng, f);
      if ((t / 5) % 2 == 0) {
        nn = conjugate_algebra(w0, g);
        expect_kind = WitnessKind::gamma_w;
      } else {
        nn = conjugate_algebra(wt0, g);
        expect_kind = WitnessKind::gamma_w_transpose;
      }
    } else {
      const std::size_t k = 1 + rng.uniform_index(3);
      nn = random_subalgebra(n, k, p.bound, rng, std::nullopt, f);
    }
    try {
      const ClassificationWitness w = classify_gamma_max(*nn);
      if (w.certified) record_dim(rep, nn->dim());
      if (expect_kind && (!w.certified || w.kind != *expect_kind))
        add_violation(rep, t, "maximizer conjugate classified with wrong kind");
    } catch (const error& err) {
      if (!is_rejection(err.code()))
        add_violation(rep, t, std::string("internal failure: ") + err.what());
      else if (expect_kind)
        add_violation(rep, t,
                      std::string("maximizer conjugate rejected: ") + err.what());
    }
  }
}

void suite_prop42(SuiteReport& rep, const SuiteParams& p) {
  const std::size_t n = p.n;
  const Field f = p.field;
  const Subalgebra p0 =
      canonical_algebra(tag_spec(CanonicalTag::parabolic_p, n), f);
  const Subalgebra pt0 = transpose_algebra(p0);
  for (std::size_t t = 0; t < p.trials; ++t) {
    Rng rng = Rng(p.seed).split(t);
    std::optional<Subalgebra> l;
    bool expect_certified = false;
    std::optional<WitnessKind> expect_kind;
    if (t == 0) {
      l = p0;
      expect_certified = true;
      expect_kind = WitnessKind::parabolic_p;
    } else if (is_structured(t)) {
      const Mat g = random_invertible(n, p.bound, rng, f);
      expect_certified = true;
      if ((t / 5) % 2 == 0) {
        l = conjugate_algebra(p0, g);
        if (n >= 3) expect_kind = WitnessKind::parabolic_p;
      } else {
        l = conjugate_algebra(pt0, g);
        // at n = 2 the two parabolics are similar, so either kind may win
        if (n >= 3) expect_kind = WitnessKind::parabolic_p_transpose;
      }
    } else {
      const std::size_t k = 1 + rng.uniform_index(3);
      l = random_subalgebra(n, k, p.bound, rng, std::nullopt, f);
    }
    try {
      const ClassificationWitness w = recognize_parabolic(*l);
      if (w.certified) record_dim(rep, l->dim());
      if (expect_certified && !w.certified)
        add_violation(rep, t, "parabolic conjugate not certified");
      if (expect_kind && w.kind != *expect_kind)
        add_violation(rep, t, "parabolic conjugate classified with wrong kind");
    } catch (const error& err) {
      if (!is_rejection(err.code()))
        add_violation(rep, t, std::string("internal failure: ") + err.what());
      else if (expect_certified)
        add_violation(rep, t,
                      std::string("parabolic conjugate rejected: ") + err.what());
    }
  }
}

}  // namespace

std::vector<std::string> suite_ids() {
  return {"thm31", "lem22", "lem21", "lem23rem", "thm33", "thm32", "prop42"};
}

SuiteReport run_suite(const std::string& suite_id, const SuiteParams& params) {
  if (params.trials < 1) fail(errc::invalid_params, "trials must be at least 1");
  if (params.bound < 1) fail(errc::invalid_params, "bound must be at least 1");
  SuiteReport rep;
  rep.suite_id = suite_id;
  rep.n = params.n;
  rep.trials = params.trials;
  rep.seed = params.seed;
  rep.bound = params.bound;
  rep.field = params.field.str();

  const bool rational = params.field.tag() == FieldTag::rationals;
  const auto need_n = [&](std::size_t least) {
    if (params.n < least)
      fail(errc::invalid_params,
           "suite " + suite_id + " needs n >= " + std::to_string(least));
  };
  const auto need_q = [&] {
    if (!rational)
      fail(errc::invalid_params,
           "suite " + suite_id + " runs over the rationals only");
  };

  const auto start = std::chrono::steady_clock::now();
  if (suite_id == "thm31") {
    need_n(2), need_q();
    suite_thm31(rep, params);
  } else if (suite_id == "lem22") {
    need_n(2), need_q();
    suite_lem22(rep, params);
  } else if (suite_id == "lem21") {
    need_n(2);
    suite_lem21(rep, params);
  } else if (suite_id == "lem23rem") {
    need_n(2);
    suite_lem23rem(rep, params);
  } else if (suite_id == "thm33") {
    need_n(3), need_q();
    suite_thm33(rep, params);
  } else if (suite_id == "thm32") {
    need_n(3), need_q();
    suite_thm32(rep, params);
  } else if (suite_id == "prop42") {
    need_n(2), need_q();
    suite_prop42(rep, params);
  } else {
    fail(errc::unknown_suite, "unknown suite '" + suite_id + "'");
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

}  // namespace subalg
