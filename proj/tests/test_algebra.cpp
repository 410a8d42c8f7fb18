#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "subalg/canonical.hpp"
#include "subalg/search.hpp"

using namespace subalg;
using testsupport::mat_from;
using testsupport::Q;
using testsupport::ToyRng;

namespace {

Mat el(std::size_t n, std::size_t i, std::size_t j) {  // 0-based
  return Mat::elementary(n, i, j, Q());
}

Subspace random_span(std::size_t n, std::size_t k, ToyRng& rng, long bound) {
  std::vector<Mat> mats;
  for (std::size_t t = 0; t < k; ++t) {
    Mat m(n, Q());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = Scalar::from_int(rng.pick(-bound, bound), Q());
    mats.push_back(std::move(m));
  }
  return Subspace::span(n, Q(), mats);
}

}  // namespace

TEST_CASE("closure of the off-diagonal pair fills the 2x2 algebra") {
  Subspace s = Subspace::span(2, Q(), {el(2, 0, 1), el(2, 1, 0)});
  Subalgebra a = multiplicative_closure(s);
  CHECK(a.dim() == 4);
  // the two products that force the growth, checked directly
  CHECK(el(2, 0, 1) * el(2, 1, 0) == el(2, 0, 0));
  CHECK(el(2, 1, 0) * el(2, 0, 1) == el(2, 1, 1));
  CHECK(a.contains(el(2, 0, 0)));
  CHECK(a.contains(el(2, 1, 1)));
}

TEST_CASE("closure of a nilpotent generator is a line") {
  Subalgebra a = multiplicative_closure(Subspace::span(3, Q(), {el(3, 0, 1)}));
  CHECK(a.dim() == 1);
  CHECK((el(3, 0, 1) * el(3, 0, 1)).is_zero());
}

TEST_CASE("an already closed span survives closure untouched") {
  // all four pairwise products of E_11, E_12 stay inside the span
  Subspace s = Subspace::span(3, Q(), {el(3, 0, 0), el(3, 0, 1)});
  CHECK(el(3, 0, 0) * el(3, 0, 0) == el(3, 0, 0));
  CHECK(el(3, 0, 0) * el(3, 0, 1) == el(3, 0, 1));
  CHECK((el(3, 0, 1) * el(3, 0, 0)).is_zero());
  CHECK((el(3, 0, 1) * el(3, 0, 1)).is_zero());
  Subalgebra a = multiplicative_closure(s);
  CHECK(a.space() == s);
}

TEST_CASE("closure is monotone and idempotent on random spans") {
  ToyRng rng(911);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + rng.next() % 2;
    Subspace s = random_span(n, 1 + rng.next() % 2, rng, 2);
    Subalgebra c = multiplicative_closure(s);
    CHECK(c.space().contains_all(s));
    Subalgebra cc = multiplicative_closure(c.space());
    CHECK(cc == c);
  }
}

TEST_CASE("closure products are certified by brute force") {
  ToyRng rng(912);
  for (int t = 0; t < 40; ++t) {
    Subspace s = random_span(3, 2, rng, 2);
    Subalgebra a = multiplicative_closure(s);
    for (const Mat& x : a.basis())
      for (const Mat& y : a.basis()) CHECK(a.contains(x * y));
  }
}

TEST_CASE("certify accepts closed spans and rejects open ones") {
  Subspace closed = Subspace::span(2, Q(), {el(2, 0, 0)});
  CHECK(Subalgebra::is_closed(closed));
  Subalgebra a = Subalgebra::certify(closed);
  CHECK(a.dim() == 1);

  Subspace open = Subspace::span(2, Q(), {el(2, 0, 1) + el(2, 1, 0)});
  CHECK_FALSE(Subalgebra::is_closed(open));
  try {
    Subalgebra::certify(open);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::certification_failed);
  }
}

TEST_CASE("intersection of certified algebras is closed without re-closing") {
  ToyRng rng(913);
  for (int t = 0; t < 30; ++t) {
    Subalgebra a = multiplicative_closure(random_span(3, 2, rng, 2));
    Subalgebra b = multiplicative_closure(random_span(3, 2, rng, 2));
    Subalgebra inter = intersect(a, b);
    CHECK(Subalgebra::is_closed(inter.space()));
    CHECK(a.space().contains_all(inter.space()));
    CHECK(b.space().contains_all(inter.space()));
  }
}

TEST_CASE("unity analysis: block corner algebra has a proper unity") {
  Subalgebra corner = canonical_algebra(CanonicalSpec::parse("ZeroPattern:R3,C3", 3), Q());
  UnitySummary u = unity_summary(corner);
  CHECK(u.status == UnityStatus::unital_proper);
  REQUIRE(u.two_sided.has_value());
  CHECK(*u.two_sided == Mat::diag_idempotent(3, 2, Q()));
}

TEST_CASE("unity analysis: the canonical maximizer is one-sidedly lopsided") {
  Subalgebra w = canonical_algebra(CanonicalTag::w, 3, Q());
  UnitySummary u = unity_summary(w);
  CHECK(u.status == UnityStatus::nonunital);
  CHECK_FALSE(u.two_sided.has_value());
  CHECK(u.right.empty());
  REQUIRE_FALSE(u.left.empty());
  CHECK(u.left.parameters() == 1);
  // the particular left identity acts as identity from the left
  const Mat& e = *u.left.particular;
  for (const Mat& b : w.basis()) CHECK(e * b == b);
  // and the direction space is the E_12 line: e + t*E_12 all work
  CHECK(u.left.directions == Subspace::span(3, Q(), {el(3, 0, 1)}));
}

TEST_CASE("unity analysis: the full algebra contains the ambient identity") {
  Subalgebra full = canonical_algebra(CanonicalTag::full, 2, Q());
  UnitySummary u = unity_summary(full);
  CHECK(u.status == UnityStatus::contains_identity);
  REQUIRE(u.two_sided.has_value());
  CHECK(*u.two_sided == Mat::identity(2, Q()));
}

TEST_CASE("two sided identity shortcut agrees with the full analysis") {
  ToyRng rng(914);
  for (int t = 0; t < 25; ++t) {
    Subalgebra a = multiplicative_closure(random_span(3, 2, rng, 2));
    auto fast = two_sided_identity(a);
    auto full = unity_summary(a).two_sided;
    CHECK(fast.has_value() == full.has_value());
    if (fast && full) CHECK(*fast == *full);
  }
}

TEST_CASE("canonical dimensions match the closed formulas") {
  for (std::size_t n = 3; n <= 6; ++n) {
    CHECK(canonical_algebra(CanonicalTag::w, n, Q()).dim() == (n - 1) * (n - 2));
    CHECK(canonical_algebra(CanonicalTag::w_transpose, n, Q()).dim() == (n - 1) * (n - 2));
    CHECK(canonical_algebra(CanonicalTag::parabolic_p, n, Q()).dim() == n * n - n + 1);
    CHECK(canonical_algebra(CanonicalTag::omega_max_column, n, Q()).dim() == n * n - 2 * n + 3);
    CHECK(canonical_algebra(CanonicalTag::omega_max_row, n, Q()).dim() == n * n - 2 * n + 3);
  }
  CHECK(canonical_algebra(CanonicalTag::w, 4, Q()).dim() == 6);
  CHECK(canonical_algebra(CanonicalTag::parabolic_p, 3, Q()).dim() == 7);
}

TEST_CASE("the two maximal families coincide exactly at n = 3") {
  Subalgebra omc = canonical_algebra(CanonicalTag::omega_max_column, 3, Q());
  Subalgebra omr = canonical_algebra(CanonicalTag::omega_max_row, 3, Q());
  CHECK(omc == omr);
  // both equal the upper-triangular algebra
  Subalgebra ut = Subalgebra::certify(Subspace::span(
      3, Q(), {el(3, 0, 0), el(3, 0, 1), el(3, 0, 2), el(3, 1, 1), el(3, 1, 2), el(3, 2, 2)}));
  CHECK(omc == ut);
  CHECK(omc.dim() == 6);
  // and they separate from n = 4 on
  CHECK(canonical_algebra(CanonicalTag::omega_max_column, 4, Q()) !=
        canonical_algebra(CanonicalTag::omega_max_row, 4, Q()));
}

TEST_CASE("the maximizer stays nonunital across sizes and fields") {
  for (std::size_t n = 3; n <= 8; ++n) {
    for (const Field& f : {Field::rationals(), Field::prime(5), Field::prime(7)}) {
      Subalgebra w = canonical_algebra(CanonicalTag::w, n, f);
      CHECK(w.dim() == (n - 1) * (n - 2));
      CHECK_FALSE(two_sided_identity(w).has_value());
    }
  }
}

TEST_CASE("conjugating by the identity changes nothing") {
  Subalgebra p = canonical_algebra(CanonicalTag::parabolic_p, 3, Q());
  CHECK(conjugate_algebra(p, Mat::identity(3, Q())) == p);
}

TEST_CASE("the maximizer absorbs its defining shear") {
  Subalgebra w = canonical_algebra(CanonicalTag::w, 3, Q());
  Mat a = Mat::identity(3, Q()) + el(3, 2, 1);
  CHECK(conjugate_algebra(w, a) == w);
}

TEST_CASE("conjugating a line by a transposition moves the unit") {
  Mat swap(2, Q());
  swap.at(0, 1) = Scalar::one(Q());
  swap.at(1, 0) = Scalar::one(Q());
  Subalgebra line = Subalgebra::certify(Subspace::span(2, Q(), {el(2, 0, 0)}));
  Subalgebra moved = conjugate_algebra(line, swap);
  CHECK(moved.space() == Subspace::span(2, Q(), {el(2, 1, 1)}));
}

TEST_CASE("conjugation preserves dimension and unity status") {
  ToyRng rng(915);
  Rng lib_rng(99);
  for (int t = 0; t < 25; ++t) {
    Subalgebra a = multiplicative_closure(random_span(3, 2, rng, 2));
    Mat g = random_invertible(3, 3, lib_rng);
    Subalgebra moved = conjugate_algebra(a, g);
    CHECK(moved.dim() == a.dim());
    CHECK(unity_summary(moved).status == unity_summary(a).status);
  }
}

TEST_CASE("conjugation by a singular matrix is refused") {
  Subalgebra full = canonical_algebra(CanonicalTag::full, 2, Q());
  try {
    conjugate_algebra(full, mat_from({{1, 1}, {1, 1}}));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::singular_matrix);
  }
}

TEST_CASE("transposition swaps the two maximizer shapes") {
  Subalgebra w = canonical_algebra(CanonicalTag::w, 3, Q());
  Subalgebra wt = transpose_algebra(w);
  CHECK(wt.space() == Subspace::span(3, Q(), {el(3, 0, 0), el(3, 1, 0)}));
  CHECK(wt == canonical_algebra(CanonicalTag::w_transpose, 3, Q()));
  CHECK(transpose_algebra(wt) == w);
}

TEST_CASE("transpose of the parabolic zeroes the last column instead") {
  Subalgebra p = canonical_algebra(CanonicalTag::parabolic_p, 4, Q());
  Subalgebra pt = transpose_algebra(p);
  Subspace expect = canonical_algebra(CanonicalSpec::parse("ZeroPattern:C4", 4), Q())
                        .space()
                        .sum(Subspace::span(4, Q(), {el(4, 3, 3)}));
  CHECK(pt.space() == expect);
}

TEST_CASE("transposition preserves dimension and swaps identity sides") {
  ToyRng rng(916);
  for (int t = 0; t < 25; ++t) {
    Subalgebra a = multiplicative_closure(random_span(3, 2, rng, 2));
    Subalgebra at = transpose_algebra(a);
    CHECK(at.dim() == a.dim());
    UnitySummary ua = unity_summary(a);
    UnitySummary ut = unity_summary(at);
    CHECK(ua.left.empty() == ut.right.empty());
    CHECK(ua.right.empty() == ut.left.empty());
    if (!ua.left.empty()) CHECK(ua.left.parameters() == ut.right.parameters());
    CHECK(transpose_algebra(at) == a);
  }
}

TEST_CASE("idempotent compression of the parabolic keeps the corner block") {
  Subalgebra p = canonical_algebra(CanonicalTag::parabolic_p, 3, Q());
  Mat e = Mat::diag_idempotent(3, 2, Q());
  Subalgebra be = compress_by_idempotent(p, e, CompressMode::right_multiply);
  CHECK(be.dim() == 4);
  CHECK(be == canonical_algebra(CanonicalSpec::parse("ZeroPattern:R3,C3", 3), Q()));
}

TEST_CASE("compression by the identity and by zero are the two extremes") {
  Subalgebra p = canonical_algebra(CanonicalTag::parabolic_p, 3, Q());
  CHECK(compress_by_idempotent(p, Mat::identity(3, Q()), CompressMode::right_multiply) == p);
  CHECK(compress_by_idempotent(p, Mat(3, Q()), CompressMode::right_multiply) ==
        zero_algebra(3, Q()));
  CHECK(compress_by_idempotent(p, Mat(3, Q()), CompressMode::two_sided) == zero_algebra(3, Q()));
}

TEST_CASE("compression rejects non-idempotents") {
  Subalgebra p = canonical_algebra(CanonicalTag::parabolic_p, 3, Q());
  try {
    compress_by_idempotent(p, mat_from({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
                           CompressMode::right_multiply);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_idempotent);
  }
}

TEST_CASE("two sided compression pinches out a corner subalgebra") {
  // e a e for e = D_2 on the full 3x3 algebra is the block corner algebra
  Subalgebra full = canonical_algebra(CanonicalTag::full, 3, Q());
  Mat e = Mat::diag_idempotent(3, 2, Q());
  Subalgebra eae = compress_by_idempotent(full, e, CompressMode::two_sided);
  CHECK(eae == canonical_algebra(CanonicalSpec::parse("ZeroPattern:R3,C3", 3), Q()));
}

TEST_CASE("corner extraction drops the flat border") {
  Subalgebra w = canonical_algebra(CanonicalTag::w, 3, Q());
  Subalgebra l = corner_extract(w);
  CHECK(l.n() == 2);
  CHECK(l.space() == Subspace::span(2, Q(), {el(2, 0, 0), el(2, 0, 1)}));
  CHECK(l == canonical_algebra(CanonicalSpec::parse("ZeroPattern:R2", 2), Q()));

  Subalgebra corner = canonical_algebra(CanonicalSpec::parse("ZeroPattern:R3,C3", 3), Q());
  CHECK(corner_extract(corner) == canonical_algebra(CanonicalTag::full, 2, Q()));

  CHECK(corner_extract(zero_algebra(3, Q())) == zero_algebra(2, Q()));
}

TEST_CASE("corner extraction refuses support on the border") {
  Subalgebra p = canonical_algebra(CanonicalTag::parabolic_p, 3, Q());
  try {
    corner_extract(p);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_in_corner);
  }
}

TEST_CASE("corner embedding inverts extraction") {
  Subalgebra small = canonical_algebra(CanonicalTag::parabolic_p, 3, Q());
  Subalgebra big = corner_embed(small);
  CHECK(big.n() == 4);
  CHECK(big.dim() == small.dim());
  CHECK(corner_extract(big) == small);
}

TEST_CASE("anything properly containing the zero-row algebra contains the identity") {
  ToyRng rng(917);
  Rng lib_rng(7);
  for (std::size_t n = 3; n <= 4; ++n) {
    Subalgebra row = canonical_algebra(
        CanonicalSpec::parse("ZeroPattern:R" + std::to_string(n), n), Q());
    int grown = 0;
    for (int t = 0; t < 40 && grown < 10; ++t) {
      // adjoin a random matrix with a nonzero bottom row and close
      Mat x = random_matrix(n, 2, lib_rng, Q());
      x.at(n - 1, rng.next() % n) = Scalar::rational(1 + (long)(rng.next() % 3));
      std::vector<Mat> gens = row.basis();
      gens.push_back(x);
      Subalgebra b = multiplicative_closure(Subspace::span(n, Q(), gens));
      if (b == row) continue;
      ++grown;
      CHECK(b.contains(Mat::identity(n, Q())));
    }
    CHECK(grown >= 10);
  }
}
