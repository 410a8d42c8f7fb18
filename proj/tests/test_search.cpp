#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "subalg/io.hpp"
#include "subalg/search.hpp"

using namespace subalg;
using testsupport::Q;

TEST_CASE("generator streams are reproducible") {
  Rng a(12345), b(12345);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("split streams depend only on seed and index") {
  Rng parent(777);
  parent.next_u64();  // advancing the parent must not matter
  Rng child_after = parent.split(4);
  Rng child_fresh = Rng(777).split(4);
  for (int i = 0; i < 20; ++i) CHECK(child_after.next_u64() == child_fresh.next_u64());

  Rng other = Rng(777).split(5);
  bool differs = false;
  Rng again = Rng(777).split(4);
  for (int i = 0; i < 20; ++i)
    if (other.next_u64() != again.next_u64()) differs = true;
  CHECK(differs);
}

TEST_CASE("bounded draws stay in range and reject bad ranges") {
  Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    std::int64_t v = rng.uniform_int(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
  CHECK_THROWS_AS(rng.uniform_int(2, 1), error);
  CHECK_THROWS_AS(rng.uniform_index(0), error);
}

TEST_CASE("random matrices respect the entry bound deterministically") {
  Rng a(42), b(42);
  Mat m1 = random_matrix(3, 3, a, Q());
  Mat m2 = random_matrix(3, 3, b, Q());
  CHECK(m1 == m2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      mpq_class v = m1.at(i, j).rat();
      CHECK(v.get_den() == 1);
      CHECK(v.get_num() >= -3);
      CHECK(v.get_num() <= 3);
    }
}

TEST_CASE("random invertible matrices are nonsingular at every size") {
  Rng rng(42);
  Mat one = random_invertible(1, 1, rng);
  CHECK_FALSE(one.at(0, 0).is_zero());

  Rng r1(42), r2(42);
  CHECK(random_invertible(3, 3, r1) == random_invertible(3, 3, r2));

  for (int t = 0; t < 50; ++t) {
    Mat m = random_invertible(3, 2, rng);
    CHECK(rank_of(m) == 3);  // nonzero determinant
  }
}

TEST_CASE("random idempotents have the requested rank") {
  Rng rng(7);
  CHECK(random_idempotent(3, 0, rng) == Mat(3, Q()));
  CHECK(random_idempotent(3, 3, rng) == Mat::identity(3, Q()));
  for (std::size_t r = 0; r <= 4; ++r) {
    Mat e = random_idempotent(4, r, rng);
    CHECK(e * e == e);
    CHECK(rank_of(e) == r);
  }
}

TEST_CASE("random subalgebras honor a requested ambient") {
  Rng rng(11);
  CHECK(random_subalgebra(3, 0, 2, rng) == zero_algebra(3, Q()));

  Subalgebra p = canonical_algebra(CanonicalTag::parabolic_p, 3, Q());
  for (int t = 0; t < 20; ++t) {
    Subalgebra b = random_subalgebra(3, 2, 2, rng, p);
    CHECK(p.space().contains_all(b.space()));
  }

  Rng r1(5), r2(5);
  CHECK(random_subalgebra(3, 2, 2, r1).dim() == random_subalgebra(3, 2, 2, r2).dim());
}

TEST_CASE("random unital subalgebras carry their constructed unity") {
  Rng rng(13);
  Subalgebra scalars = random_unital_subalgebra(3, 3, 0, 2, rng);
  CHECK(scalars.dim() == 1);
  CHECK(scalars.contains(Mat::identity(3, Q())));

  for (int t = 0; t < 10; ++t) {
    std::size_t r = 1 + rng.uniform_index(3);
    Subalgebra u = random_unital_subalgebra(3, r, 2, 2, rng);
    auto e = two_sided_identity(u);
    REQUIRE(e.has_value());
    CHECK(*e * *e == *e);
    CHECK(rank_of(*e) == r);
    CHECK((r == 3) == (*e == Mat::identity(3, Q())));
  }
}

TEST_CASE("a proper-rank unity pins the algebra inside a moved corner block") {
  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    Subalgebra u = random_unital_subalgebra(3, 2, 2, 2, rng);
    Mat e = *two_sided_identity(u);
    auto [s, r] = idempotent_normal_form(e);
    CHECK(r == 2);
    // moving e onto D_2 moves the whole algebra into the corner block
    Subalgebra moved = conjugate_algebra(u, s.g());
    Subalgebra corner =
        canonical_algebra(CanonicalSpec::parse("ZeroPattern:R3,C3", 3), Q());
    CHECK(corner.space().contains_all(moved.space()));
  }
}

TEST_CASE("suite catalog and parameter validation") {
  auto ids = suite_ids();
  CHECK(ids.size() == 7);
  CHECK_THROWS_AS(run_suite("nope", SuiteParams{}), error);
  try {
    run_suite("nope", SuiteParams{});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_suite);
  }

  SuiteParams bad;
  bad.trials = 0;
  CHECK_THROWS_AS(run_suite("thm31", bad), error);

  SuiteParams small;
  small.n = 2;
  CHECK_THROWS_AS(run_suite("thm32", small), error);  // needs n >= 3

  SuiteParams fp;
  fp.field = Field::prime(5);
  CHECK_THROWS_AS(run_suite("thm31", fp), error);  // needs the rationals
}

TEST_CASE("intersection bound suite passes with a tight extremal trial") {
  SuiteParams p;
  p.n = 3;
  p.trials = 200;
  p.seed = 7;
  SuiteReport r = run_suite("thm31", p);
  CHECK(r.passed());
  CHECK(r.attained_max == 2);  // (n-1)(n-2)
  CHECK(r.suite_id == "thm31");
  CHECK(r.trials == 200);
  CHECK(r.histogram.count(2) == 1u);
}

TEST_CASE("nonunital dimension bound suite passes at n = 4") {
  SuiteParams p;
  p.n = 4;
  p.trials = 200;
  SuiteReport r = run_suite("lem22", p);
  CHECK(r.passed());
  CHECK(r.attained_max == 12);  // n(n-1)
  for (const auto& [dim, count] : r.histogram) CHECK(dim <= 12);
}

TEST_CASE("defining intersection suite replays over every field") {
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const Field& f : {Field::rationals(), Field::prime(5)}) {
      SuiteParams p;
      p.n = n;
      p.field = f;
      SuiteReport r = run_suite("lem21", p);
      CHECK(r.passed());
      CHECK(r.attained_max == (n - 1) * (n - 2));
    }
  }
}

TEST_CASE("identity adjunction suite passes over prime fields too") {
  SuiteParams p;
  p.n = 3;
  p.trials = 60;
  p.field = Field::prime(7);
  SuiteReport r = run_suite("lem23rem", p);
  CHECK(r.passed());
}

TEST_CASE("parabolic bound suite and classifier round-trip suites pass") {
  SuiteParams p;
  p.n = 3;
  p.trials = 80;
  p.seed = 19;
  for (const char* id : {"thm33", "thm32", "prop42"}) {
    SuiteReport r = run_suite(id, p);
    CHECK(r.passed());
  }
  SuiteParams p4 = p;
  p4.n = 4;
  p4.trials = 40;
  for (const char* id : {"thm33", "thm32", "prop42"}) {
    SuiteReport r = run_suite(id, p4);
    CHECK(r.passed());
  }
}

TEST_CASE("identical parameters reproduce byte-identical reports") {
  SuiteParams p;
  p.n = 3;
  p.trials = 50;
  p.seed = 99;
  for (const char* id : {"thm31", "lem22", "thm33"}) {
    SuiteReport a = run_suite(id, p);
    SuiteReport b = run_suite(id, p);
    CHECK(emit_report_text(a) == emit_report_text(b));
    CHECK(a.attained_max == b.attained_max);
    CHECK(a.histogram == b.histogram);
  }
}

TEST_CASE("different seeds explore different instances") {
  SuiteParams a, b;
  a.n = b.n = 3;
  a.trials = b.trials = 60;
  a.seed = 1;
  b.seed = 2;
  SuiteReport ra = run_suite("lem22", a);
  SuiteReport rb = run_suite("lem22", b);
  CHECK(ra.passed());
  CHECK(rb.passed());
  CHECK(emit_report_text(ra) != emit_report_text(rb));  // seed is serialized
}
