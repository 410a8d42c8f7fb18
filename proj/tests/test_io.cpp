#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "subalg/io.hpp"

using namespace subalg;
using testsupport::Q;

namespace {

Mat el(std::size_t n, std::size_t i, std::size_t j) {  // 0-based
  return Mat::elementary(n, i, j, Q());
}

}  // namespace

TEST_CASE("algebra files parse exact entries") {
  std::string text = R"({"schema_version":1,"kind":"algebra","n":2,"field":"Q",
    "matrices":[[["1","0"],["0","0"]]]})";
  AlgebraFile f = parse_algebra_text(text);
  CHECK(f.n == 2);
  CHECK(f.field == Field::rationals());
  REQUIRE(f.matrices.size() == 1);
  CHECK(f.matrices[0] == el(2, 0, 0));
}

TEST_CASE("fraction entries are exact") {
  std::string text = R"({"schema_version":1,"kind":"algebra","n":1,"field":"Q",
    "matrices":[[["1/3"]]]})";
  AlgebraFile f = parse_algebra_text(text);
  CHECK(f.matrices[0].at(0, 0) == Scalar::rational(1, 3));
  CHECK(f.matrices[0].at(0, 0).rat() * 3 == 1);
}

TEST_CASE("malformed algebra files raise typed parse errors") {
  auto expect_parse_error = [](const std::string& text) {
    try {
      parse_algebra_text(text);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::parse_error);
    }
  };
  // ragged row
  expect_parse_error(R"({"schema_version":1,"kind":"algebra","n":2,"field":"Q",
    "matrices":[[["1","0"],["0"]]]})");
  // not json at all
  expect_parse_error("not json");
  // wrong kind marker
  expect_parse_error(R"({"schema_version":1,"kind":"certificate","n":1,"field":"Q",
    "matrices":[[["1"]]]})");
  // missing field
  expect_parse_error(R"({"schema_version":1,"kind":"algebra","n":1,
    "matrices":[[["1"]]]})");
  // unknown schema version
  expect_parse_error(R"({"schema_version":2,"kind":"algebra","n":1,"field":"Q",
    "matrices":[[["1"]]]})");
  // bad scalar entry
  expect_parse_error(R"({"schema_version":1,"kind":"algebra","n":1,"field":"Q",
    "matrices":[[["1.5"]]]})");
}

TEST_CASE("algebra emission round-trips across fields") {
  for (const Field& f : {Field::rationals(), Field::prime(5)}) {
    Subalgebra w = canonical_algebra(CanonicalTag::w, 3, f);
    AlgebraFile file = algebra_file_from(w);
    AlgebraFile back = parse_algebra_text(emit_algebra_text(file));
    CHECK(back.n == file.n);
    CHECK(back.field == file.field);
    CHECK(back.matrices == file.matrices);
    CHECK(Subalgebra::certify(span_of(back)) == w);
  }
}

TEST_CASE("input hashes are stable and content sensitive") {
  AlgebraFile a = algebra_file_from(canonical_algebra(CanonicalTag::w, 3, Q()));
  AlgebraFile b = algebra_file_from(canonical_algebra(CanonicalTag::w_transpose, 3, Q()));
  CHECK(input_hash(a) == input_hash(a));
  CHECK(input_hash(a) != input_hash(b));
  CHECK(input_hash(a).substr(0, 6) == "fnv1a:");
  CHECK(input_hash(a).size() == 6 + 16);
}

TEST_CASE("certificates serialize and re-verify") {
  Rng rng(3);
  Mat g0 = random_invertible(3, 2, rng);
  Subalgebra moved = conjugate_algebra(canonical_algebra(CanonicalTag::w, 3, Q()), g0);
  ClassificationWitness w = classify_gamma_max(moved);
  AlgebraFile input = algebra_file_from(moved);
  CertificateFile cert = certificate_from(w, input);
  CHECK(cert.verified);
  CHECK(cert.kind == WitnessKind::gamma_w);

  CertificateFile back = parse_certificate_text(emit_certificate_text(cert));
  CHECK(back.kind == cert.kind);
  CHECK(back.n == cert.n);
  CHECK(back.conjugator == cert.conjugator);
  CHECK(back.hash == cert.hash);
  CHECK(back.target.str() == cert.target.str());

  CHECK(reverify_certificate(input, back));
}

TEST_CASE("tampered certificates fail re-verification") {
  Subalgebra p = canonical_algebra(CanonicalTag::parabolic_p, 3, Q());
  ClassificationWitness w = recognize_parabolic(p);
  AlgebraFile input = algebra_file_from(p);
  CertificateFile cert = certificate_from(w, input);
  CHECK(reverify_certificate(input, cert));

  // a top-row shear would normalize this algebra, so tamper from below
  CertificateFile wrong_conj = cert;
  wrong_conj.conjugator.at(2, 0) = Scalar::rational(5);
  CHECK_FALSE(reverify_certificate(input, wrong_conj));

  CertificateFile singular = cert;
  for (std::size_t j = 0; j < 3; ++j) singular.conjugator.at(0, j) = Scalar::zero(Q());
  CHECK_FALSE(reverify_certificate(input, singular));

  CertificateFile wrong_hash = cert;
  wrong_hash.hash = "fnv1a:0000000000000000";
  CHECK_FALSE(reverify_certificate(input, wrong_hash));

  // certificate for one algebra presented with another input
  AlgebraFile other = algebra_file_from(canonical_algebra(CanonicalTag::w, 3, Q()));
  CHECK_FALSE(reverify_certificate(other, cert));
}

TEST_CASE("suite reports round-trip and omit elapsed time") {
  SuiteParams p;
  p.n = 3;
  p.trials = 30;
  p.seed = 5;
  SuiteReport r = run_suite("thm31", p);
  std::string text = emit_report_text(r);
  CHECK(text.find("elapsed") == std::string::npos);

  SuiteReport back = parse_report_text(text);
  CHECK(back.suite_id == r.suite_id);
  CHECK(back.n == r.n);
  CHECK(back.trials == r.trials);
  CHECK(back.seed == r.seed);
  CHECK(back.bound == r.bound);
  CHECK(back.field == r.field);
  CHECK(back.attained_max == r.attained_max);
  CHECK(back.histogram == r.histogram);
  CHECK(back.violations.size() == r.violations.size());
}

TEST_CASE("file helpers report missing paths as typed errors") {
  try {
    read_text_file("/nonexistent/definitely/missing.json");
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
  }
}
