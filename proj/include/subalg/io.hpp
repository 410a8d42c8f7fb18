#pragma once

#include <string>
#include <vector>

#include "subalg/canonical.hpp"
#include "subalg/search.hpp"
#include "subalg/structure.hpp"

namespace subalg {

// On-disk algebra: a list of n x n matrices over a named field, entries as
// exact integer or fraction strings. Whether the list spans a closed algebra
// is the consumer's concern.
struct AlgebraFile {
  std::size_t n;
  Field field;
  std::vector<Mat> matrices;
};

AlgebraFile algebra_file_from(const Subalgebra& a);
AlgebraFile algebra_file_from(const Subspace& s);

AlgebraFile parse_algebra_text(const std::string& text);
std::string emit_algebra_text(const AlgebraFile& f);

// Span of the file's matrices; parse + span + certify is the standard load
// path for commands that need a Subalgebra.
Subspace span_of(const AlgebraFile& f);

// FNV-1a over the canonical emission, rendered "fnv1a:<16 hex digits>".
// Canonicalizing first makes the hash stable under whitespace differences.
std::string input_hash(const AlgebraFile& f);

// Certificate: the witness conjugator g, certified to map the input algebra
// onto the named canonical target via x -> g x g^-1.
struct CertificateFile {
  WitnessKind kind;
  std::size_t n;
  Field field;
  CanonicalSpec target;
  Mat conjugator;
  bool verified;
  std::string hash;  // input_hash of the algebra file the witness is for
};

CertificateFile certificate_from(const ClassificationWitness& w,
                                 const AlgebraFile& input);
CertificateFile parse_certificate_text(const std::string& text);
std::string emit_certificate_text(const CertificateFile& c);

// Recomputes the conjugation from scratch: hash must match, the input must
// span a closed algebra, and conjugating must give the canonical target.
bool reverify_certificate(const AlgebraFile& input, const CertificateFile& c);

// Suite report serialization. elapsed_seconds is deliberately omitted so
// identical (suite, params) runs produce byte-identical files.
std::string emit_report_text(const SuiteReport& r);
SuiteReport parse_report_text(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace subalg
