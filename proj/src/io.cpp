#include "subalg/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace subalg {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::parse_error, e.what());
  }
}

void require_schema(const json& j, const std::string& kind) {
  if (!j.is_object()) fail(errc::parse_error, "top level must be an object");
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
      j["schema_version"].get<int>() != 1)
    fail(errc::parse_error, "schema_version must be the integer 1");
  if (!j.contains("kind") || !j["kind"].is_string() ||
      j["kind"].get<std::string>() != kind)
    fail(errc::parse_error, "expected kind '" + kind + "'");
}

std::size_t get_side(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
    fail(errc::parse_error, "n must be a positive integer");
  return j["n"].get<std::size_t>();
}

Field get_field(const json& j) {
  if (!j.contains("field") || !j["field"].is_string())
    fail(errc::parse_error, "field must be a string");
  return Field::parse(j["field"].get<std::string>());
}

Mat parse_grid(const json& rows, std::size_t n, const Field& f, const char* what) {
  if (!rows.is_array() || rows.size() != n)
    fail(errc::parse_error, std::string(what) + " must have exactly n rows");
  Mat m(n, f);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n)
      fail(errc::parse_error,
           std::string(what) + " row " + std::to_string(i + 1) +
               " must have exactly n entries");
    for (std::size_t j = 0; j < n; ++j) {
      if (!row[j].is_string())
        fail(errc::parse_error, "matrix entries must be strings");
      m.at(i, j) = Scalar::parse(row[j].get<std::string>(), f);
    }
  }
  return m;
}

json emit_grid(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.n(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

AlgebraFile algebra_file_from(const Subalgebra& a) {
  return AlgebraFile{a.n(), a.field(), a.basis()};
}

AlgebraFile algebra_file_from(const Subspace& s) {
  return AlgebraFile{s.n(), s.field(), s.basis()};
}

AlgebraFile parse_algebra_text(const std::string& text) {
  const json j = parse_json(text);
  require_schema(j, "algebra");
  const std::size_t n = get_side(j);
  const Field f = get_field(j);
  if (!j.contains("matrices") || !j["matrices"].is_array())
    fail(errc::parse_error, "matrices must be an array");
  std::vector<Mat> mats;
  mats.reserve(j["matrices"].size());
  for (const auto& grid : j["matrices"]) mats.push_back(parse_grid(grid, n, f, "matrix"));
  return AlgebraFile{n, f, std::move(mats)};
}

std::string emit_algebra_text(const AlgebraFile& f) {
  json j;
  j["schema_version"] = 1;
  j["kind"] = "algebra";
  j["n"] = f.n;
  j["field"] = f.field.str();
  json mats = json::array();
  for (const auto& m : f.matrices) mats.push_back(emit_grid(m));
  j["matrices"] = std::move(mats);
  return j.dump(2) + "\n";
}

Subspace span_of(const AlgebraFile& f) {
  for (const auto& m : f.matrices)
    if (m.n() != f.n) fail(errc::dimension_mismatch, "matrix side differs from n");
  return Subspace::span(f.n, f.field, f.matrices);
}

std::string input_hash(const AlgebraFile& f) {
  const std::string canon = emit_algebra_text(f);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a:") + buf;
}

CertificateFile certificate_from(const ClassificationWitness& w,
                                 const AlgebraFile& input) {
  return CertificateFile{w.kind,          input.n,     input.field, w.target,
                         w.conj.g(),      w.certified, input_hash(input)};
}

CertificateFile parse_certificate_text(const std::string& text) {
  const json j = parse_json(text);
  require_schema(j, "certificate");
  const std::size_t n = get_side(j);
  const Field f = get_field(j);
  if (!j.contains("witness") || !j["witness"].is_string())
    fail(errc::parse_error, "witness must be a string");
  const WitnessKind kind = witness_kind_parse(j["witness"].get<std::string>());
  if (!j.contains("target") || !j["target"].is_string())
    fail(errc::parse_error, "target must be a string");
  const CanonicalSpec target =
      CanonicalSpec::parse(j["target"].get<std::string>(), n);
  if (!j.contains("conjugator"))
    fail(errc::parse_error, "conjugator grid is required");
  Mat g = parse_grid(j["conjugator"], n, f, "conjugator");
  if (!j.contains("verified") || !j["verified"].is_boolean())
    fail(errc::parse_error, "verified must be a boolean");
  if (!j.contains("input_hash") || !j["input_hash"].is_string())
    fail(errc::parse_error, "input_hash must be a string");
  return CertificateFile{kind,
                         n,
                         f,
                         target,
                         std::move(g),
                         j["verified"].get<bool>(),
                         j["input_hash"].get<std::string>()};
}

std::string emit_certificate_text(const CertificateFile& c) {
  json j;
  j["schema_version"] = 1;
  j["kind"] = "certificate";
  j["witness"] = witness_kind_name(c.kind);
  j["n"] = c.n;
  j["field"] = c.field.str();
  j["target"] = c.target.str();
  j["conjugator"] = emit_grid(c.conjugator);
  j["verified"] = c.verified;
  j["input_hash"] = c.hash;
  return j.dump(2) + "\n";
}

bool reverify_certificate(const AlgebraFile& input, const CertificateFile& c) {
  if (input_hash(input) != c.hash) return false;
  if (input.n != c.n || !(input.field == c.field)) return false;
  try {
    Subalgebra a = Subalgebra::certify(span_of(input));
    Conjugator conj{c.conjugator};
    return conj.apply(a) == canonical_algebra(c.target, input.field);
  } catch (const error&) {
    // non-closed input, singular conjugator, invalid target: all just "no"
    return false;
  }
}

std::string emit_report_text(const SuiteReport& r) {
  json j;
  j["schema_version"] = 1;
  j["kind"] = "suite_report";
  j["suite"] = r.suite_id;
  j["n"] = r.n;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["bound"] = r.bound;
  j["field"] = r.field;
  j["attained_max"] = r.attained_max;
  json hist = json::object();
  for (const auto& [dim, count] : r.histogram) hist[std::to_string(dim)] = count;
  j["histogram"] = std::move(hist);
  json viols = json::array();
  for (const auto& v : r.violations) {
    json item;
    item["trial"] = v.trial;
    item["detail"] = v.detail;
    viols.push_back(std::move(item));
  }
  j["violations"] = std::move(viols);
  return j.dump(2) + "\n";
}

SuiteReport parse_report_text(const std::string& text) {
  const json j = parse_json(text);
  require_schema(j, "suite_report");
  SuiteReport r;
  if (!j.contains("suite") || !j["suite"].is_string())
    fail(errc::parse_error, "suite must be a string");
  r.suite_id = j["suite"].get<std::string>();
  r.n = get_side(j);
  if (!j.contains("trials") || !j["trials"].is_number_unsigned())
    fail(errc::parse_error, "trials must be a nonnegative integer");
  r.trials = j["trials"].get<std::size_t>();
  if (!j.contains("seed") || !j["seed"].is_number_unsigned())
    fail(errc::parse_error, "seed must be a nonnegative integer");
  r.seed = j["seed"].get<std::uint64_t>();
  if (!j.contains("bound") || !j["bound"].is_number_integer())
    fail(errc::parse_error, "bound must be an integer");
  r.bound = j["bound"].get<std::int64_t>();
  r.field = get_field(j).str();
  if (!j.contains("attained_max") || !j["attained_max"].is_number_unsigned())
    fail(errc::parse_error, "attained_max must be a nonnegative integer");
  r.attained_max = j["attained_max"].get<std::size_t>();
  if (!j.contains("histogram") || !j["histogram"].is_object())
    fail(errc::parse_error, "histogram must be an object");
  for (const auto& [key, value] : j["histogram"].items()) {
    std::size_t dim = 0;
    try {
      dim = std::stoul(key);
    } catch (const std::exception&) {
      fail(errc::parse_error, "histogram keys must be dimensions");
    }
    if (!value.is_number_unsigned())
      fail(errc::parse_error, "histogram counts must be nonnegative integers");
    r.histogram[dim] = value.get<std::size_t>();
  }
  if (!j.contains("violations") || !j["violations"].is_array())
    fail(errc::parse_error, "violations must be an array");
  for (const auto& item : j["violations"]) {
    if (!item.is_object() || !item.contains("trial") ||
        !item["trial"].is_number_unsigned() || !item.contains("detail") ||
        !item["detail"].is_string())
      fail(errc::parse_error, "violation entries need trial and detail");
    r.violations.push_back(
        Violation{item["trial"].get<std::size_t>(), item["detail"].get<std::string>()});
  }
  return r;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::parse_error, "cannot write '" + path + "'");
  out << text;
}

}  // namespace subalg
