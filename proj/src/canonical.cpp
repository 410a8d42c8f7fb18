#include "subalg/canonical.hpp"

#include <sstream>

namespace subalg {

namespace {

using PosSet = std::set<std::pair<std::size_t, std::size_t>>;  // 0-based

// Matrix-unit support patterns: closed iff (i,j),(j,l) in S implies (i,l) in S.
void check_pattern_closed(const PosSet& s) {
  for (const auto& [i, j] : s)
    for (const auto& [k, l] : s)
      if (j == k && !s.count({i, l}))
        fail(errc::certification_failed, "support pattern is not closed");
}

Subalgebra pattern_algebra(std::size_t n, const PosSet& s, const Field& f,
                           std::size_t expect_dim) {
  check_pattern_closed(s);
  if (s.size() != expect_dim)
    fail(errc::certification_failed, "pattern dimension mismatch");
  std::vector<Mat> basis;
  basis.reserve(s.size());
  for (const auto& [i, j] : s) basis.push_back(Mat::elementary(n, i, j, f));
  return Subalgebra::certify(Subspace::span(n, f, basis));
}

std::size_t parse_index(const std::string& tok, std::size_t n, const std::string& what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    fail(errc::invalid_spec, "bad " + what + " '" + tok + "'");
  const std::size_t v = std::stoull(tok);
  if (v < 1 || v > n)
    fail(errc::invalid_spec, what + " " + tok + " out of range 1.." + std::to_string(n));
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

bool gamma_constructible_only(CanonicalTag tag, std::size_t n) {
  return (tag == CanonicalTag::w || tag == CanonicalTag::w_transpose) && n < 3;
}

CanonicalSpec CanonicalSpec::parse(const std::string& text, std::size_t n) {
  CanonicalSpec spec;
  spec.n = n;
  const auto colon = text.find(':');
  const std::string head = colon == std::string::npos ? text : text.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto no_args = [&]() {
    if (!args.empty()) fail(errc::invalid_spec, head + " takes no arguments");
  };
  if (head == "Full") {
    spec.tag = CanonicalTag::full;
    no_args();
  } else if (head == "ZeroPattern") {
    spec.tag = CanonicalTag::zero_pattern;
    if (args.empty()) fail(errc::invalid_spec, "ZeroPattern needs R/C arguments");
    for (const auto& tok : split(args, ',')) {
      if (tok.size() < 2 || (tok[0] != 'R' && tok[0] != 'C'))
        fail(errc::invalid_spec, "bad ZeroPattern item '" + tok + "'");
      const std::size_t idx = parse_index(tok.substr(1), n, "index");
      (tok[0] == 'R' ? spec.zero_rows : spec.zero_cols).insert(idx);
    }
  } else if (head == "ParabolicP") {
    spec.tag = CanonicalTag::parabolic_p;
    no_args();
  } else if (head == "ParabolicPPrime") {
    spec.tag = CanonicalTag::parabolic_p_prime;
    no_args();
  } else if (head == "W") {
    spec.tag = CanonicalTag::w;
    no_args();
  } else if (head == "WTranspose") {
    spec.tag = CanonicalTag::w_transpose;
    no_args();
  } else if (head == "OmegaMaxColumn") {
    spec.tag = CanonicalTag::omega_max_column;
    no_args();
  } else if (head == "OmegaMaxRow") {
    spec.tag = CanonicalTag::omega_max_row;
    no_args();
  } else if (head == "DiagIdempotent") {
    spec.tag = CanonicalTag::diag_idempotent;
    if (args.empty() || args.find_first_not_of("0123456789") != std::string::npos)
      fail(errc::invalid_spec, "DiagIdempotent needs a rank argument");
    spec.r = std::stoull(args);
    if (spec.r > n) fail(errc::invalid_spec, "DiagIdempotent rank out of range");
  } else if (head == "Elementary") {
    spec.tag = CanonicalTag::elementary;
    const auto toks = split(args, ',');
    if (toks.size() != 2) fail(errc::invalid_spec, "Elementary needs i,j");
    spec.i = parse_index(toks[0], n, "row index");
    spec.j = parse_index(toks[1], n, "column index");
  } else {
    fail(errc::invalid_spec, "unknown canonical spec '" + text + "'");
  }
  return spec;
}

std::string CanonicalSpec::str() const {
  switch (tag) {
    case CanonicalTag::full: return "Full";
    case CanonicalTag::zero_pattern: {
      std::ostringstream os;
      os << "ZeroPattern:";
      bool first = true;
      for (auto r : zero_rows) {
        if (!first) os << ",";
        os << "R" << r;
        first = false;
      }
      for (auto c : zero_cols) {
        if (!first) os << ",";
        os << "C" << c;
        first = false;
      }
      return os.str();
    }
    case CanonicalTag::parabolic_p: return "ParabolicP";
    case CanonicalTag::parabolic_p_prime: return "ParabolicPPrime";
    case CanonicalTag::w: return "W";
    case CanonicalTag::w_transpose: return "WTranspose";
    case CanonicalTag::omega_max_column: return "OmegaMaxColumn";
    case CanonicalTag::omega_max_row: return "OmegaMaxRow";
    case CanonicalTag::diag_idempotent: return "DiagIdempotent:" + std::to_string(r);
    case CanonicalTag::elementary:
      return "Elementary:" + std::to_string(i) + "," + std::to_string(j);
  }
  return "?";
}

Subalgebra canonical_algebra(const CanonicalSpec& spec, const Field& f) {
  const std::size_t n = spec.n;
  if (n == 0) fail(errc::invalid_spec, "canonical algebra needs n >= 1");
  PosSet s;
  switch (spec.tag) {
    case CanonicalTag::full:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.insert({i, j});
      return pattern_algebra(n, s, f, n * n);
    case CanonicalTag::zero_pattern: {
      for (std::size_t i = 0; i < n; ++i) {
        if (spec.zero_rows.count(i + 1)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (spec.zero_cols.count(j + 1)) continue;
          s.insert({i, j});
        }
      }
      for (auto r : spec.zero_rows)
        if (r < 1 || r > n) fail(errc::invalid_spec, "zero row out of range");
      for (auto c : spec.zero_cols)
        if (c < 1 || c > n) fail(errc::invalid_spec, "zero column out of range");
      const std::size_t d =
          (n - spec.zero_rows.size()) * (n - spec.zero_cols.size());
      return pattern_algebra(n, s, f, d);
    }
    case CanonicalTag::parabolic_p:
      for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.insert({i, j});
      s.insert({n - 1, n - 1});
      return pattern_algebra(n, s, f, n * n - n + 1);
    case CanonicalTag::parabolic_p_prime:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) s.insert({i, j});
      s.insert({0, 0});
      return pattern_algebra(n, s, f, n * n - n + 1);
    case CanonicalTag::w:
      if (n < 2) fail(errc::invalid_spec, "W needs n >= 2");
      for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) s.insert({i, j});
      return pattern_algebra(n, s, f, (n - 1) * (n - 2));
    case CanonicalTag::w_transpose:
      if (n < 2) fail(errc::invalid_spec, "WTranspose needs n >= 2");
      for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 2 < n; ++j) s.insert({i, j});
      return pattern_algebra(n, s, f, (n - 1) * (n - 2));
    case CanonicalTag::omega_max_column:
      if (n < 2) fail(errc::invalid_spec, "OmegaMaxColumn needs n >= 2");
      for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 1; j < n; ++j) s.insert({i, j});
      for (std::size_t i = 0; i < n; ++i) s.insert({i, n - 1});
      s.insert({0, 0});
      return pattern_algebra(n, s, f, n * n - 2 * n + 3);
    case CanonicalTag::omega_max_row:
      if (n < 2) fail(errc::invalid_spec, "OmegaMaxRow needs n >= 2");
      for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.insert({i, j});
      for (std::size_t i = 0; i < n; ++i) s.insert({i, n - 1});
      s.insert({n - 2, n - 2});
      return pattern_algebra(n, s, f, n * n - 2 * n + 3);
    case CanonicalTag::diag_idempotent: {
      if (spec.r > n) fail(errc::invalid_spec, "DiagIdempotent rank out of range");
      std::vector<Mat> basis{Mat::diag_idempotent(n, spec.r, f)};
      return Subalgebra::certify(Subspace::span(n, f, basis));
    }
    case CanonicalTag::elementary: {
      std::vector<Mat> basis{Mat::elementary(n, spec.i - 1, spec.j - 1, f)};
      return Subalgebra::certify(Subspace::span(n, f, basis));
    }
  }
  fail(errc::invalid_spec, "unhandled canonical tag");
}

Subalgebra canonical_algebra(CanonicalTag tag, std::size_t n, const Field& f) {
  CanonicalSpec spec;
  spec.tag = tag;
  spec.n = n;
  return canonical_algebra(spec, f);
}

}  // namespace subalg
