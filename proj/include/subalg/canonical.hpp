#pragma once

#include <set>
#include <string>

#include "subalg/algebra.hpp"

namespace subalg {

enum class CanonicalTag {
  full,
  zero_pattern,
  parabolic_p,        // M[R_n] + K E_{n,n}
  parabolic_p_prime,  // M[C_1] + K E_{1,1}
  w,                  // M[R_n, R_{n-1}, C_n]
  w_transpose,        // M[R_n, C_{n-1}, C_n]
  omega_max_column,   // M E_{n,n} + M[R_n, C_1] + K E_{1,1}
  omega_max_row,      // M E_{n,n} + M[R_n, R_{n-1}] + K E_{n-1,n-1}
  diag_idempotent,    // span{D_r}
  elementary,         // span{E_{i,j}}
};

// Named construction target. Row/column indices are 1-based, as in the
// string grammar: "Full", "ZeroPattern:R3,C1", "ParabolicP", "ParabolicPPrime",
// "W", "WTranspose", "OmegaMaxColumn", "OmegaMaxRow", "DiagIdempotent:2",
// "Elementary:1,3".
struct CanonicalSpec {
  CanonicalTag tag = CanonicalTag::full;
  std::size_t n = 0;
  std::set<std::size_t> zero_rows;  // 1-based
  std::set<std::size_t> zero_cols;  // 1-based
  std::size_t r = 0;                // diag_idempotent
  std::size_t i = 0, j = 0;         // elementary, 1-based

  static CanonicalSpec parse(const std::string& text, std::size_t n);
  std::string str() const;
};

Subalgebra canonical_algebra(const CanonicalSpec& spec, const Field& f);
Subalgebra canonical_algebra(CanonicalTag tag, std::size_t n, const Field& f);

// Constructible for n >= 2; membership in the maximal-intersection family
// needs n >= 3, so callers that claim it must check this.
bool gamma_constructible_only(CanonicalTag tag, std::size_t n);

}  // namespace subalg
