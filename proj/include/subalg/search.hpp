#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subalg/algebra.hpp"
#include "subalg/rng.hpp"

namespace subalg {

// entries uniform over the integers in [-bound, bound], mapped into f
Mat random_matrix(std::size_t n, std::int64_t bound, Rng& rng, const Field& f);

// rejection-sampled nonsingular matrix; after 1000 rejections the bound
// widens, so termination is effectively certain
Mat random_invertible(std::size_t n, std::int64_t bound, Rng& rng,
                      const Field& f = Field::rationals());

// e = g D_r g^-1 for a random invertible g; e^2 = e with rank r by construction
Mat random_idempotent(std::size_t n, std::size_t r, Rng& rng,
                      const Field& f = Field::rationals());

// element of the span with coefficients uniform in [-bound, bound]
Mat random_span_element(const Subspace& s, std::int64_t bound, Rng& rng);

// multiplicative closure of k random generators; generators are drawn from
// ambient's span when given (the result then stays inside ambient)
Subalgebra random_subalgebra(std::size_t n, std::size_t k_generators,
                             std::int64_t bound, Rng& rng,
                             const std::optional<Subalgebra>& ambient = std::nullopt,
                             const Field& f = Field::rationals());

// closure of {e} u {e x_i e} for a random idempotent e of rank r; e is the
// two-sided unity of the result, equal to I exactly when r = n
Subalgebra random_unital_subalgebra(std::size_t n, std::size_t r, std::size_t k,
                                    std::int64_t bound, Rng& rng,
                                    const Field& f = Field::rationals());

struct SuiteParams {
  std::size_t n = 3;
  std::size_t trials = 200;
  std::int64_t bound = 3;
  std::uint64_t seed = 0;
  Field field = Field::rationals();
};

// A violation replays from (seed, trial) alone; detail is for humans.
struct Violation {
  std::size_t trial = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite_id;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t bound = 0;
  std::string field;
  std::vector<Violation> violations;
  std::map<std::size_t, std::size_t> histogram;  // tracked dimension -> count
  std::size_t attained_max = 0;
  double elapsed_seconds = 0.0;  // console-only; never serialized

  bool passed() const { return violations.empty(); }
};

// The randomized/deterministic verification suites. Each bound suite injects
// the known extremal construction as trial 0 and mixes structured inputs
// (conjugates of canonical algebras) with fully random ones 1:4.
//
//   thm31    pairs of unital subalgebras: nonunital intersections obey
//            dim <= (n-1)(n-2); injected pair attains it (n >= 3)
//   lem22    nonunital subalgebras obey dim <= n(n-1); injected zero-row
//            algebra attains it
//   lem21    deterministic: the corner algebra meets its shear conjugate in
//            exactly the canonical maximizer W (any field; trials ignored)
//   lem23rem closures properly containing the zero-row algebra contain I
//   thm33    subalgebras of the parabolic (other than it and the zero-row
//            algebra) obey dim <= n^2-2n+3; canonical maximizers round-trip;
//            instances with full compression obey the stricter n^2-2n+2
//   thm32    conjugates of the two canonical maximizers classify back with
//            matching kind; random algebras never mis-certify
//   prop42   conjugates of the parabolic and its transpose are recognized
//            with certified witnesses (kinds must match for n >= 3)
std::vector<std::string> suite_ids();
SuiteReport run_suite(const std::string& suite_id, const SuiteParams& params);

}  // namespace subalg
