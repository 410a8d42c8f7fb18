#pragma once

#include <stdexcept>
#include <string>

namespace subalg {

enum class errc {
  field_mismatch,
  ambient_mismatch,
  dimension_mismatch,
  singular_matrix,
  not_idempotent,
  wrong_rank,
  wrong_characteristic,
  certification_failed,
  not_in_corner,
  dimension_too_small,
  frame_violation,
  not_parabolic,
  not_max_nonunital,
  not_gamma_max,
  not_omega_max,
  not_in_omega,
  parse_error,
  invalid_spec,
  unknown_suite,
  invalid_params,
};

const char* errc_name(errc c);

// true for classifier rejections: the input is well-formed but provably not
// a member of the class being tested. CLI maps these to exit code 2.
bool is_rejection(errc c);

class error : public std::runtime_error {
public:
  error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) {
  throw error(c, msg);
}

}  // namespace subalg
