#pragma once

#include "subalg/algebra.hpp"
#include "subalg/canonical.hpp"

namespace subalg {

// Invertible change of basis with cached inverse.
class Conjugator {
public:
  explicit Conjugator(Mat g);          // singular_matrix if not invertible
  Conjugator(Mat g, Mat g_inv);        // trusted pair, verified g * g_inv = I
  static Conjugator identity(std::size_t n, const Field& f);

  const Mat& g() const { return g_; }
  const Mat& g_inv() const { return g_inv_; }
  std::size_t n() const { return g_.n(); }

  Mat apply(const Mat& x) const { return g_ * x * g_inv_; }  // g x g^-1
  Subspace apply(const Subspace& s) const;
  Subalgebra apply(const Subalgebra& a) const;

  Conjugator inverse() const { return Conjugator(g_inv_, g_); }
  // (other . this): apply this first, then other.
  Conjugator after(const Conjugator& first) const;

private:
  Mat g_;
  Mat g_inv_;
};

struct RankOneFactor {
  Vec y;     // column profile, first nonzero entry scaled to 1
  Covec mu;  // row profile; x = y * mu exactly
};

// Factor a rank-one matrix; wrong_rank otherwise.
RankOneFactor rank_one_factor(const Mat& x);

// For idempotent e: S whose columns are an image basis followed by a kernel
// basis, so S^-1 e S = D_rank(e). Returns (S, rank). If e is already some
// D_r the change of basis is the identity.
std::pair<Conjugator, std::size_t> idempotent_normal_form(const Mat& e);

// Jacobson radical over the rationals via the trace-form kernel
// {x : trace(x y) = 0 for all y}. The result is certified a posteriori:
// two-sided ideal and nilpotent. Prime fields are refused.
Subspace jacobson_radical(const Subalgebra& a);

enum class FrameCase { common_functional, common_vector };

// For a square-zero space j of rank-one elements with dim j = n-1:
// a conjugator g with g j g^-1 = span{E_{i,n} : i < n} (common functional,
// tried first) or span{E_{n,i} : i < n} (common vector).
std::pair<FrameCase, Conjugator> radical_frame(const Subspace& j);

enum class WitnessKind {
  gamma_w,
  gamma_w_transpose,
  row_algebra,
  column_algebra,
  parabolic_p,
  parabolic_p_transpose,
  omega_max_column,
  omega_max_row,
};

const char* witness_kind_name(WitnessKind k);
WitnessKind witness_kind_parse(const std::string& s);

// Certified classification: conj.apply maps the input exactly onto the
// canonical algebra described by target.
struct ClassificationWitness {
  WitnessKind kind;
  Conjugator conj;
  CanonicalSpec target;
  bool certified;
};

// dim l = n^2-n+1 over Q. Radical of dim n-1, frame, then exact comparison
// with the canonical parabolic (or, after the fixed reversal permutation,
// with its opposite form).
ClassificationWitness recognize_parabolic(const Subalgebra& l);

// Nonunital of dim n(n-1): joint image of dimension n-1 sends it onto the
// zero-bottom-row algebra; otherwise the transpose route is tried.
ClassificationWitness recognize_max_nonunital(const Subalgebra& l);

// Nonunital of dim (n-1)(n-2), n >= 3: joint image/kernel signature builds
// the frame onto W, with a transpose retry for the W^T class.
ClassificationWitness classify_gamma_max(const Subalgebra& nn);

// Proper subalgebra of the parabolic, distinct from the zero-bottom-row
// algebra, of dim n^2-2n+3: peel the last column, recognize the corner
// parabolic, and certify against the two canonical maximizers in fixed order.
ClassificationWitness classify_omega_max(const Subalgebra& b);

struct GammaCheckTrace {
  Mat s;             // basis change from the proper unity of one factor
  bool factor_is_u;  // which factor supplied the unity
  // the triple conjugated by s: {s^-1 x s} for each of u, v, u cap v
  Subalgebra moved_u;
  Subalgebra moved_v;
  Subalgebra moved_inter;
  bool corner_contained;  // the moved unity-bearing factor lies in the corner
};

struct GammaCheckReport {
  bool is_gamma;      // both factors unital, intersection nonunital
  std::size_t dim_n;  // dimension of the intersection
  bool bound_ok;      // dim_n <= (n-1)(n-2) whenever is_gamma
  std::optional<GammaCheckTrace> trace;
};

GammaCheckReport gamma_bound_check(const Subalgebra& u, const Subalgebra& v);

// Joint image (sum of column spaces) and joint kernel of a basis.
VecSpace joint_image(const Subalgebra& a);
VecSpace joint_kernel(const Subalgebra& a);

}  // namespace subalg
