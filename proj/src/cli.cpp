#include "subalg/cli.hpp"

#include <cstdio>
#include <ostream>

#include "CLI11.hpp"
#include "subalg/io.hpp"

namespace subalg {

namespace {

struct Options {
  std::string input;
  std::string input2;
  std::string out_path;
  std::string spec_text;
  std::string field_text = "Q";
  std::string suite;
  std::size_t n = 3;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  std::int64_t bound = 3;
};

AlgebraFile load_file(const std::string& path) {
  return parse_algebra_text(read_text_file(path));
}

Subalgebra load_algebra(const AlgebraFile& f) {
  return Subalgebra::certify(span_of(f));
}

std::string family_desc(const AffineFamily& fam) {
  if (fam.empty()) return "none";
  if (fam.parameters() == 0) return "unique";
  return std::to_string(fam.parameters()) + "-parameter family";
}

void maybe_write(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) return;
  write_text_file(o.out_path, text);
  out << "wrote " << o.out_path << "\n";
}

int cmd_canon(const Options& o, std::ostream& out) {
  const Field f = Field::parse(o.field_text);
  const CanonicalSpec spec = CanonicalSpec::parse(o.spec_text, o.n);
  const Subalgebra a = canonical_algebra(spec, f);
  out << spec.str() << " over " << f.str() << ", n=" << o.n << ": dimension "
      << a.dim() << "\n";
  maybe_write(o, emit_algebra_text(algebra_file_from(a)), out);
  return 0;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const AlgebraFile f = load_file(o.input);
  const Subspace s = span_of(f);
  const Subalgebra c = multiplicative_closure(s);
  out << "closure dimension " << c.dim() << " from span of dimension "
      << s.dim() << "\n";
  maybe_write(o, emit_algebra_text(algebra_file_from(c)), out);
  return 0;
}

int cmd_dim(const Options& o, std::ostream& out) {
  const Subspace s = span_of(load_file(o.input));
  out << "span dimension " << s.dim() << "; multiplicatively closed: "
      << (Subalgebra::is_closed(s) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_intersect(const Options& o, std::ostream& out) {
  const Subalgebra a = load_algebra(load_file(o.input));
  const Subalgebra b = load_algebra(load_file(o.input2));
  const Subalgebra i = intersect(a, b);
  out << "intersection dimension " << i.dim() << "\n";
  maybe_write(o, emit_algebra_text(algebra_file_from(i)), out);
  return 0;
}

int cmd_sum(const Options& o, std::ostream& out) {
  const Subspace a = span_of(load_file(o.input));
  const Subspace b = span_of(load_file(o.input2));
  const Subspace s = a.sum(b);
  out << "sum dimension " << s.dim() << "; multiplicatively closed: "
      << (Subalgebra::is_closed(s) ? "yes" : "no") << "\n";
  maybe_write(o, emit_algebra_text(algebra_file_from(s)), out);
  return 0;
}

int cmd_unity(const Options& o, std::ostream& out) {
  const Subalgebra a = load_algebra(load_file(o.input));
  const UnitySummary u = unity_summary(a);
  out << unity_status_name(u.status)
      << "; left identities: " << family_desc(u.left)
      << "; right identities: " << family_desc(u.right) << "\n";
  return 0;
}

int cmd_radical(const Options& o, std::ostream& out) {
  const Subalgebra a = load_algebra(load_file(o.input));
  const Subspace j = jacobson_radical(a);
  out << "radical dimension " << j.dim() << "\n";
  maybe_write(o, emit_algebra_text(algebra_file_from(j)), out);
  return 0;
}

int cmd_idempotent_nf(const Options& o, std::ostream& out) {
  const AlgebraFile f = load_file(o.input);
  if (f.matrices.size() != 1)
    fail(errc::invalid_params, "the input file must hold exactly one matrix");
  const auto [conj, r] = idempotent_normal_form(f.matrices[0]);
  out << "idempotent of rank " << r
      << "; basis change maps it to the diagonal idempotent\n";
  maybe_write(o,
              emit_algebra_text(AlgebraFile{f.n, f.field, {conj.g()}}), out);
  return 0;
}

int classify_command(const Options& o, std::ostream& out,
                     ClassificationWitness (*classifier)(const Subalgebra&)) {
  const AlgebraFile f = load_file(o.input);
  const Subalgebra a = load_algebra(f);
  const ClassificationWitness w = classifier(a);
  out << "certified " << witness_kind_name(w.kind) << "; target "
      << w.target.str() << "; n=" << a.n() << "\n";
  maybe_write(o, emit_certificate_text(certificate_from(w, f)), out);
  return 0;
}

int cmd_gamma_check(const Options& o, std::ostream& out) {
  const Subalgebra u = load_algebra(load_file(o.input));
  const Subalgebra v = load_algebra(load_file(o.input2));
  const GammaCheckReport rep = gamma_bound_check(u, v);
  const std::size_t bound = (u.n() - 1) * (u.n() - 2);
  if (rep.is_gamma) {
    const char* verdict = rep.dim_n == bound ? "TIGHT"
                          : rep.bound_ok     ? "OK"
                                             : "VIOLATION";
    out << "in Γ, dim " << rep.dim_n << ", bound " << bound << ": " << verdict
        << "\n";
  } else {
    out << "not in Γ (needs two unital factors and a nonunital intersection)\n";
  }
  if (rep.trace) {
    out << "normalized by the proper unity of factor "
        << (rep.trace->factor_is_u ? 1 : 2)
        << "; moved factor inside the corner algebra: "
        << (rep.trace->corner_contained ? "yes" : "no") << "\n";
  }
  return rep.is_gamma && !rep.bound_ok ? 2 : 0;
}

// Suites skipped when running the whole battery at an out-of-range n.
std::string skip_reason(const std::string& id, const SuiteParams& p) {
  const bool rational = p.field.tag() == FieldTag::rationals;
  if ((id == "thm33" || id == "thm32") && p.n < 3) return "needs n >= 3";
  if (id != "lem21" && id != "lem23rem" && !rational)
    return "runs over the rationals only";
  return "";
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteParams params;
  params.n = o.n;
  params.trials = o.trials;
  params.bound = o.bound;
  params.seed = o.seed;
  params.field = Field::parse(o.field_text);
  if (!o.out_path.empty() && o.suite.empty())
    fail(errc::invalid_params, "--out needs --suite (one report per file)");
  const std::vector<std::string> ids =
      o.suite.empty() ? suite_ids() : std::vector<std::string>{o.suite};
  int code = 0;
  for (const auto& id : ids) {
    if (o.suite.empty()) {
      const std::string reason = skip_reason(id, params);
      if (!reason.empty()) {
        out << id << " n=" << params.n << ": SKIPPED (" << reason << ")\n";
        continue;
      }
    }
    const SuiteReport rep = run_suite(id, params);
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.2fs", rep.elapsed_seconds);
    out << rep.suite_id << " n=" << rep.n << " trials=" << rep.trials
        << " seed=" << rep.seed << ": " << (rep.passed() ? "PASS" : "FAIL")
        << " (attained_max " << rep.attained_max << ", violations "
        << rep.violations.size() << ") [" << elapsed << "]\n";
    for (const auto& v : rep.violations)
      out << "  trial " << v.trial << ": " << v.detail << "\n";
    if (!rep.passed()) code = 2;
    if (!o.suite.empty()) maybe_write(o, emit_report_text(rep), out);
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact arithmetic toolkit for subalgebras of n x n matrices"};
  app.require_subcommand(1);
  Options o;
  int code = 0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "write the structured result here");
  };
  const auto add_input = [&](CLI::App* sub, const char* name) {
    sub->add_option(name, o.input, "algebra file")
        ->required()
        ->check(CLI::ExistingFile);
  };
  const auto add_input2 = [&](CLI::App* sub, const char* name) {
    sub->add_option(name, o.input2, "algebra file")
        ->required()
        ->check(CLI::ExistingFile);
  };

  CLI::App* canon = app.add_subcommand("canon", "emit a canonical algebra");
  canon->add_option("--spec", o.spec_text, "canonical algebra name")->required();
  canon->add_option("--n", o.n, "matrix side")->check(CLI::PositiveNumber);
  canon->add_option("--field", o.field_text, "Q or Fp:<p>");
  add_common(canon);
  canon->callback([&] { code = cmd_canon(o, out); });

  CLI::App* closure =
      app.add_subcommand("closure", "multiplicative closure of a span");
  add_input(closure, "input");
  add_common(closure);
  closure->callback([&] { code = cmd_closure(o, out); });

  CLI::App* dim = app.add_subcommand("dim", "span dimension and closedness");
  add_input(dim, "input");
  dim->callback([&] { code = cmd_dim(o, out); });

  CLI::App* inter =
      app.add_subcommand("intersect", "intersection of two algebras");
  add_input(inter, "left");
  add_input2(inter, "right");
  add_common(inter);
  inter->callback([&] { code = cmd_intersect(o, out); });

  CLI::App* sum = app.add_subcommand("sum", "sum of two spans");
  add_input(sum, "left");
  add_input2(sum, "right");
  add_common(sum);
  sum->callback([&] { code = cmd_sum(o, out); });

  CLI::App* unity =
      app.add_subcommand("unity", "identity elements of an algebra");
  add_input(unity, "input");
  unity->callback([&] { code = cmd_unity(o, out); });

  CLI::App* radical =
      app.add_subcommand("radical", "Jacobson radical of an algebra");
  add_input(radical, "input");
  add_common(radical);
  radical->callback([&] { code = cmd_radical(o, out); });

  CLI::App* inf = app.add_subcommand(
      "idempotent-nf", "basis change taking an idempotent to diagonal form");
  add_input(inf, "input");
  add_common(inf);
  inf->callback([&] { code = cmd_idempotent_nf(o, out); });

  CLI::App* recp = app.add_subcommand(
      "recognize-parabolic", "certify a conjugate of a maximal parabolic");
  add_input(recp, "input");
  add_common(recp);
  recp->callback([&] { code = classify_command(o, out, recognize_parabolic); });

  CLI::App* clg = app.add_subcommand(
      "classify-gamma", "certify a maximum-dimension nonunital intersection");
  add_input(clg, "input");
  add_common(clg);
  clg->callback([&] { code = classify_command(o, out, classify_gamma_max); });

  CLI::App* clo = app.add_subcommand(
      "classify-omega", "certify a maximum-dimension member of the parabolic family");
  add_input(clo, "input");
  add_common(clo);
  clo->callback([&] { code = classify_command(o, out, classify_omega_max); });

  CLI::App* gch = app.add_subcommand(
      "gamma-check", "nonunital-intersection bound check for a pair");
  add_input(gch, "left");
  add_input2(gch, "right");
  gch->callback([&] { code = cmd_gamma_check(o, out); });

  CLI::App* verify =
      app.add_subcommand("verify", "run the randomized verification suites");
  verify->add_option("--suite", o.suite, "single suite to run");
  verify->add_option("--n", o.n, "matrix side")->check(CLI::PositiveNumber);
  verify->add_option("--trials", o.trials, "trial count")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "master seed");
  verify->add_option("--bound", o.bound, "entry bound for random matrices")
      ->check(CLI::PositiveNumber);
  verify->add_option("--field", o.field_text, "Q or Fp:<p>");
  add_common(verify);
  verify->callback([&] { code = cmd_verify(o, out); });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("subalg");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int c = app.exit(e, out, err);
    return c == 0 ? 0 : 1;
  } catch (const error& e) {
    err << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return is_rejection(e.code()) ? 2 : 1;
  }
  return code;
}

}  // namespace subalg
