#include "gaspin/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "gaspin/error.hpp"
#include "gaspin/mv_text.hpp"
#include "gaspin/rotation.hpp"
#include "gaspin/spinor.hpp"

namespace gaspin::cli {
namespace {

using Record = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string signature = "1,3";
  std::string format = "text";
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;

  std::vector<double> b;
  int sign = 1;
  std::string branch = "regular";
  std::string s;
  std::vector<double> p;
  int count = 1;
  int factors = 3;
};

class Context {
 public:
  Context(const Options& opts, std::ostream& out, std::ostream& err)
      : opts_(opts), sig_(parse_signature(opts.signature)), out_(out), err_(err) {
    if (!(opts.tolerance > 0.0)) throw UsageError("--tolerance must be positive");
  }

  const Signature& sig() const { return sig_; }
  double tol() const { return opts_.tolerance; }
  bool structured() const { return opts_.format == "json"; }
  const Options& opts() const { return opts_; }
  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

  Record record(const char* command) const {
    Record r;
    r["command"] = command;
    r["signature"] = {sig_.p(), sig_.q()};
    return r;
  }

  void emit(const Record& r) { out_ << r.dump() << '\n'; }

  Bivector bivector_arg() const {
    Bivector b(sig_);
    if (opts_.b.size() != b.size()) {
      throw UsageError("--b needs " + std::to_string(b.size()) +
                       " comma-separated coefficients for " + sig_.to_string() +
                       ", got " + std::to_string(opts_.b.size()));
    }
    return Bivector(sig_, opts_.b);
  }

  Sign sign_arg() const {
    if (opts_.sign != 1 && opts_.sign != -1) throw UsageError("--sign must be +1 or -1");
    return opts_.sign < 0 ? Sign::Minus : Sign::Plus;
  }

  Multivector multivector_arg() const { return parse_multivector(opts_.s, sig_); }

 private:
  static Signature parse_signature(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--signature expects p,q");
    try {
      std::size_t used_p = 0, used_q = 0;
      const int p = std::stoi(text.substr(0, comma), &used_p);
      const int q = std::stoi(text.substr(comma + 1), &used_q);
      if (used_p != comma || used_q != text.size() - comma - 1) {
        throw UsageError("--signature expects p,q");
      }
      return Signature(p, q);
    } catch (const std::logic_error&) {
      throw UsageError("--signature expects p,q");
    }
  }

  const Options& opts_;
  Signature sig_;
  std::ostream& out_;
  std::ostream& err_;
};

Record optional_number(std::optional<double> x) {
  return x ? Record(*x) : Record(nullptr);
}

std::string text_number(std::optional<double> x) {
  return x ? format_number(*x) : "null";
}

std::string sign_text(Sign s) { return s == Sign::Plus ? "+1" : "-1"; }

std::string join(std::span<const double> xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += format_number(xs[i]);
  }
  return s;
}

Record matrix_record(const Matrix& m) {
  Record rows = Record::array();
  for (int i = 0; i < m.n(); ++i) {
    Record row = Record::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

void print_matrix(std::ostream& out, const Matrix& m) {
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      if (j) out << ' ';
      out << format_number(m(i, j));
    }
    out << '\n';
  }
}

SpinElement spin_from_b(Context& ctx) {
  const Bivector b = ctx.bivector_arg();
  const Sign sign = ctx.sign_arg();
  const std::string& branch = ctx.opts().branch;
  if (ctx.sig().n() != 4) return parametrize_low_dim(b, sign, ctx.tol());
  if (branch == "regular") return parametrize_regular(b, sign, ctx.tol());
  if (branch == "adjoint") return parametrize_adjoint(b, sign, ctx.tol());
  throw UsageError("--branch must be regular or adjoint");
}

std::string branch_name(Context& ctx) {
  return ctx.sig().n() == 4 ? ctx.opts().branch : "low_dim";
}

// ---------------------------------------------------------------------------

int cmd_exp(Context& ctx) {
  const Bivector b = ctx.bivector_arg();
  const Multivector e = ext_exp(b);
  const double beta = beta_of(b);
  std::optional<double> lambda, rho;
  if (ctx.sig().n() == 4) {
    lambda = lambda_of(b);
    rho = rho_of(b);
  }
  if (ctx.structured()) {
    Record r = ctx.record("exp");
    r["exp"] = serialize(e);
    r["lambda"] = optional_number(lambda);
    r["beta"] = beta;
    r["rho"] = optional_number(rho);
    ctx.emit(r);
  } else {
    ctx.out() << "exp: " << serialize(e) << '\n'
              << "lambda: " << text_number(lambda) << '\n'
              << "beta: " << format_number(beta) << '\n'
              << "rho: " << text_number(rho) << '\n';
  }
  return kExitOk;
}

int cmd_spin(Context& ctx) {
  const SpinElement s = spin_from_b(ctx);
  const double residual = spin_residual(s.value());
  const std::string branch = branch_name(ctx);
  if (ctx.structured()) {
    Record r = ctx.record("spin");
    r["branch"] = branch;
    r["s"] = serialize(s.value());
    r["residual"] = residual;
    ctx.emit(r);
  } else {
    ctx.out() << "branch: " << branch << '\n'
              << "S: " << serialize(s.value()) << '\n'
              << "residual: " << format_number(residual) << '\n';
  }
  return kExitOk;
}

int cmd_rotate(Context& ctx) {
  const bool has_s = !ctx.opts().s.empty();
  const bool has_b = !ctx.opts().b.empty();
  if (has_s == has_b) throw UsageError("rotate needs exactly one of --s or --b");
  const SpinElement s = has_s ? SpinElement::make(ctx.multivector_arg(), ctx.tol())
                              : spin_from_b(ctx);
  const OrthoMatrix p = spin_to_so(s, ctx.tol());
  const OrthoReport report = verify_orthogonal(p, ctx.tol());
  if (ctx.structured()) {
    Record r = ctx.record("rotate");
    r["s"] = serialize(s.value());
    r["matrix"] = matrix_record(p.entries);
    r["identity_component"] = report.identity_component;
    ctx.emit(r);
  } else {
    ctx.out() << "S: " << serialize(s.value()) << '\n' << "P:\n";
    print_matrix(ctx.out(), p.entries);
    ctx.out() << "identity_component: "
              << (report.identity_component ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_decompose(Context& ctx) {
  const SpinElement s = SpinElement::make(ctx.multivector_arg(), ctx.tol());
  std::string branch;
  std::optional<Bivector> b;
  Sign sign = Sign::Plus;
  std::optional<double> lambda, rho;

  if (ctx.sig().n() == 4) {
    const Parametrisation form =
        decompose(s, DecomposeOptions{.branch_threshold = 1e-8, .tolerance = ctx.tol()});
    if (const auto* reg = std::get_if<RegularForm>(&form)) {
      branch = "regular";
      b = reg->b;
      sign = reg->sign;
      lambda = reg->lambda;
    } else {
      const auto& adj = std::get<AdjointForm>(form);
      branch = "adjoint";
      b = adj.b;
      sign = adj.sign;
      rho = adj.rho;
    }
  } else {
    const LowDimForm form = decompose_low_dim(s, ctx.tol());
    branch = "low_dim";
    b = form.b;
    sign = form.sign;
  }

  if (ctx.structured()) {
    Record r = ctx.record("decompose");
    r["branch"] = branch;
    r["b"] = std::vector<double>(b->coeffs().begin(), b->coeffs().end());
    r["b_text"] = serialize(b->to_multivector());
    r["sign"] = static_cast<int>(sign);
    r["lambda"] = optional_number(lambda);
    r["rho"] = optional_number(rho);
    ctx.emit(r);
  } else {
    ctx.out() << "branch: " << branch << '\n'
              << "B: " << serialize(b->to_multivector()) << '\n'
              << "b: " << join(b->coeffs()) << '\n'
              << "sign: " << sign_text(sign) << '\n'
              << "lambda: " << text_number(lambda) << '\n'
              << "rho: " << text_number(rho) << '\n';
  }
  return kExitOk;
}

int cmd_verify(Context& ctx) {
  const bool has_s = !ctx.opts().s.empty();
  const bool has_p = !ctx.opts().p.empty();
  if (has_s == has_p) throw UsageError("verify needs exactly one of --s or --p");

  std::optional<double> spin_res, odd_res, vector_res;
  std::optional<OrthoReport> report;
  bool pass = true;

  if (has_s) {
    const Multivector u = ctx.multivector_arg();
    spin_res = spin_residual(u);
    double odd = 0.0;
    for (BladeMask m = 0; m < u.size(); ++m) {
      if (blade_grade(m) & 1) odd = std::max(odd, std::abs(u[m]));
    }
    odd_res = odd;
    pass = is_spin_element(u, ctx.tol());
    if (pass) {
      const SpinElement s = SpinElement::make(u, ctx.tol());
      vector_res = vector_residual(s);
      report = verify_orthogonal(spin_to_so(s, ctx.tol()), ctx.tol());
    }
  } else {
    const int n = ctx.sig().n();
    if (ctx.opts().p.size() != static_cast<std::size_t>(n * n)) {
      throw UsageError("--p needs " + std::to_string(n * n) +
                       " row-major entries, got " +
                       std::to_string(ctx.opts().p.size()));
    }
    Matrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = ctx.opts().p[static_cast<std::size_t>(i * n + j)];
    report = verify_orthogonal(OrthoMatrix{ctx.sig(), m}, ctx.tol());
  }
  if (report) pass = pass && report->passed;

  const char* kind = has_s ? "spin" : "matrix";
  if (ctx.structured()) {
    Record r = ctx.record("verify");
    r["kind"] = kind;
    r["spin_residual"] = optional_number(spin_res);
    r["odd_residual"] = optional_number(odd_res);
    r["vector_residual"] = optional_number(vector_res);
    r["metric_residual"] = optional_number(report ? std::optional(report->metric_residual) : std::nullopt);
    r["det"] = optional_number(report ? std::optional(report->det) : std::nullopt);
    r["det_residual"] = optional_number(report ? std::optional(report->det_residual) : std::nullopt);
    r["identity_component"] = report ? Record(report->identity_component) : Record(nullptr);
    r["pass"] = pass;
    ctx.emit(r);
  } else {
    auto& out = ctx.out();
    out << "kind: " << kind << '\n';
    if (has_s) {
      out << "spin_residual: " << text_number(spin_res) << '\n'
          << "odd_residual: " << text_number(odd_res) << '\n'
          << "vector_residual: " << text_number(vector_res) << '\n';
    }
    if (report) {
      out << "metric_residual: " << format_number(report->metric_residual) << '\n'
          << "det: " << format_number(report->det) << '\n'
          << "det_residual: " << format_number(report->det_residual) << '\n'
          << "identity_component: " << (report->identity_component ? "true" : "false")
          << '\n';
    }
    out << "verdict: " << (pass ? "pass" : "fail") << '\n';
  }
  return pass ? kExitOk : kExitFailed;
}

int cmd_sample(Context& ctx) {
  const Options& o = ctx.opts();
  if (o.count < 1) throw UsageError("--count must be at least 1");
  if (o.factors < 1) throw UsageError("--factors must be at least 1");
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < o.count; ++i) {
    const SpinElement s = random_spin_element(ctx.sig(), rng, o.factors);
    if (ctx.structured()) {
      Record r = ctx.record("sample");
      r["index"] = i;
      r["seed"] = o.seed;
      r["s"] = serialize(s.value());
      ctx.emit(r);
    } else {
      ctx.out() << serialize(s.value()) << '\n';
    }
  }
  return kExitOk;
}

bool is_usage_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSignature:
    case ErrorCode::SignatureMismatch:
    case ErrorCode::GradeOutOfRange:
    case ErrorCode::DimensionUnsupported:
    case ErrorCode::InvalidArgument:
    case ErrorCode::ParseError:
      return true;
    default:
      return false;
  }
}

void report_error(std::ostream& out, std::ostream& err, bool structured,
                  const std::string& command, std::string_view code,
                  const std::string& message) {
  if (structured) {
    Record r;
    r["command"] = command;
    r["error"] = {{"code", code}, {"message", message}};
    out << r.dump() << '\n';
  } else {
    err << "error [" << code << "]: " << message << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Spin group parametrisations in real Clifford algebras", "gaspin"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--signature", o.signature, "p,q (default 1,3)");
  app.add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tolerance", o.tolerance, "absolute tolerance (default 1e-10)");
  app.add_option("--seed", o.seed, "random seed for sample");

  const auto add_b = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--b", o.b, "bivector coefficients b12,b13,...")
                    ->delimiter(',');
    if (required) opt->required();
  };
  const auto add_sign_branch = [&](CLI::App* sub) {
    sub->add_option("--sign", o.sign, "+1 or -1");
    sub->add_option("--branch", o.branch, "regular or adjoint (n = 4)")
        ->check(CLI::IsMember({"regular", "adjoint"}));
  };

  auto* exp = app.add_subcommand("exp", "exterior exponent of B with lambda, beta, rho");
  add_b(exp, true);

  auto* spin = app.add_subcommand("spin", "spin element from B and a sign");
  add_b(spin, true);
  add_sign_branch(spin);

  auto* rotate = app.add_subcommand("rotate", "SO(p,q) matrix of a spin element");
  rotate->add_option("--s", o.s, "spin element in multivector text form");
  add_b(rotate, false);
  add_sign_branch(rotate);

  auto* decomp = app.add_subcommand("decompose", "branch, B, sign of a spin element");
  decomp->add_option("--s", o.s, "spin element in multivector text form")->required();

  auto* verify = app.add_subcommand("verify", "check a spin element or a matrix");
  verify->add_option("--s", o.s, "spin element in multivector text form");
  verify->add_option("--p", o.p, "matrix entries, row-major")->delimiter(',');

  auto* sample = app.add_subcommand("sample", "seeded random spin elements");
  sample->add_option("--count", o.count, "number of elements");
  sample->add_option("--factors", o.factors, "random factors per element");

  std::vector<const char*> argv{"gaspin"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  const bool structured = o.format == "json";
  try {
    Context ctx(o, out, err);
    if (chosen == exp) return cmd_exp(ctx);
    if (chosen == spin) return cmd_spin(ctx);
    if (chosen == rotate) return cmd_rotate(ctx);
    if (chosen == decomp) return cmd_decompose(ctx);
    if (chosen == verify) return cmd_verify(ctx);
    return cmd_sample(ctx);
  } catch (const UsageError& e) {
    report_error(out, err, structured, command, "UsageError", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    report_error(out, err, structured, command, error_code_name(e.code()), e.what());
    return is_usage_code(e.code()) ? kExitUsage : kExitFailed;
  }
}

}  // namespace gaspin::cli
