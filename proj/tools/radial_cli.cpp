// radial command-line front end. Links only the C API.
//
// Exit codes: 0 all assertions held, 1 an assertion failed, 2 bad input or
// configuration.

#include <radial/radial.h>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string spec;
  int k = 1;
  int n = 3;
  int n_max = 8;
  int l_max = 6;
  int ab_max = 2;
  int len_max = 3;
  std::string mode = "both";
  std::string format = "csv";
  std::string out;
  std::optional<std::string> x, y, a, b;
  bool exploratory = false;
};

struct SpecDeleter {
  void operator()(radial_spec* s) const { radial_spec_free(s); }
};
struct ReportDeleter {
  void operator()(radial_report* r) const { radial_report_free(r); }
};
using SpecHandle = std::unique_ptr<radial_spec, SpecDeleter>;
using ReportHandle = std::unique_ptr<radial_report, ReportDeleter>;

struct CliError {
  int code;
  std::string message;
};

void check(radial_status status) {
  if (status == RADIAL_OK) return;
  const int code = (status == RADIAL_ERR_INPUT || status == RADIAL_ERR_PRECONDITION) ? kExitInput : kExitFail;
  throw CliError{code, radial_last_error()};
}

SpecHandle load(const Options& o) {
  if (o.spec.empty()) throw CliError{kExitInput, "--spec is required"};
  radial_spec* raw = nullptr;
  check(radial_spec_load(o.spec.c_str(), &raw));
  return SpecHandle(raw);
}

const char* opt(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

radial_format format_of(const std::string& name) {
  if (name == "csv") return RADIAL_FORMAT_CSV;
  if (name == "json") return RADIAL_FORMAT_JSON;
  if (name == "text") return RADIAL_FORMAT_TEXT;
  throw CliError{kExitInput, "unknown --format '" + name + "' (expected csv, json or text)"};
}

radial_mode mode_of(const std::string& name) {
  if (name == "both") return RADIAL_MODE_BOTH;
  if (name == "plain") return RADIAL_MODE_PLAIN;
  if (name == "reduced" || name == "reduced_concat") return RADIAL_MODE_REDUCED_CONCAT;
  throw CliError{kExitInput, "unknown --mode '" + name + "' (expected reduced, plain or both)"};
}

// Relative --out paths land under $RADIAL_OUTPUT_DIR when it is set.
std::filesystem::path output_path(const std::string& out) {
  std::filesystem::path path(out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("RADIAL_OUTPUT_DIR"); dir && *dir) path = std::filesystem::path(dir) / path;
  }
  return path;
}

int emit(const Options& o, radial_report* raw) {
  ReportHandle report(raw);
  const radial_format fmt = format_of(o.format);
  char* text = nullptr;
  check(radial_report_render(report.get(), fmt, &text));
  std::unique_ptr<char, decltype(&radial_string_free)> owned(text, &radial_string_free);
  if (o.out.empty() || o.out == "-") {
    std::fputs(text, stdout);
  } else {
    const auto path = output_path(o.out);
    if (path.has_parent_path()) {
      std::error_code ec;
      std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw CliError{kExitInput, "cannot open output file " + path.string()};
    file << text;
    if (!file.flush()) throw CliError{kExitInput, "failed writing " + path.string()};
  }
  const bool passed = radial_report_passed(report.get()) != 0;
  if (!passed && !(o.out.empty() || o.out == "-")) std::fprintf(stderr, "radial: assertion failures recorded in %s\n", o.out.c_str());
  return passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact computations in free products of finite groups and free groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(radial_version()));

  auto common = [&](CLI::App* sub, bool needs_spec = true) {
    auto* s = sub->add_option("--spec", o.spec, "fp:MxP, free:N, inline JSON, or a spec file path");
    if (needs_spec) s->required();
    sub->add_option("--format", o.format, "csv, json or text")->capture_default_str();
    sub->add_option("--out", o.out, "output file (relative paths use $RADIAL_OUTPUT_DIR); stdout by default");
  };

  auto* validate = app.add_subcommand("validate", "check a group spec and its Cayley tables");
  common(validate);

  auto* enumerate = app.add_subcommand("enumerate", "list reduced words of one length");
  common(enumerate);
  enumerate->add_option("--n", o.n, "word length")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "recurrences, norms and orthogonality of the radial elements");
  common(verify);
  verify->add_option("--k", o.k, "tensor rank")->capture_default_str();
  verify->add_option("--n-max", o.n_max, "largest length")->capture_default_str();

  auto* defects = app.add_subcommand("defects", "defect series of a pair of tuples");
  common(defects);
  defects->add_option("--k", o.k, "tensor rank")->capture_default_str();
  defects->add_option("--n-max", o.n_max, "largest length")->capture_default_str();
  defects->add_option("--x", o.x, "tuple, or a single word repeated k times")->required();
  defects->add_option("--y", o.y, "tuple, or a single word repeated k times")->required();

  auto* conjugacy = app.add_subcommand("conjugacy", "solution counts of x a = b x by length");
  common(conjugacy);
  conjugacy->add_option("--a", o.a, "word a (omit a and b to sweep)");
  conjugacy->add_option("--b", o.b, "word b");
  conjugacy->add_option("--mode", o.mode, "reduced, plain or both")->capture_default_str();
  conjugacy->add_option("--l-max", o.l_max, "largest solution length")->capture_default_str();
  conjugacy->add_option("--ab-max", o.ab_max, "largest |a|, |b| in a sweep")->capture_default_str();

  auto* nonzero = app.add_subcommand("nonzero-check", "expectation of x is nonzero iff all components are equal");
  common(nonzero);
  nonzero->add_option("--k", o.k, "tensor rank (sweeps ranks 1..k)")->capture_default_str();
  nonzero->add_option("--x", o.x, "single tuple; omit to sweep");
  nonzero->add_option("--len-max", o.len_max, "largest component length in a sweep")->capture_default_str();

  auto* k0 = app.add_subcommand("k0-check", "rank reduction for constant tuples");
  common(k0);
  k0->add_option("--k", o.k, "tensor rank")->capture_default_str();
  k0->add_option("--n-max", o.n_max, "largest length")->capture_default_str();
  k0->add_option("--x", o.x, "word x (omit x and y to sweep length-2 pairs)");
  k0->add_option("--y", o.y, "word y");
  k0->add_flag("--exploratory", o.exploratory, "also report rows outside the hypotheses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    format_of(o.format);
    if (validate->parsed()) {
      radial_report* r = nullptr;
      check(radial_validate(o.spec.c_str(), &r));
      return emit(o, r);
    }
    const SpecHandle spec = load(o);
    radial_report* r = nullptr;
    if (enumerate->parsed()) {
      check(radial_run_enumerate(spec.get(), o.n, &r));
    } else if (verify->parsed()) {
      check(radial_run_verify(spec.get(), o.k, o.n_max, &r));
    } else if (defects->parsed()) {
      check(radial_run_defects(spec.get(), o.k, opt(o.x), opt(o.y), o.n_max, &r));
    } else if (conjugacy->parsed()) {
      check(radial_run_conjugacy(spec.get(), opt(o.a), opt(o.b), mode_of(o.mode), o.l_max, o.ab_max, &r));
    } else if (nonzero->parsed()) {
      check(radial_run_nonzero_check(spec.get(), o.k, opt(o.x), o.len_max, &r));
    } else if (k0->parsed()) {
      check(radial_run_k0_check(spec.get(), o.k, opt(o.x), opt(o.y), o.n_max, o.exploratory ? 1 : 0, &r));
    }
    return emit(o, r);
  } catch (const CliError& e) {
    std::fprintf(stderr, "radial: %s\n", e.message.c_str());
    return e.code;
  }
}
