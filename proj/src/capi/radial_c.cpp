#include "radial/radial.h"

#include "core/campaigns.hpp"
#include "core/serialize.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <string_view>

struct radial_spec {
  radial::SpecPtr spec;
};

struct radial_report {
  radial::Report report;
};

namespace {

thread_local std::string last_error;

radial_status set_error(radial_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
radial_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return RADIAL_OK;
  } catch (const radial::InputError& e) {
    return set_error(RADIAL_ERR_INPUT, e.what());
  } catch (const radial::PreconditionError& e) {
    return set_error(RADIAL_ERR_PRECONDITION, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(RADIAL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(RADIAL_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require_args(bool ok) {
  if (!ok) throw radial::InputError("null argument");
}

radial_report* wrap(radial::Report r) { return new radial_report{std::move(r)}; }

}  // namespace

extern "C" {

const char* radial_version(void) { return "0.1.0"; }

const char* radial_last_error(void) { return last_error.c_str(); }

void radial_string_free(char* s) { std::free(s); }

radial_status radial_spec_load(const char* source, radial_spec** out) {
  return guarded([&] {
    require_args(source && out);
    *out = new radial_spec{radial::share(radial::load_spec(source))};
  });
}

void radial_spec_free(radial_spec* spec) { delete spec; }

radial_status radial_spec_params(const radial_spec* spec, int* m, int* p, int* is_free_group) {
  return guarded([&] {
    require_args(spec);
    if (m) *m = spec->spec->m();
    if (p) *p = spec->spec->p();
    if (is_free_group) *is_free_group = spec->spec->is_free_group() ? 1 : 0;
  });
}

radial_status radial_spec_to_json(const radial_spec* spec, char** out) {
  return guarded([&] {
    require_args(spec && out);
    *out = copy_string(radial::spec_to_json(*spec->spec).dump());
  });
}

radial_status radial_word_count(const radial_spec* spec, int n, char** out) {
  return guarded([&] {
    require_args(spec && out);
    *out = copy_string(radial::word_count(*spec->spec, n).get_str());
  });
}

radial_status radial_word_reduce(const radial_spec* spec, const char* letters, char** out) {
  return guarded([&] {
    require_args(spec && letters && out);
    *out = copy_string(radial::render_word(radial::parse_word(*spec->spec, std::string_view(letters))));
  });
}

radial_status radial_word_multiply(const radial_spec* spec, const char* x, const char* y, char** out) {
  return guarded([&] {
    require_args(spec && x && y && out);
    const auto& g = *spec->spec;
    *out = copy_string(radial::render_word(radial::multiply(g, radial::parse_word(g, std::string_view(x)), radial::parse_word(g, std::string_view(y)))));
  });
}

radial_status radial_word_inverse(const radial_spec* spec, const char* x, char** out) {
  return guarded([&] {
    require_args(spec && x && out);
    const auto& g = *spec->spec;
    *out = copy_string(radial::render_word(radial::inverse(g, radial::parse_word(g, std::string_view(x)))));
  });
}

radial_status radial_validate(const char* source, radial_report** out) {
  return guarded([&] {
    require_args(source && out);
    *out = wrap(radial::run_validate(radial::load_spec_document(source)));
  });
}

radial_status radial_run_enumerate(const radial_spec* spec, int n, radial_report** out) {
  return guarded([&] {
    require_args(spec && out);
    *out = wrap(radial::run_enumerate(spec->spec, n));
  });
}

radial_status radial_run_verify(const radial_spec* spec, int k, int n_max, radial_report** out) {
  return guarded([&] {
    require_args(spec && out);
    *out = wrap(radial::run_verify(spec->spec, k, n_max));
  });
}

radial_status radial_run_defects(const radial_spec* spec, int k, const char* x, const char* y, int n_max,
                                 radial_report** out) {
  return guarded([&] {
    require_args(spec && x && y && out);
    const auto& g = *spec->spec;
    *out = wrap(radial::run_defects(spec->spec, radial::parse_tuple(g, std::string_view(x), k), radial::parse_tuple(g, std::string_view(y), k), n_max));
  });
}

radial_status radial_run_conjugacy(const radial_spec* spec, const char* a, const char* b, radial_mode mode,
                                   int l_max, int ab_max, radial_report** out) {
  return guarded([&] {
    require_args(spec && out);
    radial::ConjugacyRequest req;
    if (a) req.a = radial::parse_word(*spec->spec, std::string_view(a));
    if (b) req.b = radial::parse_word(*spec->spec, std::string_view(b));
    req.modes.clear();
    if (mode & RADIAL_MODE_REDUCED_CONCAT) req.modes.push_back(radial::ConjugacyMode::reduced_concat);
    if (mode & RADIAL_MODE_PLAIN) req.modes.push_back(radial::ConjugacyMode::plain);
    req.l_max = l_max;
    req.ab_max = ab_max;
    *out = wrap(radial::run_conjugacy(spec->spec, req));
  });
}

radial_status radial_run_nonzero_check(const radial_spec* spec, int k, const char* x, int len_max,
                                       radial_report** out) {
  return guarded([&] {
    require_args(spec && out);
    std::optional<radial::WordTuple> tuple;
    if (x) tuple = radial::parse_tuple(*spec->spec, std::string_view(x), k);
    *out = wrap(radial::run_nonzero_check(spec->spec, k, tuple, len_max));
  });
}

radial_status radial_run_k0_check(const radial_spec* spec, int k, const char* x, const char* y, int n_max,
                                  int exploratory, radial_report** out) {
  return guarded([&] {
    require_args(spec && out);
    std::optional<radial::Word> wx, wy;
    if (x) wx = radial::parse_word(*spec->spec, std::string_view(x));
    if (y) wy = radial::parse_word(*spec->spec, std::string_view(y));
    *out = wrap(radial::run_k0_check(spec->spec, k, wx, wy, n_max,
                                     exploratory ? radial::HypothesisMode::exploratory : radial::HypothesisMode::strict));
  });
}

int radial_report_passed(const radial_report* report) { return report && report->report.passed() ? 1 : 0; }

radial_status radial_report_render(const radial_report* report, radial_format format, char** out) {
  return guarded([&] {
    require_args(report && out);
    radial::Format f;
    switch (format) {
      case RADIAL_FORMAT_CSV:
        f = radial::Format::csv;
        break;
      case RADIAL_FORMAT_JSON:
        f = radial::Format::json;
        break;
      case RADIAL_FORMAT_TEXT:
        f = radial::Format::text;
        break;
      default:
        throw radial::InputError("unknown output format");
    }
    *out = copy_string(radial::render(report->report, f));
  });
}

void radial_report_free(radial_report* report) { delete report; }

}  // extern "C"
