#include "siospec.h"

#include <cstring>
#include <new>
#include <string>

#include "sio/config.hpp"
#include "sio/errors.hpp"
#include "sio/reports.hpp"

struct siospec_analysis {
  sio::AnalysisConfig cfg;
};

namespace {

thread_local std::string g_last_error;

int code_of(const sio::Error& e) {
  using C = sio::Error::Code;
  switch (e.code()) {
    case C::invalid_argument: return SIOSPEC_ERR_INVALID_ARGUMENT;
    case C::precondition: return SIOSPEC_ERR_PRECONDITION;
    case C::unsupported: return SIOSPEC_ERR_UNSUPPORTED;
    case C::numeric: return SIOSPEC_ERR_NUMERIC;
    case C::config:
    case C::parse: return SIOSPEC_ERR_CONFIG;
  }
  return SIOSPEC_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const sio::Error& e) {
    g_last_error = e.what();
    return code_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SIOSPEC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SIOSPEC_ERR_INTERNAL;
  }
}

int emit(char** out, const std::string& s) {
  char* c = dup_string(s);
  if (!c) {
    g_last_error = "out of memory";
    return SIOSPEC_ERR_INTERNAL;
  }
  *out = c;
  return SIOSPEC_OK;
}

}  // namespace

extern "C" {

const char* siospec_version(void) { return "0.1.0"; }

const char* siospec_last_error(void) { return g_last_error.c_str(); }

int siospec_analysis_create(const char* config_json, siospec_analysis** out) {
  if (!config_json || !out) {
    g_last_error = "null argument";
    return SIOSPEC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    auto* a = new siospec_analysis{sio::load_config(config_json)};
    *out = a;
    return SIOSPEC_OK;
  });
}

void siospec_analysis_destroy(siospec_analysis* a) { delete a; }

#define SIOSPEC_CHECK_ARGS()                     \
  if (!a || !out) {                              \
    g_last_error = "null argument";              \
    return SIOSPEC_ERR_INVALID_ARGUMENT;         \
  }

int siospec_check_bounded(siospec_analysis* a, char** out) {
  SIOSPEC_CHECK_ARGS()
  return guarded([&] { return emit(out, sio::report_check_bounded(a->cfg)); });
}

int siospec_fredholm(siospec_analysis* a, int verify, char** out) {
  SIOSPEC_CHECK_ARGS()
  return guarded([&] { return emit(out, sio::report_fredholm(a->cfg, verify != 0)); });
}

int siospec_index(siospec_analysis* a, int verify, char** out) {
  SIOSPEC_CHECK_ARGS()
  return guarded([&] { return emit(out, sio::report_index(a->cfg, verify != 0)); });
}

int siospec_spectrum_csv(siospec_analysis* a, char** out) {
  SIOSPEC_CHECK_ARGS()
  return guarded([&] { return emit(out, sio::spectrum_csv(a->cfg)); });
}

int siospec_spectrum_svg(siospec_analysis* a, char** out) {
  SIOSPEC_CHECK_ARGS()
  return guarded([&] { return emit(out, sio::spectrum_svg(a->cfg)); });
}

int siospec_verify(siospec_analysis* a, char** out) {
  SIOSPEC_CHECK_ARGS()
  return guarded([&] { return emit(out, sio::report_verify(a->cfg)); });
}

int siospec_report_exit(const char* report_json) {
  if (!report_json) return 0;
  try {
    return sio::report_exit_code(report_json);
  } catch (...) {
    return 0;
  }
}

void siospec_string_free(char* s) { delete[] s; }

}  // extern "C"
