#include "frobroot.h"

#include "frobroot/error.hpp"
#include "frobroot/frobenius.hpp"
#include "frobroot/session.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct frob_ring {
  frobroot::RingPtr ring;
};

struct frob_ideal {
  frobroot::Ideal ideal;
};

struct frob_session {
  frobroot::Session session;
};

namespace {

thread_local std::string last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

frob_status set_error(frob_status status, const std::string& msg) {
  last_error = msg;
  return status;
}

template <class F>
frob_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return FROB_OK;
  } catch (const frobroot::Error& e) {
    return set_error(static_cast<frob_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(FROB_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(FROB_INTERNAL, e.what());
  }
}

frob_status null_argument(const char* name) {
  return set_error(FROB_INVALID_ARGUMENT, std::string(name) + " must not be null");
}

std::vector<std::string> split_names(const char* vars) {
  std::vector<std::string> names;
  std::string cur;
  for (const char* c = vars;; ++c) {
    if (*c == ',' || *c == '\0') {
      auto b = cur.find_first_not_of(' ');
      auto e = cur.find_last_not_of(' ');
      names.push_back(b == std::string::npos ? std::string() : cur.substr(b, e - b + 1));
      cur.clear();
      if (*c == '\0') break;
    } else {
      cur += *c;
    }
  }
  return names;
}

}  // namespace

extern "C" {

const char* frob_version(void) { return "0.1.0"; }

const char* frob_last_error(void) { return last_error.c_str(); }

const char* frob_status_name(frob_status status) {
  if (status == FROB_INTERNAL) return "Internal";
  return frobroot::to_string(static_cast<frobroot::ErrorCode>(status));
}

void frob_string_free(char* s) { std::free(s); }

frob_status frob_ring_create(uint64_t p, const char* vars, const char* order, frob_ring** out) {
  if (vars == nullptr) return null_argument("vars");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    frobroot::MonomialOrder mo;
    std::string o = order != nullptr ? order : "grevlex";
    if (o == "lex") mo.kind = frobroot::OrderKind::lex;
    else if (o == "grlex") mo.kind = frobroot::OrderKind::grlex;
    else if (o == "grevlex") mo.kind = frobroot::OrderKind::grevlex;
    else frobroot::fail(frobroot::ErrorCode::invalid_argument, "unknown order '" + o + "'");
    *out = new frob_ring{frobroot::Ring::create(p, split_names(vars), mo)};
  });
}

void frob_ring_free(frob_ring* ring) { delete ring; }

frob_status frob_ideal_parse(const frob_ring* ring, const char* text, frob_ideal** out) {
  if (ring == nullptr) return null_argument("ring");
  if (text == nullptr) return null_argument("text");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new frob_ideal{frobroot::parse_ideal(ring->ring, text)}; });
}

void frob_ideal_free(frob_ideal* ideal) { delete ideal; }

frob_status frob_ideal_to_string(const frob_ideal* ideal, char** out) {
  if (ideal == nullptr) return null_argument("ideal");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = copy_string(frobroot::to_string(ideal->ideal)); });
}

frob_status frob_ideal_equal(const frob_ideal* a, const frob_ideal* b, int* out) {
  if (a == nullptr || b == nullptr) return null_argument("ideal");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = frobroot::ideals_equal(a->ideal, b->ideal) ? 1 : 0; });
}

frob_status frob_frobenius_root(const frob_ideal* ideal, uint64_t e, frob_ideal** out) {
  if (ideal == nullptr) return null_argument("ideal");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new frob_ideal{frobroot::frobenius_root(ideal->ideal, e)}; });
}

frob_status frob_frobenius_power(const frob_ideal* ideal, uint64_t e, frob_ideal** out) {
  if (ideal == nullptr) return null_argument("ideal");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new frob_ideal{frobroot::frobenius_power(ideal->ideal, e)}; });
}

static frobroot::TestIdealResult run_tau(const frob_ideal* ideal, const char* exponent, uint64_t max_e) {
  std::vector<frobroot::ExponentedIdeal> f{
      {ideal->ideal, frobroot::RationalExponent::parse(exponent)}};
  frobroot::TauOptions opts;
  opts.max_e = max_e;
  return frobroot::tau(f, opts);
}

frob_status frob_tau(const frob_ideal* ideal, const char* exponent, uint64_t max_e,
                     frob_ideal** out, int* truncated) {
  if (ideal == nullptr) return null_argument("ideal");
  if (exponent == nullptr) return null_argument("exponent");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    auto r = run_tau(ideal, exponent, max_e);
    if (truncated != nullptr) *truncated = r.truncated ? 1 : 0;
    *out = new frob_ideal{r.tau};
  });
}

frob_status frob_tau_json(const frob_ideal* ideal, const char* exponent, uint64_t max_e, char** out) {
  if (ideal == nullptr) return null_argument("ideal");
  if (exponent == nullptr) return null_argument("exponent");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = copy_string(frobroot::tau_result_json(run_tau(ideal, exponent, max_e))); });
}

frob_status frob_session_parse(const char* text, frob_session** out) {
  if (text == nullptr) return null_argument("text");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new frob_session{frobroot::parse_session(text)}; });
}

void frob_session_free(frob_session* session) { delete session; }

frob_status frob_session_run(const frob_session* session, frob_format format, uint64_t max_e,
                             char** output, int* exit_code) {
  if (session == nullptr) return null_argument("session");
  if (output == nullptr) return null_argument("output");
  if (exit_code == nullptr) return null_argument("exit_code");
  return guarded([&] {
    frobroot::RunOptions opts;
    opts.format = format == FROB_FORMAT_JSON ? frobroot::OutputFormat::json : frobroot::OutputFormat::text;
    opts.max_e = max_e;
    auto r = frobroot::run_session(session->session, opts);
    *output = copy_string(r.output);
    *exit_code = r.exit_code;
  });
}

}  // extern "C"
