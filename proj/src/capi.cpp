#include "nichols/nichols_c.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

#include "nichols/session.hpp"

struct nb_session {
  nichols::Session session;
};

namespace {

thread_local std::string last_error;

nichols::OutputFormat to_format(nb_format f) {
  return f == NB_FORMAT_JSON ? nichols::OutputFormat::Json : nichols::OutputFormat::Text;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nb_status fail(nb_status code, const char* what) {
  last_error = what;
  return code;
}

nb_status guard(const std::function<void()>& body) {
  try {
    last_error.clear();
    body();
    return NB_OK;
  } catch (const nichols::ParseError& e) {
    return fail(NB_ERR_PARSE, e.what());
  } catch (const nichols::ValidationError& e) {
    return fail(NB_ERR_VALIDATION, e.what());
  } catch (const nichols::UndecidedError& e) {
    return fail(NB_ERR_UNDECIDED, e.what());
  } catch (const nichols::ResourceLimitError& e) {
    return fail(NB_ERR_RESOURCE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(NB_ERR_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(NB_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(NB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NB_ERR_INTERNAL, "unknown error");
  }
}

nb_status run(nb_session* s, const char* name, char** out, const std::function<std::string(const char*)>& body) {
  if (!s || !out || !name) return fail(NB_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] { *out = copy_string(body(name)); });
}

}  // namespace

extern "C" {

const char* nb_version(void) { return "1.0.0"; }

const char* nb_last_error(void) { return last_error.c_str(); }

void nb_string_free(char* s) { std::free(s); }

nb_status nb_session_open_file(const char* path, nb_session** out) {
  if (!path || !out) return fail(NB_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] { *out = new nb_session{nichols::Session::load_file(path)}; });
}

nb_status nb_session_open_string(const char* json_text, nb_session** out) {
  if (!json_text || !out) return fail(NB_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] { *out = new nb_session{nichols::Session::parse(json_text)}; });
}

void nb_session_close(nb_session* s) { delete s; }

nb_status nb_validate(nb_session* s, nb_format f, int* passed, char** out) {
  if (!s || !out || !passed) return fail(NB_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    bool ok = false;
    *out = copy_string(nichols::command_validate(s->session, to_format(f), ok));
    *passed = ok ? 1 : 0;
  });
}

nb_status nb_nichols(nb_session* s, const char* target, unsigned max_degree, nb_format f, char** out) {
  return run(s, target, out, [&](const char* t) { return nichols::command_nichols(s->session, t, max_degree, to_format(f)); });
}

nb_status nb_ad(nb_session* s, const char* tuple, unsigned i, unsigned j, nb_format f, char** out) {
  return run(s, tuple, out, [&](const char* t) { return nichols::command_ad(s->session, t, i, j, to_format(f)); });
}

nb_status nb_cartan(nb_session* s, const char* tuple, nb_format f, char** out) {
  return run(s, tuple, out, [&](const char* t) { return nichols::command_cartan(s->session, t, to_format(f)); });
}

nb_status nb_reflect(nb_session* s, const char* tuple, unsigned i, nb_format f, char** out) {
  return run(s, tuple, out, [&](const char* t) { return nichols::command_reflect(s->session, t, i, to_format(f)); });
}

nb_status nb_graph(nb_session* s, const char* tuple, nb_format f, char** out) {
  return run(s, tuple, out, [&](const char* t) { return nichols::command_graph(s->session, t, to_format(f)); });
}

nb_status nb_roots(nb_session* s, const char* tuple, int bound, nb_format f, char** out) {
  return run(s, tuple, out, [&](const char* t) { return nichols::command_roots(s->session, t, bound, to_format(f)); });
}

nb_status nb_certify(nb_session* s, const char* tuple, nb_format f, char** out) {
  return run(s, tuple, out, [&](const char* t) { return nichols::command_certify(s->session, t, to_format(f)); });
}

unsigned nb_session_truncation(const nb_session* s) {
  return s ? static_cast<unsigned>(s->session.cutoffs().truncation) : 0;
}

int nb_session_root_bound(const nb_session* s) { return s ? s->session.cutoffs().roots : 0; }

}  // extern "C"
