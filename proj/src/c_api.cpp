#include "tsg/c_api.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "tsg/perm.hpp"
#include "tsg/render.hpp"
#include "tsg/spatial.hpp"

struct tsg_engine {
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int fail(tsg_engine* eng, int code, const std::string& msg) {
  if (eng != nullptr) eng->last_error = msg;
  return code;
}

/// Run fn(), store its string result in *out, map exceptions to codes.
template <typename Fn>
int guarded(tsg_engine* eng, char** out, Fn&& fn) {
  if (eng == nullptr) return TSG_EINTERNAL;
  if (out == nullptr) return fail(eng, TSG_EPARSE, "output pointer is NULL");
  try {
    const std::string text = fn();
    char* dup = dup_string(text);
    if (dup == nullptr) return fail(eng, TSG_EINTERNAL, "allocation failure");
    *out = dup;
    eng->last_error.clear();
    return TSG_OK;
  } catch (const tsg::parse_error& e) {
    return fail(eng, TSG_EPARSE, e.what());
  } catch (const tsg::data_error& e) {
    return fail(eng, TSG_EDATA, e.what());
  } catch (const std::exception& e) {
    return fail(eng, TSG_EINTERNAL, e.what());
  } catch (...) {
    return fail(eng, TSG_EINTERNAL, "unknown failure");
  }
}

std::string require(const char* s, const char* what) {
  if (s == nullptr) {
    throw tsg::parse_error(std::string(what) + " is NULL");
  }
  return std::string(s);
}

std::vector<int> parse_cycle(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string digits;
  const auto flush = [&]() {
    if (digits.empty()) {
      throw tsg::parse_error(std::string(what) +
                             " must be a comma-separated vertex list; got \"" +
                             text + "\"");
    }
    out.push_back(std::atoi(digits.c_str()));
    digits.clear();
  };
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      if (digits.size() > 6) {
        throw tsg::parse_error(std::string(what) + " vertex is too large");
      }
      digits += ch;
    } else if (ch == ',') {
      flush();
    } else if (ch == ' ' || ch == '\t') {
      if (!digits.empty()) flush();
    } else {
      throw tsg::parse_error(std::string(what) +
                             " contains an unexpected character '" +
                             std::string(1, ch) + "'");
    }
  }
  flush();
  return out;
}

}  // namespace

extern "C" {

tsg_engine* tsg_engine_new(void) { return new (std::nothrow) tsg_engine; }

void tsg_engine_free(tsg_engine* eng) { delete eng; }

const char* tsg_last_error(const tsg_engine* eng) {
  return eng == nullptr ? "" : eng->last_error.c_str();
}

void tsg_string_free(char* s) { std::free(s); }

int tsg_classify_render(tsg_engine* eng, int n, const char* mode,
                        const char* format, int show_reasons, char** out) {
  return guarded(eng, out, [&]() {
    const std::string m = require(mode, "mode");
    if (m != "positive" && m != "full") {
      throw tsg::parse_error("unknown mode \"" + m +
                             "\"; expected positive or full");
    }
    const tsg::OutputFormat f = tsg::parse_format(require(format, "format"));
    return tsg::render_classify(tsg::classify(n, m), f, show_reasons != 0);
  });
}

int tsg_check_group(tsg_engine* eng, int n, const char* generators,
                    const char* rules, const char* format, char** out) {
  return guarded(eng, out, [&]() {
    const tsg::OutputFormat f = tsg::parse_format(require(format, "format"));
    const tsg::CheckReport rep = tsg::check_group(
        n, require(generators, "generators"), require(rules, "rules"));
    return tsg::render_check(rep, f);
  });
}

int tsg_orbits(tsg_engine* eng, const char* generators, const char* format,
               char** out) {
  return guarded(eng, out, [&]() {
    const tsg::OutputFormat f = tsg::parse_format(require(format, "format"));
    return tsg::render_orbits(
        tsg::orbit_report(require(generators, "generators")), f);
  });
}

int tsg_subgroups(tsg_engine* eng, int n, const char* format, char** out) {
  return guarded(eng, out, [&]() {
    const tsg::OutputFormat f = tsg::parse_format(require(format, "format"));
    return tsg::render_subgroups(tsg::subgroup_report(n), f);
  });
}

int tsg_linking_number(tsg_engine* eng, const char* embedding_json,
                       const char* cycle_a, const char* cycle_b, char** out,
                       long long* lk) {
  return guarded(eng, out, [&]() {
    const std::string json = require(embedding_json, "embedding");
    const std::vector<int> a =
        parse_cycle(require(cycle_a, "first cycle"), "first cycle");
    const std::vector<int> b =
        parse_cycle(require(cycle_b, "second cycle"), "second cycle");
    const std::string text = tsg::linking_report(json, a, b);
    if (lk != nullptr) {
      *lk = tsg::linking_number(tsg::spatial_from_json(json), a, b);
    }
    return text;
  });
}

int tsg_cg_check(tsg_engine* eng, const char* embedding_json, char** out,
                 int* invariant) {
  return guarded(eng, out, [&]() {
    const std::string json = require(embedding_json, "embedding");
    const std::string text = tsg::cg_file_report(json);
    if (invariant != nullptr) {
      *invariant = tsg::conway_gordon(tsg::spatial_from_json(json));
    }
    return text;
  });
}

int tsg_cg_random(tsg_engine* eng, int count, uint64_t seed, char** out,
                  int* good) {
  return guarded(eng, out, [&]() {
    const std::string text = tsg::cg_random_report(count, seed);
    if (good != nullptr) {
      *good = std::atoi(text.c_str());  // the report leads with the count
    }
    return text;
  });
}

int tsg_bracket_report(tsg_engine* eng, const char* gauss_text, int with_det,
                       int with_mirror, const char* format, char** out) {
  return guarded(eng, out, [&]() {
    const tsg::OutputFormat f = tsg::parse_format(require(format, "format"));
    const tsg::BracketReport rep = tsg::bracket_report(
        require(gauss_text, "Gauss code"), with_det != 0, with_mirror != 0);
    return tsg::render_bracket(rep, f);
  });
}

}  // extern "C"
