/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include <hume/hume.h>

#include <exception>
#include <sstream>
#include <string>

#include "equinumerosity.hpp"
#include "parser.hpp"
#include "results.hpp"

struct hume_universe {
  hume::UniverseDocument document;
  std::size_t enum_cap = hume::kDefaultEnumerationCap;
};

struct hume_result {
  std::string json;
  std::string text;
  std::string diagnostics;
};

namespace {

thread_local std::string tl_last_error;

hume_status status_of(const hume::Error& e) {
  switch (e.kind()) {
    case hume::ErrorKind::cap_exceeded:
      return HUME_ERR_CAP;
    default:
      return HUME_ERR_USAGE;
  }
}

std::string diagnostics_text(const nlohmann::json& doc) {
  std::ostringstream out;
  if (!doc.contains("diagnostics")) return {};
  for (const auto& d : doc["diagnostics"]) {
    std::size_t line = d.value("line", std::size_t{0});
    if (line > 0) {
      out << line << ':' << d.value("column", std::size_t{0}) << ": error: "
          << d.value("message", std::string());
      std::string token = d.value("token", std::string());
      if (!token.empty()) out << " '" << token << "'";
    } else {
      out << "error: " << d.value("message", std::string());
    }
    out << "\n";
  }
  return out.str();
}

hume_result* wrap_result(const hume::CommandResult& result) {
  auto* out = new hume_result;
  out->json = result.doc.dump(2) + "\n";
  out->text = result.human;
  out->diagnostics = diagnostics_text(result.doc);
  return out;
}

// Runs a command body, translating exceptions into statuses and making sure
// *out_result carries a document either way.
template <typename Body>
hume_status run_command(const char* command, hume_result** out_result,
                        Body&& body) {
  if (!out_result) {
    tl_last_error = "out_result must not be null";
    return HUME_ERR_USAGE;
  }
  *out_result = nullptr;
  tl_last_error.clear();
  try {
    hume::CommandResult result = body();
    *out_result = wrap_result(result);
    return result.refuted ? HUME_REFUTED : HUME_OK;
  } catch (const hume::Error& e) {
    tl_last_error = e.what();
    *out_result = wrap_result(hume::error_result(command, e.what()));
    return status_of(e);
  } catch (const std::exception& e) {
    tl_last_error = e.what();
    *out_result = wrap_result(hume::error_result(command, e.what()));
    return HUME_ERR_INTERNAL;
  }
}

bool check_args(std::initializer_list<const void*> pointers) {
  for (const void* p : pointers) {
    if (!p) {
      tl_last_error = "null argument";
      return false;
    }
  }
  return true;
}

}  // namespace

extern "C" {

const char* hume_version(void) { return "0.1.0"; }

const char* hume_status_name(hume_status status) {
  switch (status) {
    case HUME_OK: return "HUME_OK";
    case HUME_REFUTED: return "HUME_REFUTED";
    case HUME_ERR_PARSE: return "HUME_ERR_PARSE";
    case HUME_ERR_USAGE: return "HUME_ERR_USAGE";
    case HUME_ERR_CAP: return "HUME_ERR_CAP";
    case HUME_ERR_INTERNAL: return "HUME_ERR_INTERNAL";
  }
  return "HUME_ERR_INTERNAL";
}

const char* hume_last_error(void) { return tl_last_error.c_str(); }

hume_status hume_parse_universe(const char* text, hume_universe** out_universe,
                                hume_result** out_result) {
  if (out_result) *out_result = nullptr;
  if (!check_args({text, out_universe})) return HUME_ERR_USAGE;
  *out_universe = nullptr;
  tl_last_error.clear();
  try {
    hume::ParseResult parsed = hume::parse_universe(text);
    if (!parsed.ok()) {
      tl_last_error = "document has errors";
      if (out_result) {
        *out_result =
            wrap_result(hume::diagnostics_result("parse", parsed.diagnostics));
      }
      return HUME_ERR_PARSE;
    }
    *out_universe = new hume_universe{std::move(*parsed.document),
                                      hume::kDefaultEnumerationCap};
    return HUME_OK;
  } catch (const std::exception& e) {
    tl_last_error = e.what();
    return HUME_ERR_INTERNAL;
  }
}

void hume_universe_set_enum_cap(hume_universe* universe, unsigned cap) {
  if (universe && cap > 0) universe->enum_cap = cap;
}

void hume_universe_free(hume_universe* universe) { delete universe; }

hume_status hume_check_laws(const hume_universe* universe,
                            const char* relation, hume_result** out_result) {
  if (!check_args({universe, relation})) return HUME_ERR_USAGE;
  return run_command("check-laws", out_result, [&] {
    return hume::run_check_laws(universe->document.universe, relation);
  });
}

hume_status hume_equinum(const hume_universe* universe, const char* f,
                         const char* g, const char* within,
                         hume_result** out_result) {
  if (!check_args({universe, f, g})) return HUME_ERR_USAGE;
  return run_command("equinum", out_result, [&] {
    std::optional<std::string> restriction;
    if (within) restriction = within;
    return hume::run_equinum(universe->document.universe, f, g, restriction);
  });
}

hume_status hume_enumerate_phi(const hume_universe* universe, const char* f,
                               const char* g, hume_result** out_result) {
  if (!check_args({universe, f, g})) return HUME_ERR_USAGE;
  return run_command("enumerate-phi", out_result, [&] {
    return hume::run_enumerate_phi(universe->document.universe, f, g,
                                   universe->enum_cap);
  });
}

hume_status hume_count_phi(const hume_universe* universe, const char* f,
                           const char* g, hume_result** out_result) {
  if (!check_args({universe, f, g})) return HUME_ERR_USAGE;
  return run_command("count-phi", out_result, [&] {
    return hume::run_count_phi(universe->document.universe, f, g);
  });
}

hume_status hume_number(const hume_universe* universe, const char* f,
                        hume_result** out_result) {
  if (!check_args({universe, f})) return HUME_ERR_USAGE;
  return run_command("number", out_result, [&] {
    return hume::run_number(universe->document.universe, f);
  });
}

hume_status hume_nonreciprocal(const hume_universe* universe, const char* f,
                               const char* g, hume_result** out_result) {
  if (!check_args({universe, f, g})) return HUME_ERR_USAGE;
  return run_command("nonreciprocal", out_result, [&] {
    return hume::run_nonreciprocal(universe->document.universe, f, g);
  });
}

hume_status hume_equiv_suite(unsigned max_n, unsigned enum_cap,
                             unsigned long long seed, unsigned relabel_trials,
                             hume_result** out_result) {
  return run_command("equiv-suite", out_result, [&] {
    std::size_t cap =
        enum_cap > 0 ? enum_cap : hume::kDefaultEnumerationCap;
    return hume::run_equiv_suite(max_n, cap, seed, relabel_trials);
  });
}

hume_status hume_fmt(const hume_universe* universe, hume_result** out_result) {
  if (!check_args({universe})) return HUME_ERR_USAGE;
  return run_command("fmt", out_result, [&] {
    return hume::run_fmt(universe->document);
  });
}

const char* hume_result_json(const hume_result* result) {
  return result ? result->json.c_str() : "";
}

const char* hume_result_text(const hume_result* result) {
  return result ? result->text.c_str() : "";
}

const char* hume_result_diagnostics(const hume_result* result) {
  return result ? result->diagnostics.c_str() : "";
}

void hume_result_free(hume_result* result) { delete result; }

}  // extern "C"
