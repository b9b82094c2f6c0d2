/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include <hume/hume.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

// Thin driver over the C API: parse arguments, read the document, run one
// command, print its result document. Exit codes: 0 claim holds, 1 claim
// refuted, 2 usage/parse/semantic error.

namespace {

int exit_code(hume_status status) {
  switch (status) {
    case HUME_OK:
      return 0;
    case HUME_REFUTED:
      return 1;
    default:
      return 2;
  }
}

std::optional<std::string> read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) return std::nullopt;
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

// Prints the result document (JSON, or the text rendering when requested)
// to stdout and any diagnostics to stderr, then releases the result.
int finish(hume_status status, hume_result* result, bool human) {
  if (result) {
    std::cout << (human ? hume_result_text(result)
                        : hume_result_json(result));
    const char* diagnostics = hume_result_diagnostics(result);
    if (*diagnostics) std::cerr << diagnostics;
    hume_result_free(result);
  } else if (*hume_last_error()) {
    std::cerr << "error: " << hume_last_error() << "\n";
  }
  return exit_code(status);
}

struct UniverseHandle {
  hume_universe* ptr = nullptr;
  ~UniverseHandle() { hume_universe_free(ptr); }
};

// Loads FILE (or stdin for "-"); on failure prints what went wrong and
// returns the process exit code instead.
int load_universe(const std::string& path, unsigned enum_cap, bool human,
                  UniverseHandle& universe) {
  std::optional<std::string> text = read_input(path);
  if (!text) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return 2;
  }
  hume_result* result = nullptr;
  hume_status status = hume_parse_universe(text->c_str(), &universe.ptr,
                                           &result);
  if (status != HUME_OK) return finish(status, result, human);
  hume_result_free(result);
  if (enum_cap > 0) hume_universe_set_enum_cap(universe.ptr, enum_cap);
  return -1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hume: checks equality of number between finite concepts "
               "via two-directional correspondences"};
  app.require_subcommand(1);

  bool human = false;
  unsigned enum_cap = 0;
  app.add_flag("--human", human, "Human-readable output instead of JSON");
  app.add_option("--enum-cap", enum_cap,
                 "Override the enumeration cap (default 6)");

  std::string file, concept_f, concept_g, relation;
  std::string within;
  unsigned max_n = 0;
  unsigned long long seed = 0;
  unsigned trials = 100;

  CLI::App* check_laws =
      app.add_subcommand("check-laws", "Check the mapping laws of a relation");
  check_laws->add_option("--relation", relation, "Relation to check")
      ->required();
  check_laws->add_option("file", file, "Universe description file or '-'")
      ->required();

  CLI::App* equinum = app.add_subcommand(
      "equinum", "Decide whether two concepts have the same number");
  equinum->add_option("f", concept_f, "First concept")->required();
  equinum->add_option("g", concept_g, "Second concept")->required();
  equinum->add_option("--within", within,
                      "Restrict correspondences to a relation's pairs");
  equinum->add_option("file", file, "Universe description file or '-'")
      ->required();

  CLI::App* enumerate_phi = app.add_subcommand(
      "enumerate-phi", "List every valid correspondence between two concepts");
  enumerate_phi->add_option("f", concept_f, "First concept")->required();
  enumerate_phi->add_option("g", concept_g, "Second concept")->required();
  enumerate_phi->add_option("file", file, "Universe description file or '-'")
      ->required();

  CLI::App* count_phi = app.add_subcommand(
      "count-phi", "Count the valid correspondences between two concepts");
  count_phi->add_option("f", concept_f, "First concept")->required();
  count_phi->add_option("g", concept_g, "Second concept")->required();
  count_phi->add_option("file", file, "Universe description file or '-'")
      ->required();

  CLI::App* number = app.add_subcommand(
      "number", "Equivalence class of a concept among the document's concepts");
  number->add_option("f", concept_f, "Concept")->required();
  number->add_option("file", file, "Universe description file or '-'")
      ->required();

  CLI::App* nonreciprocal = app.add_subcommand(
      "nonreciprocal",
      "Find a valid correspondence that is not a reciprocal mapping");
  nonreciprocal->add_option("f", concept_f, "First concept")->required();
  nonreciprocal->add_option("g", concept_g, "Second concept")->required();
  nonreciprocal->add_option("file", file, "Universe description file or '-'")
      ->required();

  CLI::App* equiv_suite = app.add_subcommand(
      "equiv-suite",
      "Cross-verify correspondence, bijection and cardinality verdicts");
  equiv_suite->add_option("--max-n", max_n, "Largest concept size to cover")
      ->required();
  equiv_suite->add_option("--seed", seed, "Seed for the relabeling trials");
  equiv_suite->add_option("--trials", trials,
                          "Number of relabeling trials (default 100)");

  CLI::App* fmt =
      app.add_subcommand("fmt", "Canonicalize a universe description");
  fmt->add_option("file", file, "Universe description file or '-'")
      ->required();

  // Let --human / --enum-cap appear after the subcommand too.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (app.got_subcommand(equiv_suite)) {
    hume_result* result = nullptr;
    hume_status status =
        hume_equiv_suite(max_n, enum_cap, seed, trials, &result);
    return finish(status, result, human);
  }

  UniverseHandle universe;
  int early = load_universe(file, enum_cap, human, universe);
  if (early >= 0) return early;

  hume_result* result = nullptr;
  hume_status status = HUME_ERR_INTERNAL;
  if (app.got_subcommand(check_laws)) {
    status = hume_check_laws(universe.ptr, relation.c_str(), &result);
  } else if (app.got_subcommand(equinum)) {
    status = hume_equinum(universe.ptr, concept_f.c_str(), concept_g.c_str(),
                          within.empty() ? nullptr : within.c_str(), &result);
  } else if (app.got_subcommand(enumerate_phi)) {
    status = hume_enumerate_phi(universe.ptr, concept_f.c_str(),
                                concept_g.c_str(), &result);
  } else if (app.got_subcommand(count_phi)) {
    status = hume_count_phi(universe.ptr, concept_f.c_str(),
                            concept_g.c_str(), &result);
  } else if (app.got_subcommand(number)) {
    status = hume_number(universe.ptr, concept_f.c_str(), &result);
  } else if (app.got_subcommand(nonreciprocal)) {
    status = hume_nonreciprocal(universe.ptr, concept_f.c_str(),
                                concept_g.c_str(), &result);
  } else if (app.got_subcommand(fmt)) {
    status = hume_fmt(universe.ptr, &result);
  }
  return finish(status, result, human);
}
