/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HUME_RESULTS_HPP
#define HUME_RESULTS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "parser.hpp"

// Command layer: every engine operation reachable from the outside produces
// one structured result document. The JSON form always carries the fields
// command, verdict, certificate, counts and diagnostics (plus per-command
// extras); the text form is the human rendering of the same content. Output
// is byte-deterministic for a fixed input.

namespace hume {

struct CommandResult {
  nlohmann::json doc;
  std::string human;
  bool refuted = false;  // claim was checked and does not hold
};

// Unknown concept/relation names throw Error{unknown_name}; restriction and
// cap problems propagate the corresponding Error kinds.
CommandResult run_check_laws(const Universe& universe,
                             const std::string& relation_name);
CommandResult run_equinum(const Universe& universe, const std::string& f,
                          const std::string& g,
                          const std::optional<std::string>& within);
CommandResult run_enumerate_phi(const Universe& universe, const std::string& f,
                                const std::string& g, std::size_t cap);
CommandResult run_count_phi(const Universe& universe, const std::string& f,
                            const std::string& g);
CommandResult run_number(const Universe& universe, const std::string& f);
CommandResult run_nonreciprocal(const Universe& universe, const std::string& f,
                                const std::string& g);
CommandResult run_equiv_suite(std::size_t max_size, std::size_t cap,
                              std::uint64_t seed, std::size_t relabel_trials);
CommandResult run_fmt(const UniverseDocument& document);

// Result document for a failed parse.
CommandResult diagnostics_result(const std::string& command,
                                 const std::vector<Diagnostic>& diagnostics);

// Result document for a command-level error (unknown name, bad restriction,
// cap exceeded): verdict null, one diagnostic with the message.
CommandResult error_result(const std::string& command,
                           const std::string& message);

}  // namespace hume

#endif  // HUME_RESULTS_HPP
