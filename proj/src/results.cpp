/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "results.hpp"

#include <array>
#include <sstream>
#include <type_traits>

#include "cardinal.hpp"
#include "equinumerosity.hpp"
#include "equivalence.hpp"
#include "relation_laws.hpp"

namespace hume {

namespace {

using nlohmann::json;

json base_doc(const std::string& command) {
  return json{{"command", command},
              {"verdict", nullptr},
              {"certificate", nullptr},
              {"counts", json::object()},
              {"diagnostics", json::array()}};
}

json json_objects(const Universe& u, const std::vector<ObjectId>& ids) {
  json arr = json::array();
  for (ObjectId id : ids) arr.push_back(u.symbol(id));
  return arr;
}

json json_relation(const Universe& u, const DirectedRelation& r) {
  json arr = json::array();
  for (const auto& [s, t] : r.pairs()) {
    arr.push_back(json::array({u.symbol(s), u.symbol(t)}));
  }
  return arr;
}

json json_certificate(const Universe& u, const Certificate& certificate) {
  return std::visit(
      [&](const auto& cert) -> json {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, WitnessCertificate>) {
          return json{{"type", "witness"},
                      {"forward", json_relation(u, cert.phi.forward)},
                      {"backward", json_relation(u, cert.phi.backward)}};
        } else if constexpr (std::is_same_v<T, CardinalityMismatch>) {
          return json{{"type", "cardinality_mismatch"},
                      {"size_f", cert.size_f},
                      {"size_g", cert.size_g}};
        } else {
          return json{{"type", "deficiency_set"},
                      {"side", cert.side == ConceptSide::f ? "F" : "G"},
                      {"objects", json_objects(u, cert.objects)}};
        }
      },
      certificate);
}

std::string text_relation(const Universe& u, const DirectedRelation& r) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, t] : r.pairs()) {
    if (!first) out << ' ';
    first = false;
    out << u.symbol(s) << "->" << u.symbol(t);
  }
  if (first) out << "(empty)";
  return out.str();
}

const Concept& need_concept(const Universe& u, const std::string& name) {
  const Concept* c = u.find_concept(name);
  if (!c) throw Error(ErrorKind::unknown_name, "unknown concept '" + name + "'");
  return *c;
}

const DirectedRelation& need_relation(const Universe& u,
                                      const std::string& name) {
  const DirectedRelation* r = u.find_relation(name);
  if (!r) throw Error(ErrorKind::unknown_name, "unknown relation '" + name + "'");
  return *r;
}

// First source mapped to two targets, if any.
std::optional<std::array<ObjectId, 3>> functional_violation(
    const DirectedRelation& r) {
  const auto& pairs = r.pairs();
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].first == pairs[i - 1].first) {
      return std::array<ObjectId, 3>{pairs[i].first, pairs[i - 1].second,
                                     pairs[i].second};
    }
  }
  return std::nullopt;
}

std::string describe_certificate(const Universe& u,
                                 const Certificate& certificate) {
  return std::visit(
      [&](const auto& cert) -> std::string {
        using T = std::decay_t<decltype(cert)>;
        std::ostringstream out;
        if constexpr (std::is_same_v<T, WitnessCertificate>) {
          out << "forward:  " << text_relation(u, cert.phi.forward) << "\n"
              << "backward: " << text_relation(u, cert.phi.backward) << "\n";
        } else if constexpr (std::is_same_v<T, CardinalityMismatch>) {
          out << "sizes differ: |F| = " << cert.size_f
              << ", |G| = " << cert.size_g << "\n";
        } else {
          out << "deficiency set on the "
              << (cert.side == ConceptSide::f ? "F" : "G") << " side:";
          for (ObjectId id : cert.objects) out << ' ' << u.symbol(id);
          out << "\n";
        }
        return out.str();
      },
      certificate);
}

}  // namespace

CommandResult run_check_laws(const Universe& universe,
                             const std::string& relation_name) {
  const DirectedRelation& r = need_relation(universe, relation_name);
  bool functional = is_functional(r);
  bool exclusive = is_exclusive(r);

  CommandResult result;
  result.doc = base_doc("check-laws");
  result.doc["verdict"] = functional && exclusive;
  result.doc["laws"] = {{"functional", functional}, {"exclusive", exclusive}};
  result.refuted = !(functional && exclusive);

  json violations = json::array();
  std::ostringstream text;
  text << "check-laws " << relation_name << ": functional "
       << (functional ? "yes" : "no") << ", exclusive "
       << (exclusive ? "yes" : "no") << "\n";
  if (!functional) {
    auto v = *functional_violation(r);
    violations.push_back({{"law", "functional"},
                          {"source", universe.symbol(v[0])},
                          {"targets", json::array({universe.symbol(v[1]),
                                                   universe.symbol(v[2])})}});
    text << "source " << universe.symbol(v[0]) << " maps to both "
         << universe.symbol(v[1]) << " and " << universe.symbol(v[2]) << "\n";
  }
  if (!exclusive) {
    auto v = *functional_violation(reverse(r));
    violations.push_back({{"law", "exclusive"},
                          {"target", universe.symbol(v[0])},
                          {"sources", json::array({universe.symbol(v[1]),
                                                   universe.symbol(v[2])})}});
    text << "target " << universe.symbol(v[0]) << " receives both "
         << universe.symbol(v[1]) << " and " << universe.symbol(v[2]) << "\n";
  }
  result.doc["violations"] = violations;
  result.human = text.str();
  return result;
}

CommandResult run_equinum(const Universe& universe, const std::string& f,
                          const std::string& g,
                          const std::optional<std::string>& within) {
  const Concept& cf = need_concept(universe, f);
  const Concept& cg = need_concept(universe, g);

  ExistsResult exists;
  std::string heading = "equinum " + f + " " + g;
  if (within) {
    const DirectedRelation& allowed = need_relation(universe, *within);
    exists = exists_phi_within(cf, cg, allowed);
    heading += " within " + *within;
  } else {
    exists = exists_phi(cf, cg);
  }

  CommandResult result;
  result.doc = base_doc("equinum");
  result.doc["verdict"] = exists.holds;
  result.doc["certificate"] = json_certificate(universe, exists.certificate);
  result.refuted = !exists.holds;

  std::ostringstream text;
  text << heading << ": "
       << (exists.holds ? "equinumerous" : "not equinumerous") << " (|" << f
       << "| = " << cf.size() << ", |" << g << "| = " << cg.size() << ")\n"
       << describe_certificate(universe, exists.certificate);
  result.human = text.str();
  return result;
}

CommandResult run_enumerate_phi(const Universe& universe, const std::string& f,
                                const std::string& g, std::size_t cap) {
  const Concept& cf = need_concept(universe, f);
  const Concept& cg = need_concept(universe, g);
  std::vector<Correspondence> all = enumerate_phi(cf, cg, cap);

  CommandResult result;
  result.doc = base_doc("enumerate-phi");
  result.doc["verdict"] = !all.empty();
  result.doc["counts"]["phi"] = std::to_string(all.size());
  result.refuted = all.empty();

  json arr = json::array();
  std::ostringstream text;
  text << "enumerate-phi " << f << " " << g << ": " << all.size()
       << " correspondence(s)\n";
  for (const Correspondence& phi : all) {
    arr.push_back({{"forward", json_relation(universe, phi.forward)},
                   {"backward", json_relation(universe, phi.backward)}});
    text << "forward: " << text_relation(universe, phi.forward)
         << " | backward: " << text_relation(universe, phi.backward) << "\n";
  }
  result.doc["correspondences"] = arr;
  result.human = text.str();
  return result;
}

CommandResult run_count_phi(const Universe& universe, const std::string& f,
                            const std::string& g) {
  const Concept& cf = need_concept(universe, f);
  const Concept& cg = need_concept(universe, g);
  PhiCount count = count_phi(cf, cg);

  CommandResult result;
  result.doc = base_doc("count-phi");
  result.doc["verdict"] = count != 0;
  result.doc["counts"]["phi"] = count.str();
  result.refuted = count == 0;
  result.human =
      "count-phi " + f + " " + g + ": " + count.str() + "\n";
  return result;
}

CommandResult run_number(const Universe& universe, const std::string& f) {
  need_concept(universe, f);

  // Register every concept of the document, in name order, so the reported
  // class shows all its members.
  NumberRegistry registry(universe);
  for (const auto& [name, extent] : universe.concepts()) {
    registry.number_of(extent);
  }
  NumberHandle handle = registry.number_of(*universe.find_concept(f));

  CommandResult result;
  result.doc = base_doc("number");
  result.doc["verdict"] = true;
  result.doc["handle"] = handle.class_id;
  result.doc["is_number"] = registry.is_number(handle);
  json members = json::array();
  std::ostringstream text;
  text << "number " << f << ": class " << handle.class_id << " (members:";
  for (const std::string& name : registry.classes().at(handle.class_id)) {
    members.push_back(name);
    text << ' ' << name;
  }
  text << ")\n";
  result.doc["class_members"] = members;
  result.human = text.str();
  return result;
}

CommandResult run_nonreciprocal(const Universe& universe, const std::string& f,
                                const std::string& g) {
  const Concept& cf = need_concept(universe, f);
  const Concept& cg = need_concept(universe, g);
  std::optional<Correspondence> phi = find_nonreciprocal_phi(cf, cg);

  CommandResult result;
  result.doc = base_doc("nonreciprocal");
  result.doc["verdict"] = phi.has_value();
  result.refuted = !phi.has_value();

  std::ostringstream text;
  if (phi) {
    result.doc["certificate"] =
        json_certificate(universe, WitnessCertificate{*phi});
    text << "nonreciprocal " << f << " " << g
         << ": found a valid correspondence that is not reciprocal\n"
         << describe_certificate(universe, WitnessCertificate{*phi});
  } else {
    text << "nonreciprocal " << f << " " << g << ": none exists (|" << f
         << "| = " << cf.size() << ", |" << g << "| = " << cg.size()
         << "; every correspondence on sizes <= 1 is reciprocal)\n";
  }
  result.human = text.str();
  return result;
}

CommandResult run_equiv_suite(std::size_t max_size, std::size_t cap,
                              std::uint64_t seed,
                              std::size_t relabel_trials) {
  EquivalenceReport report = equivalence_report(max_size, cap);
  RelabelingSummary relabeling =
      relabeling_trials(max_size, relabel_trials, seed, cap);

  bool verdict = report.discrepancies.empty() && relabeling.mismatches == 0;

  CommandResult result;
  result.doc = base_doc("equiv-suite");
  result.doc["verdict"] = verdict;
  result.refuted = !verdict;

  json cells = json::array();
  for (const EquivalenceCell& cell : report.cells) {
    cells.push_back({{"size_f", cell.size_f},
                     {"size_g", cell.size_g},
                     {"projection", cell.projection},
                     {"binding", cell.binding},
                     {"bijection", cell.bijection},
                     {"cardinality", cell.cardinality},
                     {"agree", cell.agree()}});
  }
  json discrepancies = json::array();
  for (const EquivalenceDiscrepancy& d : report.discrepancies) {
    discrepancies.push_back(
        {{"size_f", d.size_f}, {"size_g", d.size_g}, {"detail", d.detail}});
  }
  json phi_counts = json::array();
  for (const PhiCount& c : report.phi_counts) phi_counts.push_back(c.str());
  json bijection_counts = json::array();
  for (const PhiCount& c : report.bijection_counts) {
    bijection_counts.push_back(c.str());
  }
  result.doc["report"] = {
      {"max_size", report.max_size},
      {"cells", cells},
      {"discrepancies", discrepancies},
      {"phi_counts", phi_counts},
      {"bijection_counts", bijection_counts},
      {"relabeling",
       {{"seed", relabeling.seed},
        {"trials", relabeling.trials},
        {"mismatches", relabeling.mismatches}}}};

  std::ostringstream text;
  text << "equiv-suite up to n=" << max_size << ": "
       << (verdict ? "all definitions agree" : "DISCREPANCIES FOUND") << " ("
       << report.cells.size() << " cells, " << report.discrepancies.size()
       << " discrepancies)\n";
  text << "phi counts:";
  for (const PhiCount& c : report.phi_counts) text << ' ' << c.str();
  text << "\nbijection counts:";
  for (const PhiCount& c : report.bijection_counts) text << ' ' << c.str();
  text << "\nrelabeling: " << relabeling.trials << " trials, "
       << relabeling.mismatches << " mismatches (seed " << relabeling.seed
       << ")\n";
  result.human = text.str();
  return result;
}

CommandResult run_fmt(const UniverseDocument& document) {
  std::string canonical = serialize(document.universe);

  CommandResult result;
  result.doc = base_doc("fmt");
  result.doc["verdict"] = true;
  result.doc["formatted"] = canonical;
  result.human = canonical;
  return result;
}

CommandResult diagnostics_result(const std::string& command,
                                 const std::vector<Diagnostic>& diagnostics) {
  CommandResult result;
  result.doc = base_doc(command);
  for (const Diagnostic& d : diagnostics) {
    result.doc["diagnostics"].push_back({{"line", d.pos.line},
                                         {"column", d.pos.column},
                                         {"message", d.message},
                                         {"token", d.token}});
  }
  result.human = render_diagnostics(diagnostics);
  return result;
}

CommandResult error_result(const std::string& command,
                           const std::string& message) {
  CommandResult result;
  result.doc = base_doc(command);
  result.doc["diagnostics"].push_back(
      {{"line", 0}, {"column", 0}, {"message", message}, {"token", ""}});
  result.human = "error: " + message + "\n";
  return result;
}

}  // namespace hume
