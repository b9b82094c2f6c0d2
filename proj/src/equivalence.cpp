/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "equivalence.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "relation_laws.hpp"

namespace hume {

bool bijection_exists(const Concept& f, const Concept& g) {
  if (f.size() != g.size()) return false;
  DirectedRelation candidate = pairwise(f.extension(), g.extension());
  return is_functional(candidate) && is_exclusive(candidate) &&
         is_total_on(candidate, f) && is_total_on(reverse(candidate), g);
}

PhiCount count_bijections(const Concept& f, const Concept& g,
                          std::size_t cap) {
  if (f.size() > cap || g.size() > cap) {
    throw Error(ErrorKind::cap_exceeded,
                "counting bijections over sizes " + std::to_string(f.size()) +
                    " and " + std::to_string(g.size()) +
                    " exceeds the cap of " + std::to_string(cap));
  }
  if (f.size() != g.size()) return 0;
  return factorial(f.size());
}

std::optional<Correspondence> find_nonreciprocal_phi(const Concept& f,
                                                     const Concept& g) {
  if (f.size() != g.size() || f.size() <= 1) return std::nullopt;

  // In enumeration order the very first correspondence is reciprocal (both
  // directions are the ordinal-ordered pairing); the second differs only in
  // the backward direction, where the last two targets are swapped.
  DirectedRelation forward = pairwise(f.extension(), g.extension());
  std::vector<ObjectId> backward_targets = f.extension();
  std::iter_swap(backward_targets.end() - 2, backward_targets.end() - 1);
  Correspondence phi{forward, pairwise(g.extension(), backward_targets)};

  if (!is_valid_projection(phi, f, g) ||
      phi.backward == reverse(phi.forward)) {
    throw std::logic_error("nonreciprocal construction failed validation");
  }
  return phi;
}

namespace {

// Every total assignment from -> to in lexicographic order, kept or
// discarded purely by the mapping laws.
std::optional<DirectedRelation> find_mapping_by_laws(const Concept& from,
                                                     const Concept& to) {
  const auto& sources = from.extension();
  const auto& targets = to.extension();
  if (sources.empty()) {
    DirectedRelation empty;
    if (is_injective_mapping(empty, from, to)) return empty;
    return std::nullopt;
  }
  if (targets.empty()) return std::nullopt;

  std::vector<std::size_t> choice(sources.size(), 0);
  while (true) {
    std::vector<ObjectPair> pairs;
    pairs.reserve(sources.size());
    for (std::size_t i = 0; i < sources.size(); ++i) {
      pairs.emplace_back(sources[i], targets[choice[i]]);
    }
    DirectedRelation candidate(std::move(pairs));
    if (is_injective_mapping(candidate, from, to)) return candidate;

    // Advance the odometer, least significant digit last.
    std::size_t d = sources.size();
    while (d > 0) {
      --d;
      if (++choice[d] < targets.size()) break;
      choice[d] = 0;
      if (d == 0) return std::nullopt;
    }
  }
}

struct CellConcepts {
  Universe universe;
  Concept f;
  Concept g;
};

CellConcepts fresh_concepts(std::size_t size_f, std::size_t size_g) {
  CellConcepts cell;
  std::vector<ObjectId> f_ext, g_ext;
  for (std::size_t i = 0; i < size_f + size_g; ++i) {
    ObjectId id = cell.universe.declare_object("x" + std::to_string(i));
    (i < size_f ? f_ext : g_ext).push_back(id);
  }
  cell.f = Concept("F", std::move(f_ext));
  cell.g = Concept("G", std::move(g_ext));
  return cell;
}

EquivalenceCell evaluate_cell(const Concept& f, const Concept& g) {
  EquivalenceCell cell;
  cell.size_f = f.size();
  cell.size_g = g.size();

  auto forward = find_mapping_by_laws(f, g);
  auto backward = find_mapping_by_laws(g, f);
  if (forward && backward) {
    Correspondence phi{*forward, *backward};
    cell.projection = is_valid_projection(phi, f, g);
    cell.binding = is_valid_binding(phi, f, g);
  }
  cell.bijection = bijection_exists(f, g);
  cell.cardinality = f.size() == g.size();
  return cell;
}

std::string describe(const EquivalenceCell& cell) {
  std::ostringstream out;
  out << "projection=" << cell.projection << " binding=" << cell.binding
      << " bijection=" << cell.bijection << " cardinality=" << cell.cardinality;
  return out.str();
}

void require_within_cap(std::size_t max_size, std::size_t cap) {
  if (max_size > cap) {
    throw Error(ErrorKind::cap_exceeded,
                "a report up to size " + std::to_string(max_size) +
                    " exceeds the cap of " + std::to_string(cap));
  }
}

}  // namespace

EquivalenceReport equivalence_report(std::size_t max_size, std::size_t cap) {
  require_within_cap(max_size, cap);

  EquivalenceReport report;
  report.max_size = max_size;
  for (std::size_t i = 0; i <= max_size; ++i) {
    for (std::size_t j = 0; j <= max_size; ++j) {
      CellConcepts fresh = fresh_concepts(i, j);
      EquivalenceCell cell = evaluate_cell(fresh.f, fresh.g);
      if (!cell.agree()) {
        report.discrepancies.push_back({i, j, describe(cell)});
      }
      report.cells.push_back(cell);
    }
  }
  for (std::size_t n = 0; n <= max_size; ++n) {
    CellConcepts fresh = fresh_concepts(n, n);
    report.phi_counts.push_back(count_phi(fresh.f, fresh.g));
    report.bijection_counts.push_back(count_bijections(fresh.f, fresh.g, cap));
  }
  return report;
}

RelabelingSummary relabeling_trials(std::size_t max_size, std::size_t trials,
                                    std::uint64_t seed, std::size_t cap) {
  require_within_cap(max_size, cap);

  // Canonical verdicts to compare against.
  std::vector<EquivalenceCell> canonical;
  for (std::size_t i = 0; i <= max_size; ++i) {
    for (std::size_t j = 0; j <= max_size; ++j) {
      CellConcepts fresh = fresh_concepts(i, j);
      canonical.push_back(evaluate_cell(fresh.f, fresh.g));
    }
  }

  std::mt19937_64 rng(seed);
  RelabelingSummary summary{seed, trials, 0};
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t size_f = rng() % (max_size + 1);
    std::size_t size_g = rng() % (max_size + 1);

    Universe universe;
    std::vector<ObjectId> ids;
    for (std::size_t i = 0; i < size_f + size_g; ++i) {
      ids.push_back(universe.declare_object("x" + std::to_string(i)));
    }
    for (std::size_t i = ids.size(); i > 1; --i) {
      std::swap(ids[i - 1], ids[rng() % i]);
    }
    Concept f("F", {ids.begin(), ids.begin() + size_f});
    Concept g("G", {ids.begin() + size_f, ids.end()});

    EquivalenceCell relabeled = evaluate_cell(f, g);
    const EquivalenceCell& base =
        canonical[size_f * (max_size + 1) + size_g];
    if (relabeled.projection != base.projection ||
        relabeled.binding != base.binding ||
        relabeled.bijection != base.bijection ||
        relabeled.cardinality != base.cardinality) {
      ++summary.mismatches;
    }
  }
  return summary;
}

}  // namespace hume
