/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HUME_H
#define HUME_H

/*
 * C interface of libhume, a finite-model engine for checking equality of
 * number between finite concepts.
 *
 * A universe description (objects, concepts, relations) is parsed into an
 * opaque hume_universe. Commands run against it and yield an opaque
 * hume_result holding one structured JSON document plus a human-readable
 * rendering of the same content. Every command fills *out_result whenever
 * it can, including on refutation and on most errors; results and universes
 * must be released with the matching _free call.
 *
 * Return codes: HUME_OK means the command ran and its claim holds (or it
 * was a plain computation); HUME_REFUTED means the claim was checked and
 * refuted, with a certificate inside the result document. Everything else
 * is an error; hume_last_error() describes the most recent one for the
 * calling thread.
 */

#include <stddef.h>

#if defined(_WIN32)
#define HUME_API __declspec(dllexport)
#else
#define HUME_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hume_universe hume_universe;
typedef struct hume_result hume_result;

typedef enum hume_status {
  HUME_OK = 0,
  HUME_REFUTED = 1,
  HUME_ERR_PARSE = 2,    /* syntax or semantic error in the document */
  HUME_ERR_USAGE = 3,    /* unknown name, malformed restriction, bad args */
  HUME_ERR_CAP = 4,      /* enumeration cap exceeded */
  HUME_ERR_INTERNAL = 5,
} hume_status;

/* Library version as "major.minor.patch". */
HUME_API const char* hume_version(void);

/* Stable name of a status value, e.g. "HUME_REFUTED". */
HUME_API const char* hume_status_name(hume_status status);

/* Message of the calling thread's most recent error; empty if none. */
HUME_API const char* hume_last_error(void);

/*
 * Parses a universe description. On success *out_universe is set; on a
 * parse error it stays NULL and *out_result (when non-NULL) carries the
 * located diagnostics. The default enumeration cap of a fresh universe
 * is 6; see hume_universe_set_enum_cap.
 */
HUME_API hume_status hume_parse_universe(const char* text,
                                         hume_universe** out_universe,
                                         hume_result** out_result);

/* Overrides the enumeration cap used by commands on this universe. */
HUME_API void hume_universe_set_enum_cap(hume_universe* universe,
                                         unsigned cap);

HUME_API void hume_universe_free(hume_universe* universe);

/* Functional/exclusive laws of a named relation. */
HUME_API hume_status hume_check_laws(const hume_universe* universe,
                                     const char* relation,
                                     hume_result** out_result);

/*
 * Existence of a valid correspondence between concepts f and g; `within`
 * may name a relation of allowed pairs, or be NULL for the unrestricted
 * check. Witness or refutation certificate lands in the result.
 */
HUME_API hume_status hume_equinum(const hume_universe* universe, const char* f,
                                  const char* g, const char* within,
                                  hume_result** out_result);

/* Every valid correspondence between f and g, in enumeration order. */
HUME_API hume_status hume_enumerate_phi(const hume_universe* universe,
                                        const char* f, const char* g,
                                        hume_result** out_result);

/* Exact number of valid correspondences, as a decimal string. */
HUME_API hume_status hume_count_phi(const hume_universe* universe,
                                    const char* f, const char* g,
                                    hume_result** out_result);

/* Equivalence class of f among all concepts of the universe. */
HUME_API hume_status hume_number(const hume_universe* universe, const char* f,
                                 hume_result** out_result);

/* A valid correspondence whose directions are not mutual reverses. */
HUME_API hume_status hume_nonreciprocal(const hume_universe* universe,
                                        const char* f, const char* g,
                                        hume_result** out_result);

/*
 * Cross-verification of the correspondence facades, the reciprocal
 * bijection baseline, and cardinality equality over every size pair up to
 * max_n, plus seeded relabeling trials. enum_cap of 0 means the default.
 */
HUME_API hume_status hume_equiv_suite(unsigned max_n, unsigned enum_cap,
                                      unsigned long long seed,
                                      unsigned relabel_trials,
                                      hume_result** out_result);

/* Canonical form of the parsed document. */
HUME_API hume_status hume_fmt(const hume_universe* universe,
                              hume_result** out_result);

/* The result's JSON document (one per command invocation). */
HUME_API const char* hume_result_json(const hume_result* result);

/* Human-readable rendering of the result. */
HUME_API const char* hume_result_text(const hume_result* result);

/* "line:column: error: ..." lines; empty when there are none. */
HUME_API const char* hume_result_diagnostics(const hume_result* result);

HUME_API void hume_result_free(hume_result* result);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HUME_H */
