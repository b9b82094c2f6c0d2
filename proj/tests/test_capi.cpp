/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>
#include <hume/hume.h>

#include <json.hpp>
#include <string>

// Exercises the shared library strictly through its C surface.

extern "C" int hume_capi_header_smoke(void);

namespace {

using nlohmann::json;

constexpr const char* kDoc =
    "universe U\n"
    "object a1 a2 b1 b2 c\n"
    "concept F = { a1 a2 }\n"
    "concept G = { b1 b2 }\n"
    "concept One = { c }\n"
    "relation R = { (a1,b1) (a2,b1) }\n"
    "relation M = { (a1,b1) (a2,b2) }\n";

struct Universe {
  hume_universe* ptr = nullptr;
  ~Universe() { hume_universe_free(ptr); }
};

struct Result {
  hume_result* ptr = nullptr;
  ~Result() { hume_result_free(ptr); }

  json doc() const { return json::parse(hume_result_json(ptr)); }
};

Universe parse_or_fail(const char* text) {
  Universe u;
  hume_result* result = nullptr;
  REQUIRE(hume_parse_universe(text, &u.ptr, &result) == HUME_OK);
  hume_result_free(result);
  return u;
}

}  // namespace

TEST_CASE("the header is consumable from plain C") {
  CHECK(hume_capi_header_smoke() == 0);
}

TEST_CASE("version and status names are stable strings") {
  CHECK(std::string(hume_version()) == "0.1.0");
  CHECK(std::string(hume_status_name(HUME_OK)) == "HUME_OK");
  CHECK(std::string(hume_status_name(HUME_ERR_CAP)) == "HUME_ERR_CAP");
}

TEST_CASE("documents parse into universes; errors carry diagnostics") {
  Universe u = parse_or_fail(kDoc);
  CHECK(u.ptr != nullptr);

  hume_universe* bad = nullptr;
  hume_result* result = nullptr;
  CHECK(hume_parse_universe("concept F = { z }\n", &bad, &result) ==
        HUME_ERR_PARSE);
  CHECK(bad == nullptr);
  REQUIRE(result != nullptr);
  json doc = json::parse(hume_result_json(result));
  REQUIRE(doc["diagnostics"].size() == 1);
  CHECK(doc["diagnostics"][0]["line"] == 1);
  CHECK(doc["diagnostics"][0]["column"] == 15);
  CHECK(doc["diagnostics"][0]["token"] == "z");
  CHECK(std::string(hume_result_diagnostics(result)) ==
        "1:15: error: undeclared object 'z'\n");
  hume_result_free(result);
}

TEST_CASE("equinum reports witnesses and refutations") {
  Universe u = parse_or_fail(kDoc);

  Result equal;
  CHECK(hume_equinum(u.ptr, "F", "G", nullptr, &equal.ptr) == HUME_OK);
  json doc = equal.doc();
  CHECK(doc["command"] == "equinum");
  CHECK(doc["verdict"] == true);
  CHECK(doc["certificate"]["type"] == "witness");
  CHECK(doc["certificate"]["forward"] ==
        json::parse(R"([["a1","b1"],["a2","b2"]])"));

  Result refuted;
  CHECK(hume_equinum(u.ptr, "F", "One", nullptr, &refuted.ptr) ==
        HUME_REFUTED);
  json doc2 = refuted.doc();
  CHECK(doc2["verdict"] == false);
  CHECK(doc2["certificate"]["type"] == "cardinality_mismatch");
  CHECK(doc2["certificate"]["size_f"] == 2);
  CHECK(doc2["certificate"]["size_g"] == 1);

  Result within;
  CHECK(hume_equinum(u.ptr, "F", "G", "R", &within.ptr) == HUME_REFUTED);
  CHECK(within.doc()["certificate"]["type"] == "deficiency_set");
  CHECK(within.doc()["certificate"]["objects"] ==
        json::array({"a1", "a2"}));

  Result matched;
  CHECK(hume_equinum(u.ptr, "F", "G", "M", &matched.ptr) == HUME_OK);
  CHECK(matched.doc()["certificate"]["type"] == "witness");
}

TEST_CASE("unknown names are usage errors with messages") {
  Universe u = parse_or_fail(kDoc);
  Result result;
  CHECK(hume_equinum(u.ptr, "F", "Nope", nullptr, &result.ptr) ==
        HUME_ERR_USAGE);
  CHECK(std::string(hume_last_error()) == "unknown concept 'Nope'");
  REQUIRE(result.ptr != nullptr);
  CHECK(result.doc()["verdict"].is_null());
  CHECK(std::string(hume_result_diagnostics(result.ptr)) ==
        "error: unknown concept 'Nope'\n");

  Result result2;
  CHECK(hume_check_laws(u.ptr, "Nope", &result2.ptr) == HUME_ERR_USAGE);
}

TEST_CASE("counting and enumeration through the C surface") {
  Universe u = parse_or_fail(kDoc);

  Result count;
  CHECK(hume_count_phi(u.ptr, "F", "G", &count.ptr) == HUME_OK);
  CHECK(count.doc()["counts"]["phi"] == "4");

  Result enumerated;
  CHECK(hume_enumerate_phi(u.ptr, "F", "G", &enumerated.ptr) == HUME_OK);
  CHECK(enumerated.doc()["correspondences"].size() == 4);

  Result zero;
  CHECK(hume_count_phi(u.ptr, "F", "One", &zero.ptr) == HUME_REFUTED);
  CHECK(zero.doc()["counts"]["phi"] == "0");
}

TEST_CASE("the enumeration cap is an error, not a refutation") {
  Universe u = parse_or_fail(
      "object a b c d e f g h i j k l m n\n"
      "concept Big = { a b c d e f g }\n"
      "concept Big2 = { h i j k l m n }\n"
      "concept S1 = { a b c }\n"
      "concept S2 = { d e f }\n");
  Result result;
  CHECK(hume_enumerate_phi(u.ptr, "Big", "Big2", &result.ptr) ==
        HUME_ERR_CAP);

  // Count is closed-form and uncapped.
  Result count;
  CHECK(hume_count_phi(u.ptr, "Big", "Big2", &count.ptr) == HUME_OK);
  CHECK(count.doc()["counts"]["phi"] == "25401600");

  // The cap override applies to later commands on the same universe.
  hume_universe_set_enum_cap(u.ptr, 2);
  Result tight;
  CHECK(hume_enumerate_phi(u.ptr, "S1", "S2", &tight.ptr) == HUME_ERR_CAP);
  hume_universe_set_enum_cap(u.ptr, 3);
  Result loose;
  CHECK(hume_enumerate_phi(u.ptr, "S1", "S2", &loose.ptr) == HUME_OK);
  CHECK(loose.doc()["correspondences"].size() == 36);
}

TEST_CASE("number, laws, nonreciprocal and fmt round out the surface") {
  Universe u = parse_or_fail(kDoc);

  Result number;
  CHECK(hume_number(u.ptr, "F", &number.ptr) == HUME_OK);
  CHECK(number.doc()["handle"] == 2);
  CHECK(number.doc()["is_number"] == true);
  CHECK(number.doc()["class_members"] == json::array({"F", "G"}));

  Result laws;
  CHECK(hume_check_laws(u.ptr, "R", &laws.ptr) == HUME_REFUTED);
  CHECK(laws.doc()["laws"]["functional"] == true);
  CHECK(laws.doc()["laws"]["exclusive"] == false);
  REQUIRE(laws.doc()["violations"].size() == 1);
  CHECK(laws.doc()["violations"][0]["law"] == "exclusive");
  CHECK(laws.doc()["violations"][0]["target"] == "b1");

  Result good_laws;
  CHECK(hume_check_laws(u.ptr, "M", &good_laws.ptr) == HUME_OK);
  CHECK(good_laws.doc()["verdict"] == true);

  Result nonreciprocal;
  CHECK(hume_nonreciprocal(u.ptr, "F", "G", &nonreciprocal.ptr) == HUME_OK);
  CHECK(nonreciprocal.doc()["certificate"]["backward"] ==
        json::parse(R"([["b1","a2"],["b2","a1"]])"));

  Result none;
  CHECK(hume_nonreciprocal(u.ptr, "One", "One", &none.ptr) == HUME_REFUTED);

  Result fmt;
  CHECK(hume_fmt(u.ptr, &fmt.ptr) == HUME_OK);
  std::string canonical = fmt.doc()["formatted"];
  CHECK(canonical ==
        "universe U\n"
        "object a1 a2 b1 b2 c\n"
        "concept F = { a1 a2 }\n"
        "concept G = { b1 b2 }\n"
        "concept One = { c }\n"
        "relation M = { (a1,b1) (a2,b2) }\n"
        "relation R = { (a1,b1) (a2,b1) }\n");
  CHECK(std::string(hume_result_text(fmt.ptr)) == canonical);
}

TEST_CASE("equiv-suite runs without a universe") {
  Result result;
  CHECK(hume_equiv_suite(3, 0, 7, 50, &result.ptr) == HUME_OK);
  json doc = result.doc();
  CHECK(doc["verdict"] == true);
  CHECK(doc["report"]["phi_counts"] ==
        json::array({"1", "1", "4", "36"}));
  CHECK(doc["report"]["bijection_counts"] ==
        json::array({"1", "1", "2", "6"}));
  CHECK(doc["report"]["discrepancies"].empty());
  CHECK(doc["report"]["relabeling"]["mismatches"] == 0);
  CHECK(doc["report"]["relabeling"]["seed"] == 7);

  Result capped;
  CHECK(hume_equiv_suite(9, 0, 0, 0, &capped.ptr) == HUME_ERR_CAP);
}

TEST_CASE("output is byte-deterministic") {
  Universe u = parse_or_fail(kDoc);
  Result first, second;
  REQUIRE(hume_enumerate_phi(u.ptr, "F", "G", &first.ptr) == HUME_OK);
  REQUIRE(hume_enumerate_phi(u.ptr, "F", "G", &second.ptr) == HUME_OK);
  CHECK(std::string(hume_result_json(first.ptr)) ==
        std::string(hume_result_json(second.ptr)));
}

TEST_CASE("null arguments are rejected, not crashed on") {
  hume_result* result = nullptr;
  CHECK(hume_check_laws(nullptr, "R", &result) == HUME_ERR_USAGE);
  CHECK(result == nullptr);
  CHECK(std::string(hume_last_error()) == "null argument");

  Universe u = parse_or_fail(kDoc);
  CHECK(hume_equinum(u.ptr, "F", nullptr, nullptr, &result) ==
        HUME_ERR_USAGE);
  CHECK(hume_count_phi(u.ptr, "F", "G", nullptr) == HUME_ERR_USAGE);

  hume_universe* universe = nullptr;
  CHECK(hume_parse_universe(nullptr, &universe, nullptr) == HUME_ERR_USAGE);
}
