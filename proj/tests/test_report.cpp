#include <doctest.h>

#include "symstab/report.hpp"

using namespace symstab;
using namespace symstab::report;

TEST_CASE("rational and partition serialization") {
    Json r = rational_json(Rational(-6, 4));
    CHECK(r["num"] == "-3");  // lowest terms
    CHECK(r["den"] == "2");
    CHECK(partition_json(Partition({3, 1})) == Json::array({3, 1}));
    CHECK(partition_json(Partition()) == Json::array());
}

TEST_CASE("multiplicity table document structure") {
    auto t = chars::decompose_character(chars::subsets_character(4, 2));
    Json j = multiplicity_table_json(t);
    REQUIRE(j.contains("multiplicities"));
    REQUIRE(j["multiplicities"].is_array());
    CHECK(j["multiplicities"].size() == 3);
    for (const auto& row : j["multiplicities"]) {
        CHECK(row.contains("partition"));
        CHECK(row["partition"].is_array());
        CHECK(row.contains("stable"));
        CHECK(row.contains("mult"));
        CHECK(row["mult"].is_number_integer());
        CHECK(row.contains("dim"));
        CHECK(row["dim"].is_string());
    }
    CHECK(j["total_dim"] == "6");
    CHECK(j["multiplicities"][0]["partition"] == Json::array({4}));
    CHECK(j["multiplicities"][0]["stable"] == Json::array());
}

TEST_CASE("envelope carries command, version, params and result") {
    Json params;
    params["n"] = 4;
    Json doc = envelope("decompose powerset", params, Json::object());
    CHECK(doc["command"] == "decompose powerset");
    CHECK(doc["schema_version"] == kSchemaVersion);
    CHECK(doc["params"]["n"] == 4);
    CHECK(doc.contains("result"));
}

TEST_CASE("serialization is deterministic and round-trips") {
    auto rep = stability::action_stability_report(stability::subsets_set_family(2), 4, 5);
    Json a = action_report_json(rep);
    Json b = action_report_json(stability::action_stability_report(
        stability::subsets_set_family(2), 4, 5));
    CHECK(a.dump() == b.dump());

    Json parsed = Json::parse(a.dump(2));
    CHECK(parsed.dump(2) == a.dump(2));
}

TEST_CASE("factored strings for canonical basis vectors") {
    auto pairs = squarefree::canonical_delta_set(7, 2);
    CHECK(factored_basis_string(pairs[0], 7, 3, 2) == "(x_1-x_2)(x_3-x_4)(x_5+x_6+x_7)");
    CHECK(factored_basis_string(squarefree::DeltaPair(), 5, 2, 0) == "sigma_2(x_1,x_2,x_3,x_4,x_5)");
    CHECK(factored_basis_string(squarefree::DeltaPair({{1, 2}}), 4, 1, 1) == "(x_1-x_2)");
}

TEST_CASE("subset vector serialization keeps term order") {
    SubsetVector v(4);
    v.add(mask_of({2, 3}), Rational(1, 2));
    v.add(mask_of({1}), -2);
    Json j = subset_vector_json(v);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["subset"] == Json::array({1}));
    CHECK(j[0]["coeff"]["num"] == "-2");
    CHECK(j[1]["subset"] == Json::array({2, 3}));
    CHECK(j[1]["coeff"]["den"] == "2");
}

TEST_CASE("rep report serialization fields") {
    auto rep = stability::rep_stability_report(stability::subsets_module_family(2), 4, 5,
                                               /*monotonic_cap=*/4);
    Json j = rep_report_json(rep);
    CHECK(j["family"] == "LP_2");
    CHECK(j["window"] == Json::array({4, 5}));
    REQUIRE(j["per_n"].is_array());
    CHECK(j["per_n"].size() == 2);
    CHECK(j["per_n"][0]["consistent"] == true);
    CHECK(j["per_n"][0]["monotone"].is_array());
    CHECK(j["per_n"][1]["monotone"].is_null());
    CHECK(j["multiplicities_stable_from"] == 4);
    std::string text = rep_report_text(rep);
    CHECK(text.find("V(2)") != std::string::npos);
}
