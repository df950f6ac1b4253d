#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "nscas.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    nscas_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("parse and canonical rendering") {
    char* out = nullptr;
    REQUIRE(nscas_parse("G[3/2]*G[3/2]", &out) == NSCAS_OK);
    CHECK(take(out) == "L[3]");
    CHECK(nscas_parse("L[2", &out) == NSCAS_ERR_SYNTAX);
    CHECK(std::string(nscas_last_error()).size() > 0);
    CHECK(nscas_parse("G[1]", &out) == NSCAS_ERR_SYNTAX);
    CHECK(nscas_parse(nullptr, &out) == NSCAS_ERR_BAD_ARGUMENT);
}

TEST_CASE("normal form and trailing reduction") {
    char* out = nullptr;
    REQUIRE(nscas_normal_form("G[3/2]*G[-3/2]", nullptr, &out) == NSCAS_OK);
    std::string nf = take(out);
    CHECK(nf.find("L[0]") != std::string::npos);
    CHECK(nf.find("chat") != std::string::npos);

    REQUIRE(nscas_normal_form("L[-1]*G[-1/2]*(1/2*L[1]*G[1/2]-G[3/2])",
                              "L[-1],G[-1/2]", &out) == NSCAS_OK);
    std::string split = take(out);
    CHECK(split.find("2*L[0]^2 - 3*L[0]") != std::string::npos);
    CHECK(split.find(" | ") != std::string::npos);
}

TEST_CASE("bracket endpoint") {
    char* out = nullptr;
    REQUIRE(nscas_bracket("G[3/2]", "G[-3/2]", &out) == NSCAS_OK);
    CHECK(take(out) == "(2)*L[0] + (2/3)*chat");
    REQUIRE(nscas_bracket("L[1]", "G[1/2]", &out) == NSCAS_OK);
    CHECK(take(out) == "0");
    CHECK(nscas_bracket("L[x]", "L[0]", &out) == NSCAS_ERR_SYNTAX);
}

TEST_CASE("rule sets act on states") {
    const char* text =
        "weight mu - 1/2\n"
        "central chat\n"
        "state x = G[3/2] v +\n"
        "state y = G[-1/2] x +\n"
        "rule G[1/2] v -> 0\n"
        "rule G[-1/2] y -> 0\n"
        "rule G[1/2] y -> tau * x\n";
    nscas_rules* rules = nullptr;
    REQUIRE(nscas_rules_parse(text, &rules) == NSCAS_OK);
    char* out = nullptr;
    REQUIRE(nscas_rules_act(rules, "G[1/2]", "y", &out) == NSCAS_OK);
    CHECK(take(out) == "(tau)*G[3/2] v");
    REQUIRE(nscas_rules_act(rules, "G[1/2]", "v", &out) == NSCAS_OK);
    CHECK(take(out) == "0");
    CHECK(nscas_rules_act(rules, "G[1/2]", "w", &out) == NSCAS_ERR_BAD_ARGUMENT);
    nscas_rules_free(rules);
}

TEST_CASE("verma dimensions as json") {
    char* out = nullptr;
    REQUIRE(nscas_verma_dims(8, "h", "chat", &out) == NSCAS_OK);
    auto arr = nlohmann::json::parse(take(out));
    REQUIRE(arr.size() == 9);
    const int expect[9] = {1, 1, 1, 2, 3, 4, 5, 7, 10};
    for (int d = 0; d <= 8; ++d) CHECK(arr[d]["dim"] == expect[d]);
    CHECK(arr[3]["level"] == "3/2");
    CHECK(nscas_verma_dims(-1, nullptr, nullptr, &out) == NSCAS_ERR_BAD_ARGUMENT);
}

TEST_CASE("check registry round trip") {
    char* out = nullptr;
    REQUIRE(nscas_check_ids(&out) == NSCAS_OK);
    auto ids = nlohmann::json::parse(take(out));
    CHECK(ids.size() == 45);

    int passed = -1;
    REQUIRE(nscas_check_run("lemma3.congruence", &passed, &out) == NSCAS_OK);
    CHECK(passed == 1);
    auto rec = nlohmann::json::parse(take(out));
    CHECK(rec["status"] == "pass");

    CHECK(nscas_check_run("nope", &passed, &out) == NSCAS_ERR_UNKNOWN_CHECK);
}
