#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>

#include <json.hpp>

#include "test_support.hpp"

using testsupport::CliResult;
using testsupport::run_cli;

namespace {

std::string binary() {
    const char* env = std::getenv("EQUINDEX_BIN");
    REQUIRE_MESSAGE(env != nullptr, "EQUINDEX_BIN must point at the executable");
    return env;
}

std::string doc(const std::string& stem) {
    return testsupport::corpus_dir() + "/" + stem + ".json";
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validate accepts the corpus") {
    CliResult r = run_cli(binary(), "validate " + doc("a1_xdx_ydy"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "VALID"));
}

TEST_CASE("validate rejects a non-equivariant document") {
    std::string path = testsupport::write_temp_file(
        "bad_equivariance.json",
        "{\"group\": {\"orders\": [2]},\n"
        " \"variables\": [{\"name\": \"x\", \"weight\": [0]},"
        " {\"name\": \"y\", \"weight\": [1]}],\n"
        " \"equations\": [{\"character\": [0], \"poly\": \"y^3\"}],\n"
        " \"profile\": [{\"character\": [0], \"k\": 1, \"forms\": [{\"x\": \"1\"}]}]}\n");
    CliResult r = run_cli(binary(), "validate " + path);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "y^3"));
}

TEST_CASE("malformed json exits 2") {
    std::string path = testsupport::write_temp_file("cli_truncated.json", "{\"group\"");
    CliResult r = run_cli(binary(), "validate " + path);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "error:"));
}

TEST_CASE("missing file exits 1") {
    CliResult r = run_cli(binary(), "index /no/such/file.json");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "error:"));
}

TEST_CASE("index command") {
    SUBCASE("plain") {
        CliResult r = run_cli(binary(), "index " + doc("a1_xdx_ydy"));
        CHECK(r.exit_code == 0);
        CHECK(contains(r.output, "INDEX 4"));
        CHECK(!contains(r.output, "ORACLE"));
    }
    SUBCASE("with oracle") {
        CliResult r = run_cli(binary(), "index --oracle " + doc("a1_dx"));
        CHECK(r.exit_code == 0);
        CHECK(contains(r.output, "INDEX 2"));
        CHECK(contains(r.output, "ORACLE AGREE"));
    }
    SUBCASE("non-isolated input exits 3") {
        CliResult r = run_cli(binary(), "index " + doc("a1_df"));
        CHECK(r.exit_code == 3);
        CHECK(contains(r.output, "error:"));
    }
    SUBCASE("exhausted budget exits 5") {
        CliResult r = run_cli(binary(), "index --budget 1 " + doc("a1_xdx_ydy"));
        CHECK(r.exit_code == 5);
    }
}

TEST_CASE("chern command") {
    CliResult r = run_cli(binary(), "chern --seed 3 " + doc("a1_xdx_ydy"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "CHERN 2"));
    CHECK(contains(r.output, "SEEDS 3 4"));
}

TEST_CASE("conserve command") {
    SUBCASE("conserved") {
        CliResult r = run_cli(binary(), "conserve " + doc("a1_xdx_ydy"));
        CHECK(r.exit_code == 0);
        CHECK(contains(r.output, "LOCAL 4  GLOBAL_DEFORMED 4"));
        CHECK(contains(r.output, "VERDICT CONSERVED"));
    }
    SUBCASE("escape is still exit 0") {
        CliResult r = run_cli(binary(), "conserve " + doc("x2x3"));
        CHECK(r.exit_code == 0);
        CHECK(contains(r.output, "LOCAL 2  GLOBAL_DEFORMED 3"));
        CHECK(contains(r.output, "VERDICT ESCAPED"));
        CHECK(contains(r.output, "NOTE "));
    }
    SUBCASE("epsilon override") {
        CliResult r = run_cli(binary(), "conserve --epsilon 1/13 --seed 2 " + doc("smooth_x2"));
        CHECK(r.exit_code == 0);
        CHECK(contains(r.output, "VERDICT CONSERVED"));
    }
}

TEST_CASE("json outputs parse and carry the headline fields") {
    using Json = nlohmann::ordered_json;
    SUBCASE("validate --json") {
        CliResult r = run_cli(binary(), "validate --json " + doc("z3_pair1"));
        CHECK(r.exit_code == 0);
        Json j = Json::parse(r.output);
        CHECK(j.at("valid").get<bool>());
        CHECK(j.contains("document"));
    }
    SUBCASE("index --json --oracle") {
        CliResult r = run_cli(binary(), "index --json --oracle " + doc("z2_sign_xdz"));
        CHECK(r.exit_code == 0);
        Json j = Json::parse(r.output);
        CHECK(j.at("value").get<long>() == 2);
        CHECK(j.at("oracle").get<std::string>() == "AGREE");
        CHECK(j.at("standard_monomial_count").get<long>() == 2);
    }
    SUBCASE("chern --json") {
        CliResult r = run_cli(binary(), "chern --json --seed 1 " + doc("a1_const"));
        CHECK(r.exit_code == 0);
        Json j = Json::parse(r.output);
        CHECK(j.at("chern").get<long>() == 0);
        CHECK(j.at("form_term").at("value").get<long>() == 2);
    }
    SUBCASE("conserve --json") {
        CliResult r = run_cli(binary(), "conserve --json " + doc("x2x3"));
        CHECK(r.exit_code == 0);
        Json j = Json::parse(r.output);
        CHECK(j.at("verdict").get<std::string>() == "ESCAPED");
        CHECK(j.at("local").get<long>() == 2);
        CHECK(j.at("global_deformed").get<long>() == 3);
    }
}

TEST_CASE("round trip through the emitted document") {
    using Json = nlohmann::ordered_json;
    CliResult first = run_cli(binary(), "validate --json " + doc("z2_trivial"));
    REQUIRE(first.exit_code == 0);
    Json j = Json::parse(first.output);
    std::string path =
        testsupport::write_temp_file("roundtrip.json", j.at("document").dump());
    CliResult second = run_cli(binary(), "index " + path);
    CHECK(second.exit_code == 0);
    CHECK(contains(second.output, "INDEX 4"));
}

TEST_CASE("identical invocations are byte-identical") {
    for (const std::string& cmd :
         {std::string("index --oracle --json "), std::string("chern --seed 9 "),
          std::string("conserve --seed 4 ")}) {
        CliResult a = run_cli(binary(), cmd + doc("a1_xdx_ydy"));
        CliResult b = run_cli(binary(), cmd + doc("a1_xdx_ydy"));
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("usage errors exit 2, help exits 0") {
    CliResult help = run_cli(binary(), "--help");
    CHECK(help.exit_code == 0);
    CHECK(contains(help.output, "equindex"));
    CliResult bad = run_cli(binary(), "frobnicate");
    CHECK(bad.exit_code == 2);
    CliResult missing = run_cli(binary(), "index");
    CHECK(missing.exit_code == 2);
}
