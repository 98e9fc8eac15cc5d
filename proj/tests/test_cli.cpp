#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(BERKCUBIC_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string write_tmp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_") + name + ".json";
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("classify") {
    auto good = write_tmp("good",
        R"({"coefficients":{"a3":"1","a2":"t","b2":"1","b1":"1+2*t","b0":"-1-t"}})");
    auto r = run("classify " + good);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["case"] == "2-1-2");

    auto deep = write_tmp("deep", R"({"pq":{"p":"t","q":"t^2"}})");
    auto r2 = run("classify " + deep);
    CHECK(r2.exit_code == 0);
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["case"] == "2-2-2-2-1-1");
    CHECK(j2["deep_subcase"] == 3);

    // club violated
    auto bad = write_tmp("bad",
        R"({"coefficients":{"a3":"1","a2":"1","b2":"1","b1":"1","b0":"1"}})");
    CHECK(run("classify " + bad).exit_code == 2);

    // unreadable / malformed
    CHECK(run("classify no_such_file.json").exit_code == 1);
    auto broken = write_tmp("broken", "{not json");
    CHECK(run("classify " + broken).exit_code == 1);
}

TEST_CASE("mult") {
    auto deep2 = write_tmp("deep2", R"({"pq":{"p":"t","q":"-t+t^2"}})");
    auto r = run("mult " + deep2 + " --center 1 --radius-exp 1");
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out)["multiplicity"] == 3);

    auto good = write_tmp("goodred",
        R"({"coefficients":{"a3":"1","a2":"t","b2":"1","b1":"1+2*t","b0":"-1-t"}})");
    auto r2 = run("mult " + good + " --center 0 --radius-exp 0");
    CHECK(nlohmann::json::parse(r2.out)["multiplicity"] == 3);

    // starved working precision at a deep radius
    auto tight = write_tmp("tight", R"({"pq":{"p":"t","q":"t^2"},"precision":12})");
    auto r3 = run("mult " + tight + " --center 1 --radius-exp 40");
    CHECK(r3.exit_code == 4);
}

TEST_CASE("locus") {
    auto deep3 = write_tmp("deep3", R"({"pq":{"p":"t","q":"t^2"}})");
    auto r = run("locus " + deep3 + " --mode oracle --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["locus"]["shape"] == "two_components");

    // the deep discrepancies exit 3 under --mode both
    CHECK(run("locus " + deep3 + " --mode both --format json").exit_code == 3);

    auto good = write_tmp("goodred2",
        R"({"coefficients":{"a3":"1","a2":"t","b2":"1","b1":"1+2*t","b0":"-1-t"}})");
    auto rg = run("locus " + good + " --mode both --format json");
    CHECK(rg.exit_code == 0);
    auto jg = nlohmann::json::parse(rg.out);
    CHECK(jg["locus"]["shape"] == "connected");
    CHECK(jg["cross_check"]["agreement"] == true);

    auto rd = run("locus " + deep3 + " --mode oracle --format dot");
    CHECK(rd.exit_code == 0);
    CHECK(rd.out.find("graph locus {") == 0);
    CHECK(rd.out.find("bold") != std::string::npos);
}

TEST_CASE("trace") {
    auto deep3 = write_tmp("deep3b", R"({"pq":{"p":"t","q":"t^2"}})");
    auto r = run("trace " + deep3 + " --grid 3");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["shape"] == "two_components");
    bool saw_interior = false;
    for (const auto& s : j["samples"]) {
        if (s["interior_central"] == true && s.contains("multiplicity")) {
            saw_interior = true;
            CHECK(s["multiplicity"] == 1);
        }
    }
    CHECK(saw_interior);

    // the corrupted-prediction hook must contradict
    auto rc = run("trace " + deep3 + " --grid 3", "BERKCUBIC_TRACE_CORRUPT=1");
    CHECK(rc.exit_code == 5);
}
