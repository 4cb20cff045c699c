#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct CommandResult {
    int status = -1;
    std::string output;  // stdout and stderr interleaved
};

CommandResult run_cli(const std::string& args) {
    std::string cmd = std::string(MGSEP_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.output.append(buf.data(), got);
    }
    int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

const std::string kFig1 = std::string(MGSEP_FIXTURES_DIR) + "/fig1.g";

}  // namespace

TEST_CASE("query exit codes partition the outcomes") {
    SECTION("connected means exit 1") {
        CommandResult r = run_cli("query " + kFig1 + " --a x --b y --c z");
        CHECK(r.status == 1);
        CHECK(r.output.find("separated: false") != std::string::npos);
        CHECK(r.output.find("walk: x ") != std::string::npos);
    }

    SECTION("separated means exit 0") {
        CommandResult r = run_cli("query " + kFig1 + " --a x --b z --c g");
        CHECK(r.status == 0);
        CHECK(r.output.find("separated: true") != std::string::npos);
        CHECK(r.output.find("a_star: b,x") != std::string::npos);
    }

    SECTION("bad input means exit 2") {
        CHECK(run_cli("query " + kFig1 + " --a nope --b y").status == 2);
        CHECK(run_cli("query " + kFig1 + " --a x --b x").status == 2);
        CHECK(run_cli("query /no/such/file --a x --b y").status == 2);
        CHECK(run_cli("query " + kFig1 + " --a x --b y --criterion bogus").status == 2);
        CHECK(run_cli("nonsense-subcommand").status == 2);
        CHECK(run_cli("").status == 2);
    }

    SECTION("every criterion answers the worked example the same way") {
        for (const std::string crit : {"walk", "augment", "district", "oracle", "all"}) {
            CommandResult r =
                run_cli("query " + kFig1 + " --a x --b y --c g,h --criterion " + crit);
            INFO("criterion " << crit << "\n" << r.output);
            CHECK(r.status == 1);
        }
    }
}

TEST_CASE("query reads graphs from stdin") {
    std::string cmd = "printf 'a -> b\\nb -> c\\n' | " + std::string(MGSEP_CLI_PATH) +
                      " query - --a a --b c --c b 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
    int raw = pclose(pipe);
    CHECK(WEXITSTATUS(raw) == 0);
    CHECK(output.find("separated: true") != std::string::npos);

    SECTION("parse errors from stdin still exit 2") {
        std::string bad = "printf 'x -> x\\n' | " + std::string(MGSEP_CLI_PATH) +
                          " query - --a x --b y 2>&1";
        FILE* p2 = popen(bad.c_str(), "r");
        REQUIRE(p2 != nullptr);
        while (fread(buf.data(), 1, buf.size(), p2) > 0) {
        }
        CHECK(WEXITSTATUS(pclose(p2)) == 2);
    }
}

TEST_CASE("json output") {
    CommandResult r = run_cli("query " + kFig1 + " --a x --b z --c g --json");
    REQUIRE(r.status == 0);
    nlohmann::json out = nlohmann::json::parse(r.output);
    CHECK(out["separated"] == true);
    CHECK(out["criterion"] == "district");
    CHECK(out["a"] == nlohmann::json::array({"x"}));
    CHECK(out["b"] == nlohmann::json::array({"z"}));
    CHECK(out["c"] == nlohmann::json::array({"g"}));
    CHECK(out["witness"]["kind"] == "certificate");
    CHECK(out["witness"]["a_star"] == nlohmann::json::array({"b", "x"}));
    CHECK(out["witness"]["b_star"] == nlohmann::json::array({"z"}));
    CHECK(out.count("timing_micros") == 0);

    SECTION("connected query carries the walk") {
        CommandResult c = run_cli("query " + kFig1 + " --a x --b y --c z --json");
        REQUIRE(c.status == 1);
        nlohmann::json walk_out = nlohmann::json::parse(c.output);
        CHECK(walk_out["separated"] == false);
        CHECK(walk_out["witness"]["kind"] == "walk");
        CHECK(walk_out["witness"]["start"] == "x");
        CHECK(walk_out["witness"]["steps"].is_array());
        CHECK(!walk_out["witness"]["steps"].empty());
    }

    SECTION("timing is opt-in") {
        CommandResult t = run_cli("query " + kFig1 + " --a x --b z --c g --json --timing");
        REQUIRE(t.status == 0);
        nlohmann::json timed = nlohmann::json::parse(t.output);
        CHECK(timed.count("timing_micros") == 1);
    }
}

TEST_CASE("derived graph exports") {
    SECTION("reduce renders contracted districts") {
        CommandResult r = run_cli("reduce " + kFig1 + " --a x --b y --c g,h");
        CHECK(r.status == 0);
        CHECK(r.output.find("\"C={g,h}\";") != std::string::npos);
        CHECK(r.output.find("\"b\" -- \"c\";") != std::string::npos);
    }

    SECTION("reduce with empty conditioning set") {
        CommandResult r = run_cli("reduce " + kFig1 + " --a x --b y --c \"\"");
        CHECK(r.status == 0);
        CHECK(r.output.find("C={") == std::string::npos);
    }

    SECTION("augment emits the collider closure") {
        CommandResult r = run_cli("augment " + kFig1);
        CHECK(r.status == 0);
        CHECK(r.output.find("graph {") == 0);
        CHECK(r.output.find("\"b\" -- \"h\";") != std::string::npos);
    }

    SECTION("dot emits the mixed graph") {
        CommandResult r = run_cli("dot " + kFig1);
        CHECK(r.status == 0);
        CHECK(r.output.find("digraph {") == 0);
        CHECK(r.output.find("[dir=both]") != std::string::npos);
    }
}

TEST_CASE("random and validate subcommands") {
    SECTION("random is reproducible") {
        CommandResult first = run_cli("random --n 6 --p-dir 0.3 --p-bi 0.2 --seed 42");
        CommandResult second = run_cli("random --n 6 --p-dir 0.3 --p-bi 0.2 --seed 42");
        CHECK(first.status == 0);
        REQUIRE(first.output == second.output);
    }

    SECTION("random rejects bad parameters") {
        CHECK(run_cli("random --n 0").status == 2);
        CHECK(run_cli("random --n 5 --p-dir 1.5").status == 2);
    }

    SECTION("validate agrees everywhere on a small sweep") {
        CommandResult r =
            run_cli("validate --graphs 10 --n 4 --seed 7 --c-samples 0 --oracle-max-edges 12");
        CHECK(r.status == 0);
        CHECK(r.output.find("disagreements: 0") != std::string::npos);
        CHECK(r.output.find("witness_failures: 0") != std::string::npos);
    }
}

TEST_CASE("help is not an error") {
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("query --help").status == 0);
}
