#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "tricont/continuants.hpp"

#ifndef TRICONT_CLI_PATH
#error "TRICONT_CLI_PATH must point at the built CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() / "tricont_cli_test";
    fs::create_directories(dir);
    fs::path out = dir / ("out" + std::to_string(counter));
    fs::path err = dir / ("err" + std::to_string(counter));
    ++counter;
    std::string cmd = std::string(TRICONT_CLI_PATH) + " " + args + " > " + out.string() +
                      " 2> " + err.string();
    int status = std::system(cmd.c_str());
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

}  // namespace

TEST_CASE("compute emits the canonical text form") {
    RunResult r = run_cli("compute --poly R --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == tricont::r_poly(2).str() + "\n");
    CHECK(r.out == "a2 b0 - b2 + b2 b0 + b2 a1 + b2 b1 b0\n");
}

TEST_CASE("compute emits the json schema") {
    RunResult r = run_cli("compute --poly R --k 1 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          R"({"terms":[{"coef":"-1","word":[]},{"coef":"1","word":["a1"]},)"
          R"({"coef":"1","word":["b1","b0"]}]})"
          "\n");
}

TEST_CASE("enumerate lists both family kinds") {
    RunResult r = run_cli("enumerate --family U --k 5 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[5,3,1]") != std::string::npos);
    CHECK(r.out.find("[5,3]") != std::string::npos);

    RunResult c = run_cli("enumerate --family C --k 5");
    CHECK(c.exit_code == 0);
    CHECK(c.out == "5 3 1\n5 1\n4 1\n3 1\n1\n");
}

TEST_CASE("sequence emits a table") {
    RunResult r = run_cli("sequence --sequence r --nmax 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1, 3, 5, 13, 29, 65\n");
}

TEST_CASE("verify single identity") {
    RunResult r = run_cli("verify --identity c_spec1 --kmax 30 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          R"([{"identity":"c_spec1","k_checked":[0,30],"status":"verified"}])"
          "\n");
}

TEST_CASE("repeated runs are byte-identical") {
    for (const char* args : {"compute --poly P --k 5 --format json",
                             "enumerate --family R --k 4 --format text",
                             "sequence --sequence v_union --nmax 14 --format json"}) {
        CAPTURE(args);
        RunResult first = run_cli(args);
        RunResult second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(second.exit_code == 0);
        CHECK_FALSE(first.out.empty());
        CHECK(first.out == second.out);
    }
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("compute --poly Z --k 1").exit_code == 2);
    CHECK(run_cli("compute --k 1").exit_code == 2);
    CHECK(run_cli("bogus").exit_code == 2);
    CHECK(run_cli("verify --identity nope").exit_code == 2);
    CHECK(run_cli("compute --poly R --k 99").exit_code == 2);
    CHECK(run_cli("sequence --sequence nope --nmax 3").exit_code == 2);
}

TEST_CASE("out flag writes the payload to a file") {
    fs::path dir = fs::temp_directory_path() / "tricont_cli_test";
    fs::create_directories(dir);
    fs::path target = dir / "payload.txt";
    fs::remove(target);
    RunResult r = run_cli("compute --poly R --k 0 --out " + target.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(target);
    std::string line;
    std::getline(in, line);
    CHECK(line == "b0");
}
