#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#ifndef JORDALG_CLI
#error "JORDALG_CLI must point at the command line binary"
#endif

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(JORDALG_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("usage and config errors exit 2") {
    CHECK(run("verify --n 99").code == 2);
    CHECK(run("verify --n 3 --suite nonsense").code == 2);
    CHECK(run("verify --n 3 --suite ''").code == 2);
    CHECK(run("verify --n 3 --window 3:4 --suite contraction").code == 2);
    CHECK(run("verify --n 4 --suite contraction").code == 2);
    CHECK(run("verify --n 3 --format yaml").code == 2);
    CHECK(run("").code == 2);
}

TEST_CASE("passing suite exits 0") {
    Run r = run("verify --n 3 --suite irreps");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("failing suite exits 1") { CHECK(run("verify --n 3 --suite relations").code == 1); }

TEST_CASE("json output is identical across runs") {
    Run a = run("verify --n 3 --suite irreps,limits --format json");
    Run b = run("verify --n 3 --suite irreps,limits --format json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["failures"] == 0);
    CHECK(j["reports"].size() == 2);
}

TEST_CASE("golden bless then compare") {
    auto path = std::filesystem::temp_directory_path() / "jordalg_cli_golden.json";
    std::filesystem::remove(path);
    CHECK(run("golden --n 3 --suite irreps --golden " + path.string()).code == 1);
    CHECK(run("golden --n 3 --suite irreps --golden " + path.string() + " --bless").code == 0);
    CHECK(run("golden --n 3 --suite irreps --golden " + path.string()).code == 0);
    std::filesystem::remove(path);
}

TEST_CASE("emit rmatrix at N = 4") {
    Run r = run("emit rmatrix --n 4 --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"] == 16);
    CHECK(j["cols"] == 16);
}
