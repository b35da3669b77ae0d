#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "sandrank/io.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SANDRANK_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

sandrank::Json json_of(const Run& r) { return sandrank::Json::parse(r.out); }

} // namespace

TEST_CASE("rank on the complete graph") {
    const Run r = run("rank --complete 5 --config '[3,1,3,4,-1]'");
    CHECK(r.code == 0);
    CHECK(json_of(r)["rank"] == 4);
    const Run brute = run("rank --complete 5 --config '[3,1,3,4,-1]' --method bruteforce");
    CHECK(brute.code == 0);
    CHECK(json_of(brute)["rank"] == 4);
    const Run greedy = run("rank --complete 5 --config '[3,1,3,4,-1]' --method greedy --count-ops");
    CHECK(greedy.code == 0);
    CHECK(json_of(greedy)["rank"] == 4);
}

TEST_CASE("parking and stabilization") {
    const auto p = json_of(run("parking --complete 5 --config '[3,1,3,4,-1]'"));
    CHECK(p["parking"] == sandrank::Json::parse("[0,3,0,1,6]"));
    CHECK(p["word"] == "aababbabb");
    const Run s = run("stabilize --complete 3 --config '[2,0,0]'");
    CHECK(s.code == 0);
    CHECK(s.out.find("[0,1,1]") != std::string::npos);
    const Run g = run("recurrent --graph '{\"n\":3,\"edges\":[[1,2,1],[2,3,1],[1,3,1]]}' --config '[0,0,0]'");
    CHECK(g.code == 0);
    CHECK(g.out.find("[1,1,-2]") != std::string::npos);
}

TEST_CASE("words") {
    const auto d = json_of(run("dyck stats abaabb"));
    CHECK(d["prerank"] == 2);
    CHECK(d["area"] == 1);
    const auto s = json_of(run("strip leftright aaabaaabbbabbbaabbabb 13"));
    CHECK(s["left"] == 5);
    CHECK(s["right"] == 6);
}

TEST_CASE("tables and series") {
    const Run t = run("tutte-counts --complete 4 --format csv");
    CHECK(t.code == 0);
    CHECK(t.out.rfind("degree,count,count_by_level", 0) == 0);
    const Run id = run("genfun identity --max-n 3 --trunc 5");
    CHECK(id.code == 0);
    const Run table = run("rank-table --complete 4 --sink-min -2 --sink-max 6");
    CHECK(table.code == 0);
}

TEST_CASE("errors and exit codes") {
    CHECK(run("rank --complete 5").code == 2);
    CHECK(run("no-such-command").code == 2);
    CHECK(run("rank --complete 5 --config '[1,2]'").code == 1);
    CHECK(run("rank --complete 5 --wheel 4 --config '[0,0,0,0,0]'").code == 2);
    CHECK(run("rank --complete 5 --config 'not json'").code == 1);
}
