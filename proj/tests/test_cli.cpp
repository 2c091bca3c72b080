#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <string>
#include <sys/wait.h>

#ifndef TCHAR_CLI_PATH
#define TCHAR_CLI_PATH "./tchar"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(TCHAR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json first_json(const std::string& out) { return nlohmann::json::parse(out); }

std::string last_line(const std::string& out) {
    std::size_t end = out.find_last_not_of('\n');
    std::size_t start = out.rfind('\n', end);
    return out.substr(start == std::string::npos ? 0 : start + 1,
                      end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST_CASE("decide exit codes and JSON") {
    RunResult yes = run("decide --annihilator \"Z:1\" --gdelta --proper");
    CHECK(yes.exit_code == 0);
    CHECK(first_json(yes.out)["answer"] == "yes");

    RunResult no = run("decide --annihilator \"Z(2):1\" --gdelta --proper");
    CHECK(no.exit_code == 1);
    CHECK(first_json(no.out)["answer"] == "no");

    CHECK(run("decide --annihilator \"Z(2):omega\" --gdelta --proper").exit_code == 0);
    CHECK(run("decide --annihilator \"Z(2):omega + Z(4):1\" --gdelta --proper").exit_code ==
          1);
    CHECK(run("decide --annihilator \"Z((2):1\" --gdelta --proper").exit_code == 2);
    CHECK(run("decide --annihilator \"Z:1\" --proper").exit_code == 1);  // no --gdelta
}

TEST_CASE("member exit codes") {
    RunResult m = run(
        "member --sequence \"model=torus bases=arith(2,1)\" "
        "--element \"model=torus bases=arith(2,1) prefix=[] tail=zero\"");
    CHECK(m.exit_code == 0);
    CHECK(first_json(m.out)["outcome"] == "Member");

    RunResult n = run(
        "member --sequence \"model=product bases=geom(2,2)\" "
        "--element \"model=product bases=geom(2,2) prefix=[] tail=scaledfloor(1/250)\"");
    CHECK(n.exit_code == 1);
    nlohmann::json j = first_json(n.out);
    CHECK(j["outcome"] == "NonMember");
    CHECK(j["limit"] == "1/250");
    CHECK(j["criterion"] == "eq5");
    CHECK(j["trace_len"] == 256);

    RunResult u = run(
        "member --sequence \"model=padic p=2 nk=squares\" "
        "--element \"model=padic p=2 prefix=[] tail=const(1)\"");
    CHECK(u.exit_code == 3);
    CHECK(first_json(u.out)["outcome"] == "Undetermined");

    RunResult mm = run(
        "member --sequence \"model=torus bases=arith(2,1)\" "
        "--element \"model=product bases=geom(2,2) prefix=[] tail=zero\"");
    CHECK(mm.exit_code == 2);
}

TEST_CASE("horizon flag beats the environment") {
    RunResult m = run(
        "--horizon 32 member --sequence \"model=torus bases=arith(2,1)\" "
        "--element \"model=torus bases=arith(2,1) prefix=[] tail=zero\"");
    CHECK(m.exit_code == 0);
    CHECK(first_json(m.out)["trace_len"] == 32);
}

TEST_CASE("pair prints exact angles") {
    RunResult p = run("pair --model padic --p 2 --char 1/8 --element \"[1,1,0]\"");
    CHECK(p.exit_code == 0);
    CHECK(p.out == "3/8\n");

    RunResult t = run(
        "pair --model torus --bases \"arith(2,1)\" --char 6 "
        "--element \"model=torus bases=arith(2,1) prefix=[1] tail=zero\"");
    CHECK(t.out == "0/1\n");

    RunResult pr = run(
        "pair --model product --bases \"arith(2,1)\" --char \"[0,1]\" "
        "--element \"[0,2,0]\"");
    CHECK(pr.out == "2/3\n");

    // an infinite tail yields an interval enclosure of the angle
    RunResult iv = run(
        "pair --model torus --bases \"arith(2,1)\" --char 3 "
        "--element \"model=torus bases=arith(2,1) prefix=[] tail=scaledfloor(1/4)\"");
    CHECK(iv.exit_code == 0);
    CHECK(iv.out.front() == '[');
}

TEST_CASE("encode round trips through the CLI") {
    RunResult e = run("encode --rational 5/6 --bases \"arith(2,1)\"");
    CHECK(e.exit_code == 0);
    CHECK(e.out == "model=torus bases=arith(2,1) prefix=[1,2] tail=zero\n");
    CHECK(run("encode --rational 1/3 --bases \"geom(2,2)\"").exit_code == 2);
    CHECK(run("encode --rational 7/6 --bases \"arith(2,1)\"").exit_code == 2);
}

TEST_CASE("witness emits a parsable report") {
    RunResult w = run("witness --family B --epsilon 2/25 --scale 2");
    CHECK(w.exit_code == 0);
    nlohmann::json summary = nlohmann::json::parse(last_line(w.out));
    CHECK(summary["type"] == "summary");
    CHECK(summary["family"] == "B");
    CHECK(summary["failed"] == 0);
    CHECK(summary["l"] == 9);
    CHECK(summary["s"] == 8);
    CHECK(summary["limit_verdict"]["outcome"] == "NonMember");

    RunResult a = run("witness --descriptor \"Z:1\" --epsilon 2/25 --scale 4");
    CHECK(a.exit_code == 0);
    CHECK(nlohmann::json::parse(last_line(a.out))["family"] == "A");

    RunResult csv = run("witness --family C --bases \"geom(2,2)\" --epsilon 2/25 --scale 8 "
                        "--format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("name,asserted,", 0) == 0);

    CHECK(run("witness --family auto --epsilon 2/25").exit_code == 2);
    CHECK(run("witness --family B --epsilon 1/2 --scale 2").exit_code == 2);
}

TEST_CASE("verify suite") {
    RunResult v = run("verify --suite eq02 --samples 500");
    CHECK(v.exit_code == 0);
    nlohmann::json j = first_json(v.out);
    CHECK(j["suite"] == "eq02");
    CHECK(j["pass"] == true);
    CHECK(run("verify --suite nosuch").exit_code == 2);
}
