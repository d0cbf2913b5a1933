#include <cstdio>
#include <string>

#include "doctest.h"

#include "cli_runner.hpp"

namespace {

cli::Result run_cli(const std::string& args, const std::string& env = "",
                    bool merge_stderr = false) {
    auto r = cli::run(args, env, merge_stderr);
    REQUIRE(r.code >= 0);
    return r;
}

using cli::quote;

}  // namespace

TEST_CASE("enumerate matches the listed families") {
    auto r = run_cli("enumerate --family deutsch --n 4");
    CHECK(r.code == 0);
    CHECK(r.out == "U U U 3\nU U 1 1\nU 1 U 1\n");

    auto ls = run_cli("enumerate --family little-schroder --n 2");
    CHECK(ls.code == 0);
    CHECK(ls.out == "EENN\nEDN\nENEN\n");

    auto eps = run_cli("enumerate --family bounded-seq --i 0 --j 9");
    CHECK(eps.code == 0);
    CHECK(eps.out == "\n");
}

TEST_CASE("enumerate json format") {
    auto r = run_cli("enumerate --family deutsch --n 2 --format json");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"family\":\"deutsch\",\"n\":2,\"text\":\"U 1\"}\n");
}

TEST_CASE("map reproduces the worked examples") {
    auto f = run_cli(
        "map --bijection schroder --direction forward --input EDENEDNDDNEN");
    CHECK(f.code == 0);
    CHECK(f.out == "1 0 0 0 2 3 0 8\n");

    auto k = run_cli("map --bijection kimberling --direction forward --j 3 "
                     "--input " + quote("1 4 3 5"));
    CHECK(k.code == 0);
    CHECK(k.out == "0,0 2,2 4,3 5,3\n");

    auto d = run_cli("map --bijection deutsch --direction backward --input " +
                     quote("3 1 D 1 2 D 2 D D D"));
    CHECK(d.code == 0);
    CHECK(d.out == "U U U U 1 U U U 1 U U 3 1 3\n");
}

TEST_CASE("map trace output") {
    auto r = run_cli(
        "map --bijection schroder --direction forward --trace --input "
        "EDENEDNDDNEN");
    CHECK(r.code == 0);
    CHECK(r.out.find("swap pos=6 value=6→5\n") == 0);
    CHECK(r.out.find("1 0 0 0 2 3 0 8\n") != std::string::npos);

    auto d = run_cli("map --bijection deutsch --direction backward --trace "
                     "--input 31D12D2DDD");
    CHECK(d.code == 0);
    CHECK(d.out.find("pop=4 absorbed=0\n") == 0);
    CHECK(d.out.find("pop=9 absorbed=2\n") != std::string::npos);
}

TEST_CASE("map round trip through the CLI is byte-exact") {
    auto forward = run_cli(
        "map --bijection deutsch --direction forward --input " +
        quote("U U U U 1 U U U 1 U U 3 1 3"));
    REQUIRE(forward.code == 0);
    std::string image = forward.out.substr(0, forward.out.size() - 1);
    auto back = run_cli("map --bijection deutsch --direction backward --input " +
                        quote(image));
    CHECK(back.out == "U U U U 1 U U U 1 U U 3 1 3\n");
}

TEST_CASE("verify passes and prints the count line") {
    auto r = run_cli("verify --bijection schroder --max 5");
    CHECK(r.code == 0);
    CHECK(r.out.find("counts: 1 3 11 45 197\n") != std::string::npos);
    CHECK(r.out.find("result: PASS") != std::string::npos);

    auto d = run_cli("verify --bijection deutsch --max 2");
    CHECK(d.code == 0);
    CHECK(d.out.find("counts: 1 0 1\n") != std::string::npos);

    auto j = run_cli("verify --bijection deutsch --max 3 --json");
    CHECK(j.code == 0);
    CHECK(j.out.find("\"pass\": true") != std::string::npos);

    auto s = run_cli("verify --bijection kimberling --max 2 --max-j 1 --serial");
    CHECK(s.code == 0);

    // a bare --max on kimberling (and all) checks the antidiagonal triangle
    auto all = run_cli("verify --bijection all --max 4");
    CHECK(all.code == 0);
    CHECK(all.out.find("bounds: i+j<=4") != std::string::npos);
}

TEST_CASE("exit code contract") {
    // 2: usage
    CHECK(run_cli("enumerate --family deutsch").code == 2);
    CHECK(run_cli("enumerate --family nosuch --n 3").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("map --bijection kimberling --direction forward --input 1")
              .code == 2);  // missing --j
    CHECK(run_cli("enumerate --family little-schroder --n 0").code == 2);

    // 3: resource limit
    CHECK(run_cli("enumerate --family little-schroder --n 4",
                  "LATTICEBIJ_MAX_OBJECTS=10")
              .code == 3);

    // 4: invalid domain object
    CHECK(run_cli("map --bijection schroder --direction forward --input DEN")
              .code == 4);
    auto msg = run_cli(
        "map --bijection schroder --direction forward --input DEN", "", true);
    CHECK(msg.out.find("D starts on diagonal") != std::string::npos);

    // 5: unwritable output
    CHECK(run_cli("render --family deutsch --input " + quote("U 1") +
                  " --out /nonexistent-dir/x.svg")
              .code == 5);
    // 5: unreadable reference
    CHECK(run_cli("verify --bijection schroder --max 3 --ref /nonexistent.ref")
              .code == 5);

    // 1: verification failure (reference disagrees)
    std::string bad_ref = cli::temp_path(".ref");
    {
        FILE* f = fopen(bad_ref.c_str(), "w");
        REQUIRE(f);
        fputs("1 1\n2 999\n", f);
        fclose(f);
    }
    CHECK(run_cli("verify --bijection schroder --max 3 --ref " + bad_ref).code ==
          1);
    std::remove(bad_ref.c_str());
}

TEST_CASE("crosscheck against the shipped reference files") {
    auto ls = run_cli("verify --bijection schroder --max 5 --ref " +
                      std::string(LATBIJ_DATA_DIR) + "/a001003.txt");
    CHECK(ls.code == 0);
    auto de = run_cli("verify --bijection deutsch --max 8 --ref " +
                      std::string(LATBIJ_DATA_DIR) + "/a090345.txt");
    CHECK(de.code == 0);
    auto ki = run_cli("verify --bijection kimberling --max 4 --max-j 4 --ref " +
                      std::string(LATBIJ_DATA_DIR) + "/a049600.txt");
    CHECK(ki.code == 0);
}

TEST_CASE("render to stdout and to a file") {
    auto ascii = run_cli("render --family deutsch --input " + quote("U 1"));
    CHECK(ascii.code == 0);
    CHECK(ascii.out == ". o .\n / \\\no . o\n");

    std::string path = cli::temp_path(".svg");
    auto svg = run_cli("render --family ramirez --input " +
                       quote("3 1 D 1 2 D 2 D D D") +
                       " --format svg --out " + path);
    CHECK(svg.code == 0);
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f);
    std::string content;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) content.append(buf, got);
    fclose(f);
    std::remove(path.c_str());
    CHECK(content.find("10,70 70,50 90,30") != std::string::npos);
}
