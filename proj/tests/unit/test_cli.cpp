#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "efrac/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "egyptfrac");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = efrac::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("cli efrac commands") {
    auto r = run({"efrac", "expand", "2/5"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/3 + 1/15\n");
    CHECK(r.err.empty());

    r = run({"efrac", "check", "--base", "2", "1", "1"});
    CHECK(r.code == 1);
    CHECK(r.out.find("z: (1)\n") != std::string::npos);
    CHECK(r.out.find("linear: no\n") != std::string::npos);

    r = run({"efrac", "check", "--base", "3", "1", "T"});
    CHECK(r.code == 0);
    CHECK(r.out.find("linear: yes\n") != std::string::npos);

    CHECK(run({"efrac", "sub", "1/5+1/10+1/20", "1/10+1/30"}).out == "1/5 + 1/20 - 1/30\n");
    CHECK(run({"efrac", "sum", "1/3", "1/3"}).out == "1/2 + 1/6\n");
    CHECK(run({"efrac", "sum", "--disjoint", "1/3", "1/3"}).code == 2);
    CHECK(run({"efrac", "encode", "8"}).out == "[10T]_3\n");
    CHECK(run({"efrac", "encode", "--base", "2", "6"}).out == "[110]_2\n");
    CHECK(run({"efrac", "encode", "--decode", "[10T]_3"}).out == "8\n");
    CHECK(run({"efrac", "encode", "--fraction", "--base", "2", "3/8"}).out == "[0.011]_2\n");
    CHECK(run({"efrac", "encode", "--fraction", "--dual", "--base", "3", "1/6"}).out ==
          "[0.1TTTT...]_3\n[0.01111...]_3\n");
}

TEST_CASE("cli error codes") {
    CHECK(run({"efrac", "expand", "3/2"}).code == 2);
    const auto bad = run({"efrac", "expand", "2/x"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());
    CHECK(run({"efrac", "expand", "--bogus", "2/5"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"nothing"}).code == 2);
    CHECK(run({"efrac", "check", "--base", "5", "1", "1"}).code == 2);
    CHECK(run({"verify", "--prop", "sum2", "--depth", "13"}).code == 3);
    CHECK(run({"fractal", "render", "--depth", "20", "--width", "16"}).code == 3);
    CHECK(run({"fractal", "render", "--width", "8"}).code == 2);
    CHECK(run({"fractal", "member", "--set", "snowflake", "1,0"}).code == 2);
}

TEST_CASE("cli help") {
    for (const auto& path : std::vector<std::vector<std::string>>{
             {}, {"efrac"}, {"efrac", "expand"}, {"efrac", "sum"}, {"efrac", "sub"}, {"efrac", "check"},
             {"efrac", "encode"}, {"fractal"}, {"fractal", "member"}, {"fractal", "render"}, {"fractal", "cloud"},
             {"verify"}}) {
        auto args = path;
        args.push_back("--help");
        const auto r = run(args);
        CAPTURE(r.err);
        CHECK(r.code == 0);
        CHECK(r.out.find("Usage") != std::string::npos);
    }
}

TEST_CASE("cli fractal commands") {
    auto r = run({"fractal", "member", "--set", "sierpinski", "--depth", "8", "1/4,1/8"});
    CHECK(r.code == 0);
    CHECK(r.out == "member\n");
    r = run({"fractal", "member", "--set", "sierpinski", "--depth", "1", "3/8,3/8"});
    CHECK(r.code == 1);
    CHECK(r.out == "not member\n");
    r = run({"fractal", "member", "--set", "snowflake", "--depth", "1", "--trace", "1/3,0"});
    CHECK(r.out == "member\ntrace: 1\n");
    CHECK(run({"fractal", "member", "--digits", "1/2,1/2"}).code == 0);

    const auto dir = std::filesystem::temp_directory_path() / "egyptfrac-cli-test";
    std::filesystem::create_directories(dir);
    const auto svg = dir / "s.svg";
    r = run({"fractal", "render", "--set", "sierpinski", "--depth", "3", "--width", "64", "--out", svg.string()});
    CHECK(r.code == 0);
    CHECK(slurp(svg).find("<svg") != std::string::npos);
    const auto pgm = dir / "s.pgm";
    run({"fractal", "render", "--format", "pgm", "--depth", "4", "--width", "16", "--out", pgm.string()});
    CHECK(slurp(pgm).rfind("P5\n16 16\n255\n", 0) == 0);
    r = run({"fractal", "cloud", "--base", "3", "--len", "1", "--format", "pgm"});
    CHECK(r.out.rfind("P5\n3 3\n255\n", 0) == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli verify") {
    auto r = run({"verify", "--prop", "sum2", "--depth", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("linear_pairs: 27\n") != std::string::npos);
    r = run({"verify", "--prop", "sum3", "--depth", "2", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"z_empty_pairs\":49") != std::string::npos);
    CHECK(run({"verify", "--prop", "bogus"}).code == 2);
    CHECK(run({"verify"}).code == 2);
}
